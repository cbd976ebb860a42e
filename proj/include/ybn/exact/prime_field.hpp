#pragma once

#include <cstdint>
#include <vector>

#include "ybn/exact/cyclotomic.hpp"

namespace ybn::exact {

struct PrimeFieldElement {
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;
  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;
};

bool is_prime(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p);

/// Smallest primes above 2^30 with p = 1 mod N. Primes stay below 2^32.
std::vector<std::uint64_t> specialization_primes(long order, std::size_t count = 2);

/// Smallest positive integer of multiplicative order N mod p.
std::uint64_t root_of_order(long order, std::uint64_t p);

/// Image of x under zeta_N -> root_of_order(N, p).
PrimeFieldElement specialize(const CycloElement& x, std::uint64_t p);

}  // namespace ybn::exact
