#include "ybn/exact/prime_field.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "ybn/error.hpp"

namespace ybn::exact {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
  unsigned __int128 result = 1 % p;
  unsigned __int128 b = base % p;
  while (exponent > 0) {
    if (exponent & 1) result = result * b % p;
    b = b * b % p;
    exponent >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for 64-bit inputs with these bases.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> specialization_primes(long order, std::size_t count) {
  if (order < 1) throw InvalidArgument("order must be positive");
  const std::uint64_t n = static_cast<std::uint64_t>(order);
  std::vector<std::uint64_t> primes;
  std::uint64_t start = (1ULL << 30) + 1;
  // first candidate > 2^30 that is 1 mod N
  std::uint64_t p = start + ((n - (start - 1) % n) % n);
  for (; primes.size() < count; p += n) {
    if (p >= (1ULL << 32)) throw BadPrime("no specialization prime below 2^32");
    if (is_prime(p)) primes.push_back(p);
  }
  return primes;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool has_order(std::uint64_t x, std::uint64_t order, const std::vector<std::uint64_t>& factors, std::uint64_t p) {
  if (pow_mod(x, order, p) != 1) return false;
  for (auto f : factors)
    if (pow_mod(x, order / f, p) == 1) return false;
  return true;
}

std::mutex omega_mutex;
std::map<std::pair<long, std::uint64_t>, std::uint64_t>& omega_cache() {
  static std::map<std::pair<long, std::uint64_t>, std::uint64_t> cache;
  return cache;
}

}  // namespace

std::uint64_t root_of_order(long order, std::uint64_t p) {
  if (order < 1) throw InvalidArgument("order must be positive");
  if (!is_prime(p) || p >= (1ULL << 32)) throw BadPrime("modulus " + std::to_string(p) + " is not a usable prime");
  const std::uint64_t n = static_cast<std::uint64_t>(order);
  if ((p - 1) % n != 0) throw BadPrime(std::to_string(p) + " is not 1 mod " + std::to_string(order));
  {
    std::lock_guard<std::mutex> lock(omega_mutex);
    auto it = omega_cache().find({order, p});
    if (it != omega_cache().end()) return it->second;
  }
  std::uint64_t omega = 1;
  if (n > 1) {
    auto order_factors = prime_factors(n);
    // A generator h of the order-N subgroup; its primitive powers are exactly the elements of order N.
    std::uint64_t h = 0;
    for (std::uint64_t a = 2; h == 0; ++a) {
      std::uint64_t cand = pow_mod(a, (p - 1) / n, p);
      if (has_order(cand, n, order_factors, p)) h = cand;
    }
    omega = p;
    std::uint64_t power = 1;
    for (std::uint64_t k = 1; k <= n; ++k) {
      power = static_cast<std::uint64_t>(static_cast<unsigned __int128>(power) * h % p);
      if (std::gcd(k, n) == 1 && power < omega) omega = power;
    }
  }
  std::lock_guard<std::mutex> lock(omega_mutex);
  omega_cache()[{order, p}] = omega;
  return omega;
}

PrimeFieldElement specialize(const CycloElement& x, std::uint64_t p) {
  std::uint64_t omega = root_of_order(x.order(), p);
  const mpz_class modulus(static_cast<unsigned long>(p));
  std::uint64_t acc = 0;
  std::uint64_t power = 1;
  for (const auto& c : x.coeffs()) {
    if (!c.is_zero()) {
      mpz_class den = c.denominator() % modulus;
      if (den == 0) throw BadPrime("denominator vanishes mod " + std::to_string(p));
      mpz_class num = c.numerator() % modulus;
      if (num < 0) num += modulus;
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
      mpz_class v = num * inv % modulus;
      std::uint64_t value = v.get_ui();
      acc = (acc + static_cast<std::uint64_t>(static_cast<unsigned __int128>(value) * power % p)) % p;
    }
    power = static_cast<std::uint64_t>(static_cast<unsigned __int128>(power) * omega % p);
  }
  return {acc, p};
}

}  // namespace ybn::exact
