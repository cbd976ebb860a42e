#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ybn::orbits {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<std::uint32_t> parts;

  Partition() = default;
  explicit Partition(std::vector<std::uint32_t> p);

  std::uint32_t weight() const;
  std::size_t length() const { return parts.size(); }
  std::uint32_t largest() const { return parts.empty() ? 0 : parts.front(); }
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;
};

std::uint64_t factorial(std::uint32_t n);
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// n! / (lambda_1! ... lambda_k!)
std::uint64_t multinomial(const Partition& lambda);

/// Distinct rearrangements of lambda padded with zeros to m parts.
std::uint64_t perm_count(const Partition& lambda, std::uint32_t m);

/// All partitions of n with at most m parts, largest first in reverse lexicographic order.
std::vector<Partition> partitions(std::uint32_t n, std::uint32_t m);

}  // namespace ybn::orbits
