#include "ybn/orbits/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "ybn/error.hpp"

namespace ybn::orbits {

Partition::Partition(std::vector<std::uint32_t> p) : parts(std::move(p)) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0U), parts.end());
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
    throw InvalidArgument("partition parts must be weakly decreasing");
}

std::uint32_t Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0U); }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

std::uint64_t factorial(std::uint32_t n) {
  if (n > 20) throw TooLarge("factorial overflows 64 bits");
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t multinomial(const Partition& lambda) {
  std::uint64_t result = 1;
  std::uint64_t used = 0;
  for (auto part : lambda.parts) {
    used += part;
    result *= binomial(used, part);
  }
  return result;
}

std::uint64_t perm_count(const Partition& lambda, std::uint32_t m) {
  if (lambda.length() > m) return 0;
  std::map<std::uint32_t, std::uint64_t> mult;
  for (auto part : lambda.parts) ++mult[part];
  mult[0] += m - lambda.length();
  std::uint64_t result = 1;
  std::uint64_t used = 0;
  for (const auto& [part, k] : mult) {
    used += k;
    result *= binomial(used, k);
  }
  return result;
}

std::vector<Partition> partitions(std::uint32_t n, std::uint32_t m) {
  std::vector<Partition> out;
  std::vector<std::uint32_t> cur;
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t remaining, std::uint32_t cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (cur.size() == m) return;
    for (std::uint32_t part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace ybn::orbits
