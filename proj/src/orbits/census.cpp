#include "ybn/orbits/census.hpp"

#include <functional>

#include "ybn/error.hpp"

namespace ybn::orbits {

Census orbit_census(const ybe::SetSolution& s, std::size_t n, const CensusOptions& options) {
  if (n == 0) throw InvalidArgument("census degree must be positive");
  const std::size_t m = s.size();
  auto d = ybe::diagonal(s);
  long double total_ld = 1;
  for (std::size_t i = 0; i < n; ++i) total_ld *= static_cast<long double>(m);
  if (total_ld > static_cast<long double>(options.max_words))
    throw TooLarge(std::to_string(m) + "^" + std::to_string(n) + " words exceed the census budget");
  const std::uint64_t total = static_cast<std::uint64_t>(total_ld);

  std::vector<std::uint64_t> weight(n);
  weight[n - 1] = 1;
  for (std::size_t i = n - 1; i-- > 0;) weight[i] = weight[i + 1] * m;

  std::vector<char> visited(total, 0);
  std::vector<std::uint64_t> reps;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (visited[start]) continue;
    // every smaller code already belongs to an earlier orbit, so start is this orbit's least word
    visited[start] = 1;
    queue.assign(1, start);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      std::uint64_t code = queue[h];
      for (std::size_t k = 0; k + 1 < n; ++k) {
        auto p = static_cast<Letter>(code / weight[k] % m);
        auto q = static_cast<Letter>(code / weight[k + 1] % m);
        auto [a, b] = s(p, q);
        std::uint64_t next = code - p * weight[k] - q * weight[k + 1] + a * weight[k] + b * weight[k + 1];
        if (!visited[next]) {
          visited[next] = 1;
          queue.push_back(next);
        }
      }
    }
    reps.push_back(start);
    sizes.push_back(queue.size());
  }

  Census census;
  census.n = n;
  census.m = m;
  census.orbits.resize(reps.size());
  auto classify = [&](std::size_t i) {
    OrbitReport& r = census.orbits[i];
    r.representative = decode(reps[i], n, m);
    r.size = sizes[i];
    auto cls = lambda_classify(s, d, r.representative);
    r.lambda = cls.lambda;
    r.lambda_element = std::move(cls.element);
  };
  for_each_index(reps.size(), options.execution, classify);

  std::map<Partition, CensusRow, std::greater<>> rows;
  for (const auto& r : census.orbits) {
    auto& row = rows[r.lambda];
    if (row.count == 0) {
      row.lambda = r.lambda;
      row.size = r.size;
    } else if (row.size != r.size) {
      row.uniform_size = false;
    }
    ++row.count;
  }
  for (auto& [lambda, row] : rows) census.rows.push_back(row);
  return census;
}

}  // namespace ybn::orbits
