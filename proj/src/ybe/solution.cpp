#include "ybn/ybe/solution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "ybn/error.hpp"

namespace ybn::ybe {

SetSolution::SetSolution(std::size_t size, std::vector<std::pair<Letter, Letter>> table)
    : size_(size), table_(std::move(table)) {
  if (size == 0) throw InvalidArgument("solution on the empty set");
  if (table_.size() != size * size) throw DimensionMismatch("solution table must have m*m entries");
  for (const auto& [a, b] : table_)
    if (a >= size || b >= size) throw InvalidArgument("solution table entry outside X");
}

std::optional<std::vector<std::pair<Letter, Letter>>> SetSolution::inverse_table() const {
  std::vector<std::pair<Letter, Letter>> inv(table_.size());
  std::vector<char> hit(table_.size(), 0);
  for (Letter i = 0; i < size_; ++i)
    for (Letter j = 0; j < size_; ++j) {
      auto [a, b] = (*this)(i, j);
      std::size_t idx = a * size_ + b;
      if (hit[idx]) return std::nullopt;
      hit[idx] = 1;
      inv[idx] = {i, j};
    }
  return inv;
}

namespace {

using Triple = std::array<Letter, 3>;

Triple r12(const SetSolution& s, Triple t) {
  auto [a, b] = s(t[0], t[1]);
  return {a, b, t[2]};
}

Triple r23(const SetSolution& s, Triple t) {
  auto [b, c] = s(t[1], t[2]);
  return {t[0], b, c};
}

bool braid_holds(const SetSolution& s, Triple t) {
  return r12(s, r23(s, r12(s, t))) == r23(s, r12(s, r23(s, t)));
}

bool bijective_row(const SetSolution& s, Letter fixed, bool sigma) {
  std::vector<char> hit(s.size(), 0);
  for (Letter x = 0; x < s.size(); ++x) {
    Letter y = sigma ? s.sigma(fixed, x) : s.tau(fixed, x);
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

}  // namespace

VerificationReport verify_solution(const SetSolution& s, Execution exec) {
  VerificationReport report;
  const Letter m = static_cast<Letter>(s.size());
  std::vector<std::vector<Triple>> per_i(m);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(m); ++i)
      for (Letter j = 0; j < m; ++j)
        for (Letter k = 0; k < m; ++k)
          if (!braid_holds(s, {static_cast<Letter>(i), j, k})) per_i[i].push_back({static_cast<Letter>(i), j, k});
  } else {
    for (Letter i = 0; i < m; ++i)
      for (Letter j = 0; j < m; ++j)
        for (Letter k = 0; k < m; ++k)
          if (!braid_holds(s, {i, j, k})) per_i[i].push_back({i, j, k});
  }
  for (auto& v : per_i) report.ybe_failures.insert(report.ybe_failures.end(), v.begin(), v.end());
  report.is_ybe = report.ybe_failures.empty();

  for (Letter i = 0; i < m; ++i) {
    if (!bijective_row(s, i, true)) report.degenerate_sigma.push_back(i);
    if (!bijective_row(s, i, false)) report.degenerate_tau.push_back(i);
  }
  report.is_nondegenerate = report.degenerate_sigma.empty() && report.degenerate_tau.empty();

  for (Letter i = 0; i < m; ++i)
    for (Letter j = 0; j < m; ++j) {
      auto [a, b] = s(i, j);
      if (s(a, b) != std::pair<Letter, Letter>{i, j}) report.involution_failures.push_back({i, j});
    }
  report.is_involutive = report.involution_failures.empty();
  report.is_bijective = s.inverse_table().has_value();
  return report;
}

bool is_nondegenerate(const SetSolution& s) {
  for (Letter i = 0; i < s.size(); ++i)
    if (!bijective_row(s, i, true) || !bijective_row(s, i, false)) return false;
  return true;
}

bool is_involutive(const SetSolution& s) {
  for (Letter i = 0; i < s.size(); ++i)
    for (Letter j = 0; j < s.size(); ++j) {
      auto [a, b] = s(i, j);
      if (s(a, b) != std::pair<Letter, Letter>{i, j}) return false;
    }
  return true;
}

SetSolution flip_solution(std::size_t size) {
  Permutation id(size);
  std::iota(id.begin(), id.end(), 0);
  return permutation_solution(id);
}

SetSolution permutation_solution(const Permutation& f) {
  const std::size_t m = f.size();
  Permutation inv(m, static_cast<Letter>(m));
  for (Letter i = 0; i < m; ++i) {
    if (f[i] >= m || inv[f[i]] != m) throw InvalidArgument("permutation_solution needs a bijection");
    inv[f[i]] = i;
  }
  std::vector<std::pair<Letter, Letter>> table(m * m);
  for (Letter i = 0; i < m; ++i)
    for (Letter j = 0; j < m; ++j) table[i * m + j] = {inv[j], f[i]};
  return SetSolution(m, std::move(table));
}

Letter Diagonal::power(Letter i, long k) const {
  long cycle = 1;
  for (Letter x = forward[i]; x != i; x = forward[x]) ++cycle;
  long n = ((k % cycle) + cycle) % cycle;
  Letter x = i;
  for (long t = 0; t < n; ++t) x = forward[x];
  return x;
}

Diagonal diagonal(const SetSolution& s) {
  if (!is_nondegenerate(s)) throw NotNondegenerate("diagonal map needs a non-degenerate solution");
  if (!is_involutive(s)) throw NotInvolutive("diagonal map needs an involutive solution");
  const Letter m = static_cast<Letter>(s.size());
  Diagonal d;
  d.forward.assign(m, m);
  d.inverse.assign(m, m);
  for (Letter i = 0; i < m; ++i)
    for (Letter j = 0; j < m; ++j) {
      if (s.tau(i, j) == i) d.forward[i] = j;   // D(i) = tau_i^{-1}(i)
      if (s.sigma(i, j) == i) d.inverse[i] = j;  // D^{-1}(i) = sigma_i^{-1}(i)
    }
  for (Letter i = 0; i < m; ++i)
    if (d.forward[i] == m || d.inverse[i] == m || d.inverse[d.forward[i]] != i)
      throw NotNondegenerate("diagonal map is not a bijection");
  return d;
}

namespace {

bool closed(const SetSolution& s, const std::vector<char>& in) {
  for (Letter i = 0; i < s.size(); ++i) {
    if (!in[i]) continue;
    for (Letter j = 0; j < s.size(); ++j) {
      if (!in[j]) continue;
      auto [a, b] = s(i, j);
      if (!in[a] || !in[b]) return false;
    }
  }
  return true;
}

// Advances a sorted k-combination of {0..m-1}; false when exhausted.
bool next_combination(std::vector<Letter>& c, Letter m) {
  std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < m - k + i) {
      ++c[i];
      for (std::size_t t = i + 1; t < k; ++t) c[t] = c[t - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::pair<Subset, Subset>> decompose(const SetSolution& s) {
  const Letter m = static_cast<Letter>(s.size());
  if (m > 16) throw TooLarge("decomposition search is limited to m <= 16");
  for (Letter k = 1; k < m; ++k) {
    Subset y(k);
    std::iota(y.begin(), y.end(), 0);
    do {
      std::vector<char> in_y(m, 0);
      for (auto x : y) in_y[x] = 1;
      std::vector<char> in_z(m, 0);
      for (Letter x = 0; x < m; ++x) in_z[x] = !in_y[x];
      if (closed(s, in_y) && closed(s, in_z)) {
        Subset z;
        for (Letter x = 0; x < m; ++x)
          if (in_z[x]) z.push_back(x);
        return std::make_pair(y, z);
      }
    } while (next_combination(y, m));
  }
  return std::nullopt;
}

SetSolution restrict(const SetSolution& s, const Subset& part) {
  const Letter m = static_cast<Letter>(s.size());
  std::vector<Letter> index(m, m);
  for (Letter t = 0; t < part.size(); ++t) index.at(part[t]) = t;
  std::vector<std::pair<Letter, Letter>> table;
  table.reserve(part.size() * part.size());
  for (auto i : part)
    for (auto j : part) {
      auto [a, b] = s(i, j);
      if (index[a] == m || index[b] == m) throw InvalidArgument("subset is not closed under r");
      table.push_back({index[a], index[b]});
    }
  return SetSolution(part.size(), std::move(table));
}

std::vector<Subset> finest_decomposition(const SetSolution& s) {
  std::vector<Subset> out;
  std::vector<Subset> pending{Subset(s.size())};
  std::iota(pending[0].begin(), pending[0].end(), 0);
  while (!pending.empty()) {
    Subset part = pending.back();
    pending.pop_back();
    if (part.size() < 2) {
      out.push_back(part);
      continue;
    }
    auto split = decompose(restrict(s, part));
    if (!split) {
      out.push_back(part);
      continue;
    }
    Subset y, z;
    for (auto t : split->first) y.push_back(part[t]);
    for (auto t : split->second) z.push_back(part[t]);
    pending.push_back(z);
    pending.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> phi_invariant(const SetSolution& s) {
  const std::size_t m = s.size();
  std::vector<char> seen(m * m, 0);
  std::vector<std::size_t> counts(1, 0);
  for (Letter i = 0; i < m; ++i)
    for (Letter j = 0; j < m; ++j) {
      if (seen[i * m + j]) continue;
      std::size_t len = 0;
      std::pair<Letter, Letter> cur{i, j};
      do {
        seen[cur.first * m + cur.second] = 1;
        cur = s(cur.first, cur.second);
        ++len;
        if (len > m * m) throw InvalidArgument("r is not a bijection of X x X");
      } while (cur != std::pair<Letter, Letter>{i, j});
      if (counts.size() <= len) counts.resize(len + 1, 0);
      ++counts[len];
    }
  return counts;
}

bool is_transitive(const SetSolution& s) {
  const Letter m = static_cast<Letter>(s.size());
  std::vector<char> seen(m, 0);
  std::vector<Letter> queue{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Letter x = queue[h];
    for (Letter i = 0; i < m; ++i)
      for (Letter y : {s.sigma(i, x), s.tau(i, x)})
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
  }
  return queue.size() == m;
}

std::string cycle_string(const Permutation& p, Letter offset) {
  std::vector<char> seen(p.size(), 0);
  std::ostringstream out;
  for (Letter i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out << '(';
    Letter x = i;
    bool first = true;
    do {
      seen[x] = 1;
      if (!first) out << ' ';
      out << x + offset;
      first = false;
      x = p[x];
    } while (x != i);
    out << ')';
  }
  std::string text = out.str();
  return text.empty() ? "id" : text;
}

}  // namespace ybn::ybe
