#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ybn/parallel.hpp"

namespace ybn::ybe {

using Letter = std::uint32_t;
using Permutation = std::vector<Letter>;

/// r(i, j) = (sigma_i(j), tau_j(i)) on X = {0, ..., m-1}, stored row-major.
class SetSolution {
 public:
  SetSolution(std::size_t size, std::vector<std::pair<Letter, Letter>> table);

  std::size_t size() const { return size_; }
  const std::pair<Letter, Letter>& operator()(Letter i, Letter j) const { return table_[i * size_ + j]; }
  Letter sigma(Letter i, Letter j) const { return table_[i * size_ + j].first; }
  Letter tau(Letter j, Letter i) const { return table_[i * size_ + j].second; }
  const std::vector<std::pair<Letter, Letter>>& table() const { return table_; }

  /// Inverse of r as a map on X x X, when r is bijective.
  std::optional<std::vector<std::pair<Letter, Letter>>> inverse_table() const;

  friend bool operator==(const SetSolution&, const SetSolution&) = default;

 private:
  std::size_t size_;
  std::vector<std::pair<Letter, Letter>> table_;
};

struct VerificationReport {
  bool is_ybe = true;
  bool is_nondegenerate = true;
  bool is_involutive = true;
  bool is_bijective = true;
  std::vector<std::array<Letter, 3>> ybe_failures;
  std::vector<std::pair<Letter, Letter>> involution_failures;
  std::vector<Letter> degenerate_sigma;  // i with sigma_i not bijective
  std::vector<Letter> degenerate_tau;    // j with tau_j not bijective
};

VerificationReport verify_solution(const SetSolution& s, Execution exec = Execution::parallel);

bool is_nondegenerate(const SetSolution& s);
bool is_involutive(const SetSolution& s);

SetSolution flip_solution(std::size_t size);
SetSolution permutation_solution(const Permutation& f);

struct Diagonal {
  Permutation forward;
  Permutation inverse;
  Letter apply(Letter i) const { return forward[i]; }
  /// D^k with k of either sign.
  Letter power(Letter i, long k) const;
};

/// Throws NotNondegenerate / NotInvolutive.
Diagonal diagonal(const SetSolution& s);

using Subset = std::vector<Letter>;

/// First bipartition (by size, then lexicographic) closed under r.
std::optional<std::pair<Subset, Subset>> decompose(const SetSolution& s);

/// Restriction of s to a subset closed under r, relabelled 0..|Y|-1 in increasing order.
SetSolution restrict(const SetSolution& s, const Subset& part);

/// Recursive splitting until every part is indecomposable; parts are sorted.
std::vector<Subset> finest_decomposition(const SetSolution& s);

/// l[n] counts r-orbits of size n on X x X (index 0 unused).
std::vector<std::size_t> phi_invariant(const SetSolution& s);

/// The group generated by all sigma_i and tau_j acts transitively.
bool is_transitive(const SetSolution& s);

/// Cycle notation like "(0 2 1)", "id" for the identity.
std::string cycle_string(const Permutation& p, Letter offset = 0);

}  // namespace ybn::ybe
