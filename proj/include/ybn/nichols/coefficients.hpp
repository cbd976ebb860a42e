#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ybn/exact/cyclotomic.hpp"
#include "ybn/ybe/solution.hpp"

namespace ybn::nichols {

using exact::CycloElement;
using ybe::Letter;
using ybe::SetSolution;

/// R_{i,j} on a set-theoretic solution; c(w_i w_j) = R_{i,j} w_{sigma_i(j)} w_{tau_j(i)}.
class CoefficientSystem {
 public:
  const SetSolution& solution() const { return solution_; }
  std::size_t size() const { return solution_.size(); }
  long order() const { return order_; }
  const CycloElement& operator()(Letter i, Letter j) const { return table_[i * size() + j]; }
  const std::vector<CycloElement>& table() const { return table_; }

 private:
  CoefficientSystem(SetSolution s, long order, std::vector<CycloElement> table)
      : solution_(std::move(s)), order_(order), table_(std::move(table)) {}

  friend CoefficientSystem validate_coefficients(SetSolution, std::vector<CycloElement>);

  SetSolution solution_;
  long order_;
  std::vector<CycloElement> table_;
};

/// Triples (i, j, k) where the hexagon identity fails. Table entries must share one order.
std::vector<std::array<Letter, 3>> hexagon_failures(const SetSolution& s, const std::vector<CycloElement>& table);

/// Brings every entry to the lcm order, checks the solution and all m^3 hexagon triples.
CoefficientSystem validate_coefficients(SetSolution s, std::vector<CycloElement> table);

struct DiagonalCoefficientReport {
  bool lemma_holds = true;                          // R_{D(j),j} = R_{D tau_k(j), tau_k(j)}
  std::vector<std::pair<Letter, Letter>> failures;  // (j, k)
  bool constant = true;
  std::vector<CycloElement> values;  // R_{D(i),i} per i
  std::optional<CycloElement> q;     // set when constant
};

DiagonalCoefficientReport diagonal_coefficient_check(const CoefficientSystem& cs);

struct TheoremHypotheses {
  bool involutive = false;
  bool constant_q = false;
  std::optional<CycloElement> q;
  std::optional<long> root_order;  // n with q primitive n-th root of unity
  bool inverse_pairs = false;      // R_{i,j} R_{r(i,j)} = 1 off the fixed pairs
  bool holds() const { return involutive && constant_q && root_order && *root_order >= 2 && inverse_pairs; }
};

TheoremHypotheses theorem_hypotheses(const CoefficientSystem& cs);

/// q on the fixed pairs (D(j), j), 1 elsewhere.
CoefficientSystem canonical_coefficients(const SetSolution& s, const CycloElement& q, bool theorem_mode = false);
/// Per-letter variant: R_{D(j),j} = q[j].
CoefficientSystem canonical_coefficients(const SetSolution& s, const std::vector<CycloElement>& q,
                                         bool theorem_mode = false);

/// Restriction to an r-closed subset, relabelled in increasing order.
CoefficientSystem restrict(const CoefficientSystem& cs, const ybe::Subset& part);

}  // namespace ybn::nichols
