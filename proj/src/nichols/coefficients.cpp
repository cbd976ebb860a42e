#include "ybn/nichols/coefficients.hpp"

#include "ybn/error.hpp"

namespace ybn::nichols {

std::vector<std::array<Letter, 3>> hexagon_failures(const SetSolution& s, const std::vector<CycloElement>& table) {
  const Letter m = static_cast<Letter>(s.size());
  auto R = [&](Letter a, Letter b) -> const CycloElement& { return table[a * m + b]; };
  std::vector<std::array<Letter, 3>> failures;
  for (Letter i = 0; i < m; ++i)
    for (Letter j = 0; j < m; ++j)
      for (Letter k = 0; k < m; ++k) {
        // c1 c2 c1 on w_i w_j w_k
        Letter a1 = s.sigma(i, j), b1 = s.tau(j, i);
        Letter b2 = s.sigma(b1, k);
        CycloElement lhs = R(i, j) * R(b1, k) * R(a1, b2);
        // c2 c1 c2
        Letter y = s.sigma(j, k), z = s.tau(k, j);
        Letter x2 = s.tau(y, i);
        CycloElement rhs = R(j, k) * R(i, y) * R(x2, z);
        if (!(lhs == rhs)) failures.push_back({i, j, k});
      }
  return failures;
}

CoefficientSystem validate_coefficients(SetSolution s, std::vector<CycloElement> table) {
  const std::size_t m = s.size();
  if (table.size() != m * m) throw DimensionMismatch("coefficient table must have m*m entries");
  long order = 1;
  for (const auto& x : table) {
    if (x.is_zero()) throw InvalidArgument("coefficient table entries must be nonzero");
    order = exact::lcm_order(order, x.order());
  }
  for (auto& x : table) x = x.embed(order);
  auto report = ybe::verify_solution(s, Execution::serial);
  if (!report.is_ybe) throw InvalidArgument("table is not a solution of the braid equation");
  if (!report.is_bijective) throw InvalidArgument("r is not a bijection of X x X");
  auto failures = hexagon_failures(s, table);
  if (!failures.empty()) throw HexagonViolation(std::move(failures));
  return CoefficientSystem(std::move(s), order, std::move(table));
}

DiagonalCoefficientReport diagonal_coefficient_check(const CoefficientSystem& cs) {
  const auto& s = cs.solution();
  auto d = ybe::diagonal(s);
  const Letter m = static_cast<Letter>(s.size());
  DiagonalCoefficientReport report;
  for (Letter i = 0; i < m; ++i) report.values.push_back(cs(d.apply(i), i));
  for (Letter j = 0; j < m; ++j)
    for (Letter k = 0; k < m; ++k) {
      Letter t = s.tau(k, j);
      if (!(cs(d.apply(j), j) == cs(d.apply(t), t))) {
        report.lemma_holds = false;
        report.failures.push_back({j, k});
      }
    }
  for (Letter i = 1; i < m; ++i)
    if (!(report.values[i] == report.values[0])) report.constant = false;
  if (report.constant) report.q = report.values[0];
  return report;
}

TheoremHypotheses theorem_hypotheses(const CoefficientSystem& cs) {
  TheoremHypotheses h;
  const auto& s = cs.solution();
  h.involutive = ybe::is_involutive(s) && ybe::is_nondegenerate(s);
  if (!h.involutive) return h;
  auto diag = diagonal_coefficient_check(cs);
  h.constant_q = diag.constant;
  h.q = diag.q;
  if (h.q) h.root_order = exact::root_of_unity_order(*h.q);
  auto d = ybe::diagonal(s);
  h.inverse_pairs = true;
  const Letter m = static_cast<Letter>(s.size());
  for (Letter i = 0; i < m; ++i)
    for (Letter j = 0; j < m; ++j) {
      if (i == d.apply(j)) continue;
      auto [a, b] = s(i, j);
      if (!(cs(i, j) * cs(a, b)).is_one()) h.inverse_pairs = false;
    }
  return h;
}

CoefficientSystem canonical_coefficients(const SetSolution& s, const std::vector<CycloElement>& q, bool theorem_mode) {
  auto d = ybe::diagonal(s);
  const std::size_t m = s.size();
  if (q.size() != m) throw DimensionMismatch("one diagonal value per letter");
  long order = 1;
  for (const auto& x : q) order = exact::lcm_order(order, x.order());
  std::vector<CycloElement> table(m * m, CycloElement::from_rational(order, exact::Rational(1)));
  for (Letter j = 0; j < m; ++j) table[d.apply(j) * m + j] = q[j].embed(order);
  auto cs = validate_coefficients(s, std::move(table));
  if (theorem_mode) {
    auto h = theorem_hypotheses(cs);
    if (!h.constant_q) throw HypothesesNotMet("q = R_{D(i),i} is not constant");
    if (!h.root_order || *h.root_order < 2) throw HypothesesNotMet("q is not a primitive n-th root of unity with n >= 2");
    if (!h.inverse_pairs) throw HypothesesNotMet("R_{i,j} R_{r(i,j)} != 1 off the fixed pairs");
  }
  return cs;
}

CoefficientSystem canonical_coefficients(const SetSolution& s, const CycloElement& q, bool theorem_mode) {
  return canonical_coefficients(s, std::vector<CycloElement>(s.size(), q), theorem_mode);
}

CoefficientSystem restrict(const CoefficientSystem& cs, const ybe::Subset& part) {
  auto sub = ybe::restrict(cs.solution(), part);
  std::vector<CycloElement> table;
  for (auto i : part)
    for (auto j : part) table.push_back(cs(i, j));
  return validate_coefficients(std::move(sub), std::move(table));
}

}  // namespace ybn::nichols
