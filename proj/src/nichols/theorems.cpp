#include "ybn/nichols/theorems.hpp"

#include "ybn/error.hpp"
#include "ybn/orbits/partition.hpp"

namespace ybn::nichols {

std::uint64_t predicted_dimension(std::uint32_t m, std::uint32_t n, std::uint32_t k) {
  std::uint64_t total = 0;
  for (const auto& lambda : orbits::partitions(k, m))
    if (lambda.largest() + 1 <= n) total += orbits::perm_count(lambda, m);
  return total;
}

std::uint64_t orbit_count_oracle(const CoefficientSystem& cs, std::uint32_t k) {
  auto h = theorem_hypotheses(cs);
  if (!h.holds()) throw HypothesesNotMet("orbit-count oracle needs constant q in G_n and inverse pairs");
  return predicted_dimension(static_cast<std::uint32_t>(cs.size()), static_cast<std::uint32_t>(*h.root_order), k);
}

std::string to_string(TheoremBranch b) {
  switch (b) {
    case TheoremBranch::root_of_unity:
      return "root-of-unity";
    case TheoremBranch::growth:
      return "growth";
    case TheoremBranch::product:
      return "product";
  }
  return "unknown";
}

namespace {

std::uint64_t ipow64(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void compare_dims(TheoremReport& report) {
  const auto& got = report.dims.dims;
  for (std::size_t k = 0; k < got.size() && k < report.expected_dims.size(); ++k)
    if (got[k] != report.expected_dims[k]) report.dims_match = false;
  if (got.size() > report.expected_dims.size()) report.dims_match = false;
}

}  // namespace

TheoremReport theorem_suite(const CoefficientSystem& cs, const TheoremOptions& options) {
  const auto& s = cs.solution();
  if (!ybe::is_involutive(s) || !ybe::is_nondegenerate(s))
    throw HypothesesNotMet("theorem checks need a non-degenerate involutive solution");
  const auto m = static_cast<std::uint32_t>(cs.size());
  auto h = theorem_hypotheses(cs);
  TheoremReport report;

  if (h.constant_q && h.root_order && *h.root_order >= 2) {
    if (!h.inverse_pairs) throw HypothesesNotMet("R_{i,j} R_{r(i,j)} = 1 fails off the fixed pairs");
    const auto n = static_cast<std::uint32_t>(*h.root_order);
    report.branch = TheoremBranch::root_of_unity;
    GradedDimsOptions opts = options.dims;
    opts.expected = [&](std::size_t k) -> std::optional<std::uint64_t> {
      return predicted_dimension(m, n, static_cast<std::uint32_t>(k));
    };
    report.dims = graded_dims(cs, opts);
    for (std::uint32_t k = 0; k <= m * (n - 1) + 1; ++k) report.expected_dims.push_back(predicted_dimension(m, n, k));
    report.expected_total = ipow64(n, m);
    compare_dims(report);
    report.total_match = report.dims.total() == report.expected_total;
    if (options.check_relations) {
      for (auto& r : theorem_relations(cs)) {
        auto check = check_relation(cs, r, opts.execution);
        if (!check.in_kernel) report.relations_pass = false;
        report.relations.emplace_back(std::move(r), check);
      }
    }
    report.summary = "q of order " + std::to_string(n) + ", expected total " + std::to_string(*report.expected_total);
    return report;
  }

  if (h.constant_q && h.q && h.q->is_rational() && !h.root_order) {
    if (!h.inverse_pairs) throw HypothesesNotMet("R_{i,j} R_{r(i,j)} = 1 fails off the fixed pairs");
    report.branch = TheoremBranch::growth;
    GradedDimsOptions opts = options.dims;
    opts.max_degree = options.growth_cap;
    opts.mode = ArithmeticMode::exact;
    report.dims = graded_dims(cs, opts);
    for (std::size_t k = 0; k <= options.growth_cap; ++k) report.expected_dims.push_back(orbits::binomial(k + m - 1, m - 1));
    compare_dims(report);
    report.total_match = report.dims.termination == Termination::cap;
    report.summary = "growth C(k+" + std::to_string(m - 1) + "," + std::to_string(m - 1) +
                     ") up to degree " + std::to_string(options.growth_cap) + ", consistent with GKdim = " +
                     std::to_string(m);
    return report;
  }

  auto parts = ybe::finest_decomposition(s);
  if (parts.size() < 2) throw HypothesesNotMet("q = R_{D(i),i} is neither a constant root of unity nor decomposable");
  report.branch = TheoremBranch::product;
  std::uint64_t expected = 1;
  for (const auto& part : parts) {
    auto sub = restrict(cs, part);
    auto hp = theorem_hypotheses(sub);
    if (!hp.holds()) throw HypothesesNotMet("a part of the decomposition fails the root-of-unity hypotheses");
    report.parts.push_back({part, *hp.root_order});
    expected *= ipow64(static_cast<std::uint64_t>(*hp.root_order), part.size());
  }
  report.dims = graded_dims(cs, options.dims);
  report.expected_total = expected;
  report.total_match = report.dims.total() == report.expected_total;
  report.summary = "product over " + std::to_string(parts.size()) + " parts, expected total " + std::to_string(expected);
  return report;
}

}  // namespace ybn::nichols
