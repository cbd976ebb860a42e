#include "doctest.h"
#include "oracles.hpp"
#include "ybn/catalog/catalog.hpp"
#include "ybn/error.hpp"
#include "ybn/nichols/theorems.hpp"

using namespace ybn;
using namespace ybn::nichols;
using exact::Rational;

namespace {

CycloElement value(const std::string& text) { return catalog::parse_value(text); }

CoefficientSystem shift(std::size_t m, const std::string& q) {
  std::string name = "z" + std::to_string(m) + (m == 4 ? "-shift1" : "-shift");
  return catalog::instantiate(catalog::find_entry(name), {{"q", q}}).system;
}

// Coefficients of ((1 - t^n) / (1 - t))^m: compositions of k into m parts below n.
std::vector<std::uint64_t> bounded_compositions(std::size_t m, std::size_t n) {
  std::vector<std::uint64_t> poly{1};
  for (std::size_t f = 0; f < m; ++f) {
    std::vector<std::uint64_t> next(poly.size() + n - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) next[i + j] += poly[i];
    poly = next;
  }
  poly.push_back(0);
  return poly;
}

}  // namespace

TEST_CASE("hexagon validation") {
  auto z3 = catalog::entry_solution(catalog::find_entry("z3-shift"));
  auto cs = catalog::instantiate(catalog::find_entry("z3-shift")).system;
  CHECK(cs.order() == 3);
  CHECK(hexagon_failures(z3, cs.table()).empty());
  auto table = cs.table();
  table[0] *= CycloElement::from_rational(3, Rational(2));
  CHECK_FALSE(hexagon_failures(z3, table).empty());
  CHECK_THROWS_AS(validate_coefficients(z3, table), HexagonViolation);
  try {
    validate_coefficients(z3, table);
  } catch (const HexagonViolation& e) {
    CHECK(!e.witnesses().empty());
  }
  CHECK_THROWS_AS(validate_coefficients(z3, std::vector<CycloElement>(4, value("1"))), DimensionMismatch);
  // mixed orders are lifted to the lcm
  auto flip = ybe::flip_solution(3);
  std::vector<CycloElement> diag(9, value("1"));
  diag[0] = value("zeta4");
  diag[4] = value("zeta3");
  CHECK(validate_coefficients(flip, diag).order() == 12);
}

TEST_CASE("hexagon identity equals the braid relation on V^3") {
  for (const char* name : {"z2-shift", "z3-shift", "x4-sigma", "w1", "flip2"}) {
    auto s = catalog::entry_solution(catalog::find_entry(name));
    const std::size_t cells = s.size() * s.size();
    std::size_t valid = 0;
    for (int t = 0; t < 60; ++t) {
      std::vector<CycloElement> table(cells, CycloElement::from_rational(4, Rational(1)));
      // sparse random signs keep valid tables reasonably common
      for (auto& x : table)
        if (oracle::below(4) == 0) x = CycloElement::root_power(4, static_cast<long>(oracle::below(4)));
      bool ok = hexagon_failures(s, table).empty();
      valid += ok;
      CHECK(ok == oracle::braid_relation(s, table));
    }
    CAPTURE(valid);
  }
}

TEST_CASE("diagonal coefficient lemma on every validated catalog system") {
  for (const auto& e : catalog::catalog()) {
    if (!e.involutive) continue;
    CAPTURE(e.name);
    auto cs = catalog::instantiate(e).system;
    auto rep = diagonal_coefficient_check(cs);
    CHECK(rep.lemma_holds);
    CHECK(rep.failures.empty());
  }
  auto rep = diagonal_coefficient_check(catalog::instantiate(catalog::find_entry("z4-shift2")).system);
  CHECK_FALSE(rep.constant);
  CHECK_FALSE(rep.q.has_value());
}

TEST_CASE("theorem hypotheses") {
  auto h = theorem_hypotheses(shift(3, "zeta3"));
  CHECK(h.holds());
  CHECK(h.root_order == 3);
  auto g = theorem_hypotheses(shift(2, "2"));
  CHECK_FALSE(g.holds());
  CHECK(g.constant_q);
  CHECK(*g.q == value("2"));
  CHECK_FALSE(theorem_hypotheses(catalog::instantiate(catalog::find_entry("z4-shift2")).system).holds());
}

TEST_CASE("canonical coefficients") {
  auto s = catalog::entry_solution(catalog::find_entry("z3-shift"));
  auto cs = canonical_coefficients(s, value("zeta3"), true);
  CHECK(theorem_hypotheses(cs).holds());
  auto d = ybe::diagonal(s);
  for (ybe::Letter i = 0; i < 3; ++i) CHECK(cs(d.apply(i), i) == value("zeta3"));
  auto per = canonical_coefficients(catalog::entry_solution(catalog::find_entry("z4-shift2")),
                                    std::vector<CycloElement>{value("-1"), value("zeta3"), value("-1"), value("zeta3")});
  // -1 already lies in Q(zeta3)
  CHECK(per.order() == 3);
  for (const auto& e : catalog::catalog()) {
    if (!e.involutive) continue;
    CHECK_NOTHROW(canonical_coefficients(catalog::entry_solution(e), value("-1"), true));
  }
}

TEST_CASE("graded dimensions of catalog entries") {
  struct Case {
    std::string name;
    std::vector<std::uint64_t> dims;
  };
  std::vector<Case> cases = {
      {"z2-shift", {1, 2, 1, 0}},
      {"z3-shift", {1, 3, 6, 7, 6, 3, 1, 0}},
      {"z4-shift1", {1, 4, 6, 4, 1, 0}},
      {"z4-shift2", {1, 4, 8, 10, 8, 4, 1, 0}},
      {"x4-sigma", {1, 4, 6, 4, 1, 0}},
      {"flip3", {1, 3, 3, 1, 0}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    auto g = graded_dims(catalog::instantiate(catalog::find_entry(c.name)).system);
    CHECK(g.dims == c.dims);
    CHECK(g.termination == Termination::zero);
  }
}

TEST_CASE("root of unity dims follow bounded compositions") {
  for (auto [m, q, n] : std::vector<std::tuple<std::size_t, std::string, std::size_t>>{
           {2, "-1", 2}, {2, "zeta3", 3}, {2, "zeta4", 4}, {2, "zeta5", 5}, {3, "-1", 2}, {3, "zeta3", 3}, {4, "-1", 2}}) {
    CAPTURE(m);
    CAPTURE(q);
    auto cs = shift(m, q);
    auto expect = bounded_compositions(m, n);
    auto g = graded_dims(cs);
    CHECK(g.dims == expect);
    for (std::uint32_t k = 0; k < expect.size(); ++k) CHECK(orbit_count_oracle(cs, k) == expect[k]);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= n;
    CHECK(g.total() == total);
  }
}

TEST_CASE("exact, modular and automatic arithmetic agree") {
  for (const char* name : {"z3-shift", "x4-sigma", "z4-shift2"}) {
    auto cs = catalog::instantiate(catalog::find_entry(name)).system;
    GradedDimsOptions ex, mod, aut;
    ex.mode = ArithmeticMode::exact;
    mod.mode = ArithmeticMode::modular;
    aut.exact_cap = 16;
    auto a = graded_dims(cs, ex), b = graded_dims(cs, mod), c = graded_dims(cs, aut);
    CHECK(a.dims == b.dims);
    CHECK(a.dims == c.dims);
    for (std::size_t k = 2; k < b.provenance.size(); ++k) {
      CHECK_FALSE(b.provenance[k].exact);
      CHECK(b.provenance[k].primes.size() == 2);
    }
    auto serial = ex;
    serial.execution = Execution::serial;
    CHECK(graded_dims(cs, serial).dims == a.dims);
  }
}

TEST_CASE("escalation to exact arithmetic") {
  auto cs = catalog::instantiate(catalog::find_entry("z3-shift")).system;
  GradedDimsOptions o;
  o.mode = ArithmeticMode::modular;
  o.force_exact = {3};
  auto g = graded_dims(cs, o);
  CHECK(g.dims == std::vector<std::uint64_t>{1, 3, 6, 7, 6, 3, 1, 0});
  CHECK(g.provenance[3].escalated);
  CHECK(g.provenance[3].exact);
  CHECK(g.provenance[3].reason == "forced");
  CHECK(g.provenance[3].modular_ranks == std::vector<std::uint64_t>{7, 7});
  CHECK_FALSE(g.provenance[4].exact);

  // a wrong expectation sends the degree to exact arithmetic, which keeps the true value
  GradedDimsOptions w;
  w.mode = ArithmeticMode::modular;
  w.expected = [](std::size_t k) -> std::optional<std::uint64_t> {
    if (k == 4) return 5;
    return std::nullopt;
  };
  auto h = graded_dims(cs, w);
  CHECK(h.dims[4] == 6);
  CHECK(h.provenance[4].escalated);
  CHECK(h.provenance[4].reason == "unexpected value 6");
}

TEST_CASE("caps") {
  auto cs = shift(2, "2");
  GradedDimsOptions o;
  o.max_degree = 8;
  auto g = graded_dims(cs, o);
  CHECK(g.termination == Termination::cap);
  CHECK_FALSE(g.total().has_value());
  for (std::uint64_t k = 0; k <= 8; ++k) CHECK(g.dims[k] == k + 1);
  GradedDimsOptions tight;
  tight.dimension_limit = 64;
  auto h = graded_dims(cs, tight);
  CHECK(h.termination == Termination::cap_exceeded);
  CHECK(h.dims.size() == 7);
  CHECK_FALSE(h.note.empty());
  o.max_degree = 0;
  CHECK(graded_dims(cs, o).dims == std::vector<std::uint64_t>{1});
}

TEST_CASE("relations") {
  auto inst = catalog::instantiate(catalog::find_entry("z3-shift"));
  for (const auto& r : inst.relations) CHECK(check_relation(inst.system, r).in_kernel);
  Relation bad{"bad", {{value("1"), {0, 0}}, {value("1"), {1, 1}}}};
  auto check = check_relation(inst.system, bad);
  CHECK_FALSE(check.in_kernel);
  CHECK(check.image_support > 0);
  Relation mixed{"mixed", {{value("1"), {0, 0}}, {value("1"), {1}}}};
  CHECK_THROWS_AS(check_relation(inst.system, mixed), InhomogeneousElement);
  CHECK(to_string(Relation{"", {{value("-1"), {0, 1}}, {value("1"), {2}}}}, 1) == "(-1)*w12 + w3");
  CHECK_THROWS_AS(theorem_relations(catalog::instantiate(catalog::find_entry("z2-shift"), {{"q", "2"}}).system),
                  HypothesesNotMet);
}

TEST_CASE("quadratic relations span the degree-two kernel") {
  for (const char* name : {"z2-shift", "z3-shift", "z4-shift1", "x4-sigma"}) {
    auto cs = catalog::instantiate(catalog::find_entry(name)).system;
    auto g = graded_dims(cs);
    CHECK(quadratic_relation_rank(cs) == cs.size() * cs.size() - g.dims[2]);
  }
}

TEST_CASE("theorem suite branches") {
  auto root = theorem_suite(shift(3, "zeta3"));
  CHECK(root.branch == TheoremBranch::root_of_unity);
  CHECK(root.passed());
  CHECK(root.expected_total == 27);
  auto growth = theorem_suite(shift(3, "2"), {6, true, {}});
  CHECK(growth.branch == TheoremBranch::growth);
  CHECK(growth.passed());
  CHECK(growth.dims.dims == std::vector<std::uint64_t>{1, 3, 6, 10, 15, 21, 28});
  auto product = theorem_suite(catalog::instantiate(catalog::find_entry("z4-shift2")).system);
  CHECK(product.branch == TheoremBranch::product);
  CHECK(product.expected_total == 36);
  CHECK(product.passed());
  REQUIRE(product.parts.size() == 2);
  CHECK(product.parts[0].root_order * product.parts[1].root_order == 6);
  CHECK_THROWS_AS(theorem_suite(catalog::instantiate(catalog::find_entry("w1")).system), HypothesesNotMet);
}
