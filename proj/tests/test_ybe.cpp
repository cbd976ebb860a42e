#include "doctest.h"
#include "oracles.hpp"
#include "ybn/catalog/catalog.hpp"
#include "ybn/error.hpp"
#include "ybn/ybe/solution.hpp"

using namespace ybn;
using namespace ybn::ybe;

namespace {

SetSolution relabel(const SetSolution& s, const Permutation& pi) {
  const auto m = s.size();
  std::vector<std::pair<Letter, Letter>> table(m * m);
  for (Letter i = 0; i < m; ++i)
    for (Letter j = 0; j < m; ++j) {
      auto [a, b] = s(i, j);
      table[pi[i] * m + pi[j]] = {pi[a], pi[b]};
    }
  return SetSolution(m, table);
}

Permutation random_permutation(std::size_t m) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), oracle::rng());
  return p;
}

SetSolution random_table(std::size_t m) {
  std::vector<std::pair<Letter, Letter>> table(m * m);
  for (auto& e : table) e = {static_cast<Letter>(oracle::below(m)), static_cast<Letter>(oracle::below(m))};
  return SetSolution(m, table);
}

}  // namespace

TEST_CASE("catalog solutions satisfy the braid relation") {
  for (const auto& e : catalog::catalog()) {
    CAPTURE(e.name);
    auto s = catalog::entry_solution(e);
    auto rep = verify_solution(s);
    CHECK(rep.is_ybe);
    CHECK(rep.is_nondegenerate);
    CHECK(rep.is_bijective);
    CHECK(rep.is_involutive == e.involutive);
    CHECK(oracle::is_ybe(s));
    CHECK(oracle::is_involutive(s) == e.involutive);
    CHECK(verify_solution(s, Execution::serial).is_ybe);
  }
}

TEST_CASE("verification agrees with the brute-force check on random tables") {
  for (int trial = 0; trial < 300; ++trial) {
    auto m = 1 + oracle::below(4);
    auto s = trial % 3 == 0 ? permutation_solution(random_permutation(m)) : random_table(m);
    auto rep = verify_solution(s);
    CHECK(rep.is_ybe == oracle::is_ybe(s));
    CHECK(rep.is_ybe == rep.ybe_failures.empty());
    CHECK(rep.is_involutive == oracle::is_involutive(s));
    CHECK(rep.is_nondegenerate == is_nondegenerate(s));
    CHECK(verify_solution(s, Execution::serial).ybe_failures == rep.ybe_failures);
  }
}

TEST_CASE("permutation solutions") {
  for (std::size_t m = 1; m <= 5; ++m) {
    auto s = permutation_solution(random_permutation(m));
    CHECK(oracle::is_ybe(s));
    CHECK(is_nondegenerate(s));
    CHECK(is_involutive(s));
  }
  CHECK_THROWS_AS(permutation_solution({0, 0}), InvalidArgument);
  auto f = flip_solution(3);
  CHECK(f(1, 2) == std::pair<Letter, Letter>{2, 1});
}

TEST_CASE("diagonal map") {
  auto z3 = catalog::entry_solution(catalog::find_entry("z3-shift"));
  auto d = diagonal(z3);
  CHECK(cycle_string(d.forward) == "(0 2 1)");
  CHECK(cycle_string(diagonal(catalog::entry_solution(catalog::find_entry("z4-shift2"))).forward) == "(0 2)(1 3)");
  CHECK(cycle_string(diagonal(catalog::entry_solution(catalog::find_entry("x4-sigma"))).forward, 1) == "(2 3)");
  CHECK(cycle_string(diagonal(flip_solution(4)).forward) == "id");
  for (Letter i = 0; i < 3; ++i) {
    CHECK(d.inverse[d.forward[i]] == i);
    CHECK(d.power(i, 3) == i);
    CHECK(d.power(i, -1) == d.inverse[i]);
    CHECK(d.power(i, 5) == d.power(i, 2));
  }
  for (const auto& e : catalog::catalog()) {
    if (!e.involutive) continue;
    auto s = catalog::entry_solution(e);
    auto dd = diagonal(s);
    for (Letter i = 0; i < s.size(); ++i) CHECK(s(dd.apply(i), i) == std::pair<Letter, Letter>{dd.apply(i), i});
  }
  CHECK_THROWS_AS(diagonal(catalog::entry_solution(catalog::find_entry("w1"))), NotInvolutive);
  CHECK_THROWS_AS(diagonal(SetSolution(2, {{0, 0}, {0, 0}, {0, 0}, {0, 0}})), NotNondegenerate);
}

TEST_CASE("relabelling preserves every invariant") {
  for (const auto& e : catalog::catalog()) {
    auto s = catalog::entry_solution(e);
    for (int trial = 0; trial < 5; ++trial) {
      auto pi = random_permutation(s.size());
      auto t = relabel(s, pi);
      CHECK(verify_solution(t).is_ybe);
      CHECK(phi_invariant(t) == phi_invariant(s));
      CHECK(is_transitive(t) == is_transitive(s));
      CHECK(decompose(t).has_value() == decompose(s).has_value());
      CHECK(finest_decomposition(t).size() == finest_decomposition(s).size());
      if (e.involutive) {
        auto ds = diagonal(s), dt = diagonal(t);
        for (Letter i = 0; i < s.size(); ++i) CHECK(dt.apply(pi[i]) == pi[ds.apply(i)]);
      }
    }
  }
}

TEST_CASE("decomposition") {
  auto z42 = catalog::entry_solution(catalog::find_entry("z4-shift2"));
  auto split = decompose(z42);
  REQUIRE(split);
  CHECK(split->first == Subset{0, 2});
  CHECK(split->second == Subset{1, 3});
  CHECK_FALSE(decompose(catalog::entry_solution(catalog::find_entry("z3-shift"))));
  CHECK(finest_decomposition(flip_solution(3)) == std::vector<Subset>{{0}, {1}, {2}});
  auto part = restrict(z42, {0, 2});
  CHECK(part.size() == 2);
  CHECK(verify_solution(part).is_ybe);
  CHECK_THROWS_AS(restrict(z42, {0, 1}), InvalidArgument);
  CHECK(is_transitive(catalog::entry_solution(catalog::find_entry("z3-shift"))));
  CHECK_FALSE(is_transitive(z42));
}

TEST_CASE("phi invariant counts r-orbits on pairs") {
  for (const auto& e : catalog::catalog()) {
    auto s = catalog::entry_solution(e);
    auto l = phi_invariant(s);
    std::size_t covered = 0;
    for (std::size_t n = 1; n < l.size(); ++n) covered += n * l[n];
    CHECK(covered == s.size() * s.size());
    if (e.involutive) CHECK(l.size() <= 3);
  }
  CHECK(phi_invariant(flip_solution(2)) == std::vector<std::size_t>{0, 2, 1});
  CHECK(phi_invariant(catalog::entry_solution(catalog::find_entry("z3-shift"))) == std::vector<std::size_t>{0, 3, 3});
}

TEST_CASE("malformed tables") {
  CHECK_THROWS_AS(SetSolution(2, {{0, 0}}), DimensionMismatch);
  CHECK_THROWS_AS(SetSolution(1, {{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(SetSolution(0, {}), InvalidArgument);
  SetSolution degenerate(2, {{0, 0}, {0, 0}, {1, 1}, {1, 1}});
  auto rep = verify_solution(degenerate);
  CHECK_FALSE(rep.is_nondegenerate);
  CHECK_FALSE(rep.is_bijective);
  CHECK_FALSE(rep.degenerate_sigma.empty());
}
