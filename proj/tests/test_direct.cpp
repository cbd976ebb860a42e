#include "doctest.h"
#include "oracles.hpp"
#include "ybn/catalog/catalog.hpp"
#include "ybn/nichols/graded.hpp"

using namespace ybn;
using namespace ybn::nichols;

// Sum over all of S_k against the recursion, for every validated system with m^k <= 256.
TEST_CASE("direct symmetrizer equals the recursion") {
  for (const auto& e : catalog::catalog()) {
    auto cs = catalog::instantiate(e).system;
    const auto m = cs.size();
    for (std::size_t k = 1; int_pow(m, k) <= 256; ++k) {
      CAPTURE(e.name);
      CAPTURE(k);
      auto direct = direct_symmetrizer(cs, k);
      std::uint64_t fact = 1;
      for (std::size_t i = 2; i <= k; ++i) fact *= i;
      CHECK(direct.group_order == fact);
      CHECK(direct.matsumoto_consistent);
      CHECK(direct.rank == symmetrizer_rank(cs, k));
    }
  }
}

TEST_CASE("direct symmetrizer matches the sparse oracle in small degree") {
  for (const char* name : {"z2-shift", "z3-shift", "flip2"}) {
    auto cs = catalog::instantiate(catalog::find_entry(name)).system;
    for (std::size_t k = 2; k <= 3; ++k) CHECK(direct_symmetrizer(cs, k).rank == oracle::symmetrizer_rank(cs, k));
  }
}
