#include "doctest.h"
#include "oracles.hpp"
#include "ybn/catalog/catalog.hpp"
#include "ybn/error.hpp"
#include "ybn/orbits/census.hpp"

using namespace ybn;
using namespace ybn::orbits;

namespace {

ybe::SetSolution named(const std::string& n) { return catalog::entry_solution(catalog::find_entry(n)); }

std::vector<ybe::SetSolution> involutive_catalog() {
  std::vector<ybe::SetSolution> out;
  for (const auto& e : catalog::catalog())
    if (e.involutive) out.push_back(catalog::entry_solution(e));
  return out;
}

Word random_word(std::size_t n, std::size_t m) {
  Word w(n);
  for (auto& x : w) x = static_cast<Letter>(oracle::below(m));
  return w;
}

}  // namespace

TEST_CASE("partitions and counting") {
  auto ps = partitions(4, 3);
  REQUIRE(ps.size() == 4);
  CHECK(ps[0].to_string() == "(4)");
  CHECK(ps[1].to_string() == "(3,1)");
  CHECK(ps[2].to_string() == "(2,2)");
  CHECK(ps[3].to_string() == "(2,1,1)");
  CHECK(perm_count(Partition({2, 1}), 3) == 6);
  CHECK(perm_count(Partition({2, 2}), 3) == 3);
  CHECK(perm_count(Partition({1, 1, 1}), 3) == 1);
  CHECK(multinomial(Partition({2, 1, 1})) == 12);
  CHECK(multinomial(Partition({6, 4, 3})) == 60060);
  CHECK(binomial(10, 3) == 120);
  CHECK(factorial(20) == 2432902008176640000ull);
  CHECK_THROWS_AS(factorial(21), TooLarge);
  CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
  CHECK(Partition({3, 0, 0}).parts == std::vector<std::uint32_t>{3});
  for (std::uint32_t m = 1; m <= 5; ++m)
    for (std::uint32_t n = 0; n <= 8; ++n) {
      std::uint64_t sum = 0, words = 0;
      for (const auto& p : partitions(n, m)) {
        CHECK(p.weight() == n);
        CHECK(p.length() <= m);
        sum += perm_count(p, m);
        words += perm_count(p, m) * multinomial(p);
      }
      CHECK(sum == oracle::binomial(n + m - 1, m - 1));
      std::uint64_t mn = 1;
      for (std::uint32_t i = 0; i < n; ++i) mn *= m;
      CHECK(words == mn);
    }
}

TEST_CASE("word encoding") {
  CHECK(parse_word("0120") == Word{0, 1, 2, 0});
  CHECK(word_string({2, 0, 1}) == "201");
  CHECK_THROWS_AS(parse_word("01a"), ParseError);
  for (int t = 0; t < 100; ++t) {
    auto w = random_word(1 + oracle::below(6), 4);
    CHECK(decode(encode(w, 4), w.size(), 4) == w);
  }
  CHECK(encode({1, 0}, 3) < encode({1, 2}, 3));
}

TEST_CASE("generators act as the solution on adjacent letters") {
  auto s = named("z3-shift");
  CHECK(act(s, 1, {0, 1, 2}) == oracle::act(s, 1, {0, 1, 2}));
  CHECK(act(s, 2, {0, 1, 2}) == oracle::act(s, 2, {0, 1, 2}));
  CHECK_THROWS_AS(act(s, 3, {0, 1, 2}), PositionOutOfRange);
  CHECK_THROWS_AS(act(s, 0, {0, 1, 2}), PositionOutOfRange);
  // involutive: each generator squares to the identity
  for (int t = 0; t < 50; ++t) {
    auto w = random_word(5, 3);
    auto k = 1 + oracle::below(4);
    CHECK(act(s, k, act(s, k, w)) == w);
  }
}

TEST_CASE("census partitions X^n exactly like the brute-force search") {
  for (const auto& s : involutive_catalog()) {
    for (std::size_t n = 1; n <= (s.size() <= 3 ? 5u : 4u); ++n) {
      auto census = orbit_census(s, n);
      auto ref = oracle::orbits(s, n);
      REQUIRE(census.orbits.size() == ref.size());
      for (std::size_t o = 0; o < ref.size(); ++o) {
        CHECK(census.orbits[o].representative == *ref[o].begin());
        CHECK(census.orbits[o].size == ref[o].size());
        CHECK(ref[o].count(census.orbits[o].lambda_element));
      }
      CHECK(orbit_census(s, n, {10'000'000, Execution::serial}).rows.size() == census.rows.size());
    }
  }
}

TEST_CASE("z3 census in degree 4") {
  auto c = orbit_census(named("z3-shift"), 4);
  CHECK(c.orbit_count() == 15);
  REQUIRE(c.rows.size() == 4);
  std::vector<std::tuple<std::string, std::uint64_t, std::uint64_t>> got;
  for (const auto& r : c.rows) got.emplace_back(r.lambda.to_string(), r.count, r.size);
  CHECK(got == std::vector<std::tuple<std::string, std::uint64_t, std::uint64_t>>{
                   {"(4)", 3, 1}, {"(3,1)", 6, 4}, {"(2,2)", 3, 6}, {"(2,1,1)", 3, 12}});
  CHECK_THROWS_AS(orbit_census(named("z3-shift"), 20), TooLarge);
  CHECK_THROWS_AS(orbit_census(named("z3-shift"), 0), InvalidArgument);
}

TEST_CASE("orbit of a word") {
  auto s = named("z3-shift");
  auto rep = orbit(s, parse_word("0120"));
  CHECK(rep.size == 1);
  CHECK(rep.lambda.to_string() == "(4)");
  auto words = orbit_words(s, parse_word("0101"));
  CHECK(words.size() == 6);
  CHECK(std::is_sorted(words.begin(), words.end()));
}

TEST_CASE("psi blocks") {
  auto s = named("z3-shift");
  auto d = ybe::diagonal(s);
  CHECK(psi(d, 4, 0) == parse_word("0120"));
  auto blocks = psi_factorization(d, parse_word("0121212020102"));
  std::vector<std::size_t> lengths;
  for (const auto& b : blocks) {
    lengths.push_back(b.length);
    Word w = parse_word("0121212020102");
    CHECK(Word(w.begin() + b.start, w.begin() + b.start + b.length) == psi(d, b.length, b.base));
  }
  std::size_t total = 0;
  for (auto l : lengths) total += l;
  CHECK(total == 13);
}

TEST_CASE("exchange formula equals its move sequence") {
  for (const auto& s : involutive_catalog()) {
    auto d = ybe::diagonal(s);
    for (int t = 0; t < 200; ++t) {
      auto w = random_word(2 + oracle::below(8), s.size());
      auto blocks = psi_factorization(d, w);
      if (blocks.size() < 2) continue;
      auto i = oracle::below(blocks.size() - 1);
      auto moved = exchange(s, d, w, blocks[i], blocks[i + 1]);
      CHECK(apply_moves(s, w, exchange_moves(blocks[i], blocks[i + 1])) == moved);
      // the right block now comes first, unchanged in length
      auto after = psi_factorization(d, moved);
      CHECK(Word(moved.begin() + blocks[i].start, moved.begin() + blocks[i].start + blocks[i + 1].length) ==
            psi(d, blocks[i + 1].length, moved[blocks[i].start + blocks[i + 1].length - 1]));
      CHECK(!after.empty());
    }
  }
  auto s = named("z3-shift");
  auto d = ybe::diagonal(s);
  CHECK_THROWS_AS(exchange(s, d, parse_word("0000"), {0, 2, 0}, {2, 2, 0}), MalformedBlocks);
}

TEST_CASE("lambda classification") {
  auto s = named("z3-shift");
  auto cls = lambda_classify(s, parse_word("0121212020102"));
  CHECK(cls.lambda.to_string() == "(6,4,3)");
  CHECK(is_lambda_element(s, cls.element) == cls.lambda);
  CHECK(apply_moves(s, parse_word("0121212020102"), cls.moves) == cls.element);
  CHECK(word_string(cls.element) == "0120122012201");

  for (const auto& sol : involutive_catalog()) {
    for (int t = 0; t < 150; ++t) {
      auto w = random_word(1 + oracle::below(9), sol.size());
      auto c = lambda_classify(sol, w);
      CHECK(c.lambda.weight() == w.size());
      CHECK(c.lambda.length() <= sol.size());
      CHECK(is_lambda_element(sol, c.element) == c.lambda);
      CHECK(apply_moves(sol, w, c.moves) == c.element);
      // the type is constant along the orbit
      auto k = 1 + oracle::below(std::max<std::size_t>(1, w.size() - 1));
      if (w.size() >= 2) CHECK(lambda_classify(sol, act(sol, k, w)).lambda == c.lambda);
    }
  }
}

TEST_CASE("lambda-elements are fixed by their Young subgroup") {
  auto s = named("z3-shift");
  CHECK(stabilizer_check(s, parse_word("0120122012201")));
  for (const auto& sol : involutive_catalog()) {
    auto c = orbit_census(sol, 4);
    for (const auto& o : c.orbits) {
      auto rep = stabilizer_report(sol, o.lambda_element);
      CHECK(rep.ok());
      CHECK(rep.expected_orbit_size == o.size);
    }
  }
  CHECK_FALSE(is_lambda_element(s, parse_word("0000")));
}
