#include "doctest.h"
#include "oracles.hpp"
#include "ybn/catalog/catalog.hpp"
#include "ybn/error.hpp"
#include "ybn/exact/fields.hpp"
#include "ybn/nichols/kernels.hpp"
#include "ybn/orbits/action.hpp"

using namespace ybn;
using namespace ybn::nichols;
using exact::CyclotomicField;
using exact::PrimeField;

namespace {

std::vector<CoefficientSystem> systems() {
  std::vector<CoefficientSystem> out;
  for (const auto& e : catalog::catalog()) out.push_back(catalog::instantiate(e).system);
  return out;
}

template <class F>
DenseVector<F> random_vector(const F& field, std::size_t dim, std::uint64_t p) {
  DenseVector<F> v(dim, field.zero());
  for (auto& x : v)
    if (oracle::below(3)) x = oracle::below(p);
  return v;
}

}  // namespace

TEST_CASE("braid relations hold on every tensor power up to degree 5") {
  for (const auto& cs : systems()) {
    CAPTURE(cs.size());
    CHECK(oracle::braid_relation(cs));
    const auto p = exact::specialization_primes(cs.order())[0];
    auto field = PrimeField::for_order(cs.order(), p);
    for (std::size_t k = 2; k <= (cs.size() <= 3 ? 5u : 4u); ++k) {
      auto ops = braiding_ops(field, cs, k);
      for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
        auto lhs = compose(field, ops[i], compose(field, ops[i + 1], ops[i]));
        auto rhs = compose(field, ops[i + 1], compose(field, ops[i], ops[i + 1]));
        CHECK(lhs == rhs);
      }
      for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 2; j < ops.size(); ++j)
          CHECK(compose(field, ops[i], ops[j]) == compose(field, ops[j], ops[i]));
    }
  }
}

TEST_CASE("monomial braiding matches the sparse oracle on basis words") {
  for (const auto& cs : systems()) {
    CyclotomicField field{cs.order()};
    const std::size_t k = 3, m = cs.size();
    auto ops = braiding_ops(field, cs, k);
    for (std::uint64_t code = 0; code < int_pow(m, k); ++code) {
      auto w = orbits::decode(code, k, m);
      for (std::size_t i = 1; i < k; ++i) {
        auto expect = oracle::braid(cs, i, {{w, field.one()}});
        REQUIRE(expect.size() == 1);
        const auto& [u, c] = *expect.begin();
        CHECK(ops[i - 1].target[code] == orbits::encode(u, m));
        CHECK(ops[i - 1].scale[code] == c);
      }
    }
  }
}

TEST_CASE("parallel and reference braiding kernels agree") {
  auto cs = catalog::instantiate(catalog::find_entry("w1")).system;
  const auto p = exact::specialization_primes(cs.order())[0];
  auto field = PrimeField::for_order(cs.order(), p);
  auto t = make_braiding_table(field, cs);
  for (std::size_t k : {2u, 4u, 6u, 7u}) {
    const auto dim = int_pow(4, k);
    auto v = random_vector(field, dim, p);
    for (std::size_t i = 1; i < k; ++i) {
      DenseVector<PrimeField> a(dim, 0), b(dim, 0), c(dim, 0);
      apply_braiding_reference(field, t, k, i, v, a);
      apply_braiding(field, t, k, i, v, b, Execution::parallel);
      apply_braiding(field, t, k, i, v, c, Execution::serial);
      CHECK(a == b);
      CHECK(a == c);
      CHECK(apply(field, braiding_operator(field, t, k, i), v) == a);
    }
    CHECK(apply_symmetrizer(field, t, k, v, Execution::serial) == apply_symmetrizer(field, t, k, v, Execution::parallel));
  }
  DenseVector<PrimeField> bad(5, 0), out(5, 0);
  CHECK_THROWS_AS(apply_braiding(field, t, 2, 1, bad, out), DimensionMismatch);
  DenseVector<PrimeField> v(16, 0), o(16, 0);
  CHECK_THROWS_AS(apply_braiding_reference(field, t, 2, 2, v, o), PositionOutOfRange);
}

TEST_CASE("symmetrizer kernel equals the sum over the symmetric group") {
  for (const auto& cs : systems()) {
    if (cs.size() > 3) continue;
    CyclotomicField field{cs.order()};
    auto t = make_braiding_table(field, cs);
    const std::size_t m = cs.size();
    for (std::size_t k = 2; k <= 4; ++k) {
      for (int trial = 0; trial < 3; ++trial) {
        auto code = oracle::below(int_pow(m, k));
        auto w = orbits::decode(code, k, m);
        auto got = apply_symmetrizer(field, t, k, linalg::unit_vector(field, int_pow(m, k), code));
        auto expect = oracle::symmetrize(cs, {{w, field.one()}}, k);
        for (std::uint64_t b = 0; b < got.size(); ++b) {
          auto it = expect.find(orbits::decode(b, k, m));
          CHECK(got[b] == (it == expect.end() ? field.zero() : it->second));
        }
      }
    }
  }
}

TEST_CASE("recursive image has the rank of the full symmetrizer") {
  for (const auto& cs : systems()) {
    const std::size_t m = cs.size();
    CyclotomicField field{cs.order()};
    for (std::size_t k = 2; int_pow(m, k) <= 64 && k <= 4; ++k) {
      auto serial = symmetrizer_image(field, cs, k, Execution::serial);
      auto parallel = symmetrizer_image(field, cs, k, Execution::parallel);
      CHECK(serial.rank() == parallel.rank());
      CHECK(serial.rank() == oracle::symmetrizer_rank(cs, k));
    }
  }
}
