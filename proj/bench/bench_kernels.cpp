// Braiding and symmetrizer kernels: reference/serial against OpenMP, over F_p.

#include <benchmark/benchmark.h>

#include "ybn/catalog/catalog.hpp"
#include "ybn/exact/fields.hpp"
#include "ybn/exact/prime_field.hpp"
#include "ybn/nichols/kernels.hpp"

using namespace ybn;

namespace {

struct Setup {
  nichols::CoefficientSystem cs;
  exact::PrimeField field;
  nichols::BraidingTable<exact::PrimeField> table;
};

const Setup& w1() {
  static const Setup s = [] {
    auto cs = catalog::instantiate(catalog::find_entry("w1")).system;
    auto field = exact::PrimeField::for_order(cs.order(), exact::specialization_primes(cs.order())[0]);
    auto table = nichols::make_braiding_table(field, cs);
    return Setup{cs, field, table};
  }();
  return s;
}

linalg::DenseVector<exact::PrimeField> filled(const exact::PrimeField& f, std::size_t dim) {
  linalg::DenseVector<exact::PrimeField> v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = (i * 2654435761u) % f.p;
  return v;
}

void BM_braiding_reference(benchmark::State& state) {
  const auto& s = w1();
  const auto k = static_cast<std::size_t>(state.range(0));
  auto in = filled(s.field, nichols::int_pow(4, k));
  auto out = in;
  for (auto _ : state) {
    for (std::size_t i = 1; i < k; ++i) nichols::apply_braiding_reference(s.field, s.table, k, i, in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(in.size() * (k - 1)));
}

void BM_braiding_parallel(benchmark::State& state) {
  const auto& s = w1();
  const auto k = static_cast<std::size_t>(state.range(0));
  auto in = filled(s.field, nichols::int_pow(4, k));
  auto out = in;
  for (auto _ : state) {
    for (std::size_t i = 1; i < k; ++i) nichols::apply_braiding(s.field, s.table, k, i, in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(in.size() * (k - 1)));
}

void symmetrizer(benchmark::State& state, Execution exec) {
  const auto& s = w1();
  const auto k = static_cast<std::size_t>(state.range(0));
  auto previous = nichols::symmetrizer_image(s.field, s.cs, k - 1, Execution::parallel);
  for (auto _ : state) {
    auto next = nichols::symmetrizer_step(s.field, s.table, k, previous, exec);
    benchmark::DoNotOptimize(next.rank());
  }
}

void BM_symmetrizer_step_serial(benchmark::State& state) { symmetrizer(state, Execution::serial); }
void BM_symmetrizer_step_parallel(benchmark::State& state) { symmetrizer(state, Execution::parallel); }

}  // namespace

BENCHMARK(BM_braiding_reference)->DenseRange(6, 9)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_braiding_parallel)->DenseRange(6, 9)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_symmetrizer_step_serial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_symmetrizer_step_parallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
