#pragma once

#include <cstdint>
#include <vector>

#include "ybn/linalg/dense.hpp"
#include "ybn/nichols/coefficients.hpp"
#include "ybn/parallel.hpp"

namespace ybn::nichols {

using linalg::DenseVector;
using linalg::MonomialOperator;
using linalg::RowSpace;

inline std::uint64_t int_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

/// c on V (x) V: pair code a*m+b goes to scale * target code.
template <class F>
struct BraidingTable {
  std::size_t m = 0;
  std::vector<std::uint32_t> target;
  std::vector<typename F::Element> scale;
};

template <class F>
BraidingTable<F> make_braiding_table(const F& field, const CoefficientSystem& cs) {
  BraidingTable<F> t;
  t.m = cs.size();
  const auto m = static_cast<Letter>(t.m);
  for (Letter i = 0; i < m; ++i)
    for (Letter j = 0; j < m; ++j) {
      auto [a, b] = cs.solution()(i, j);
      t.target.push_back(a * m + b);
      t.scale.push_back(field.from(cs(i, j)));
    }
  return t;
}

// Words of length k are indexed base m with the first letter most significant, so
// index = (hi * m^2 + pair) * L + lo with L = m^(k-i-1) for the pair at 1-based position i.

/// Reference kernel: decode each basis word, rewrite letters i, i+1, re-encode.
template <class F>
void apply_braiding_reference(const F& field, const BraidingTable<F>& t, std::size_t k, std::size_t i,
                              const DenseVector<F>& in, DenseVector<F>& out) {
  const std::size_t m = t.m;
  const std::uint64_t dim = int_pow(m, k);
  if (in.size() != dim || out.size() != dim) throw DimensionMismatch("braiding kernel dimension");
  if (i < 1 || i >= k) throw PositionOutOfRange("braiding position");
  std::vector<std::uint32_t> word(k);
  for (std::uint64_t b = 0; b < dim; ++b) {
    std::uint64_t code = b;
    for (std::size_t pos = k; pos-- > 0;) {
      word[pos] = static_cast<std::uint32_t>(code % m);
      code /= m;
    }
    std::size_t pair = word[i - 1] * m + word[i];
    word[i - 1] = t.target[pair] / m;
    word[i] = t.target[pair] % m;
    std::uint64_t dst = 0;
    for (auto x : word) dst = dst * m + x;
    out[dst] = field.mul(t.scale[pair], in[b]);
  }
}

/// OpenMP kernel over contiguous blocks of the index decomposition.
template <class F>
void apply_braiding(const F& field, const BraidingTable<F>& t, std::size_t k, std::size_t i,
                    const DenseVector<F>& in, DenseVector<F>& out, Execution exec = Execution::parallel) {
  const std::size_t m = t.m;
  const std::uint64_t lo_count = int_pow(m, k - i - 1);
  const std::uint64_t pairs = m * m;
  const std::uint64_t outer = int_pow(m, i - 1) * pairs;
  if (in.size() != outer * lo_count || out.size() != in.size()) throw DimensionMismatch("braiding kernel dimension");
  if (i < 1 || i >= k) throw PositionOutOfRange("braiding position");
  auto body = [&](std::uint64_t o) {
    std::uint64_t hi = o / pairs;
    std::uint64_t pair = o % pairs;
    std::uint64_t src = o * lo_count;
    std::uint64_t dst = (hi * pairs + t.target[pair]) * lo_count;
    const auto& c = t.scale[pair];
    for (std::uint64_t lo = 0; lo < lo_count; ++lo) {
      const auto& x = in[src + lo];
      if (field.is_zero(x))
        field.set_zero(out[dst + lo]);
      else
        field.assign_mul(out[dst + lo], c, x);
    }
  };
  if (exec == Execution::parallel && outer * lo_count >= 4096) {
#pragma omp parallel for schedule(static)
    for (long o = 0; o < static_cast<long>(outer); ++o) body(static_cast<std::uint64_t>(o));
  } else {
    for (std::uint64_t o = 0; o < outer; ++o) body(o);
  }
}

template <class F>
void add_into(const F& field, DenseVector<F>& acc, const DenseVector<F>& v) {
  for (std::size_t b = 0; b < acc.size(); ++b)
    if (!field.is_zero(v[b])) field.add_assign(acc[b], v[b]);
}

/// (id + c_j + c_{j-1} c_j + ... + c_1 ... c_j) v on V^(x)k.
template <class F>
DenseVector<F> apply_partial_symmetrizer(const F& field, const BraidingTable<F>& t, std::size_t k, std::size_t j,
                                         const DenseVector<F>& v, Execution exec = Execution::parallel) {
  DenseVector<F> acc = v;
  DenseVector<F> u = v;
  DenseVector<F> scratch(v.size(), field.zero());
  for (std::size_t i = j; i >= 1; --i) {
    if (exec == Execution::serial)
      apply_braiding_reference(field, t, k, i, u, scratch);
    else
      apply_braiding(field, t, k, i, u, scratch, exec);
    std::swap(u, scratch);
    add_into(field, acc, u);
  }
  return acc;
}

/// Full quantum symmetrizer on V^(x)k.
template <class F>
DenseVector<F> apply_symmetrizer(const F& field, const BraidingTable<F>& t, std::size_t k, DenseVector<F> v,
                                 Execution exec = Execution::parallel) {
  for (std::size_t j = 1; j < k; ++j) v = apply_partial_symmetrizer(field, t, k, j, v, exec);
  return v;
}

/// c_i as a materialized monomial operator on V^(x)k.
template <class F>
MonomialOperator<F> braiding_operator(const F& field, const BraidingTable<F>& t, std::size_t k, std::size_t i) {
  const std::size_t m = t.m;
  const std::uint64_t lo_count = int_pow(m, k - i - 1);
  const std::uint64_t pairs = m * m;
  const std::uint64_t outer = int_pow(m, i - 1) * pairs;
  if (i < 1 || i >= k) throw PositionOutOfRange("braiding position");
  MonomialOperator<F> op;
  op.target.resize(outer * lo_count);
  op.scale.resize(outer * lo_count, field.zero());
  for (std::uint64_t o = 0; o < outer; ++o) {
    std::uint64_t hi = o / pairs, pair = o % pairs;
    for (std::uint64_t lo = 0; lo < lo_count; ++lo) {
      op.target[o * lo_count + lo] = (hi * pairs + t.target[pair]) * lo_count + lo;
      op.scale[o * lo_count + lo] = t.scale[pair];
    }
  }
  return op;
}

/// Im S_k from Im S_{k-1}: each basis vector tensored with each w_j, pushed through the tail symmetrizer.
template <class F>
RowSpace<F> symmetrizer_step(const F& field, const BraidingTable<F>& t, std::size_t k, const RowSpace<F>& previous,
                             Execution exec = Execution::parallel) {
  const std::size_t m = t.m;
  const std::uint64_t dim = int_pow(m, k);
  RowSpace<F> next(field, dim);
  const auto& rows = previous.rows();
  const std::size_t total = rows.size() * m;
  const std::size_t batch = std::max<std::size_t>(1, 2 * static_cast<std::size_t>(worker_count()));
  for (std::size_t first = 0; first < total; first += batch) {
    std::size_t count = std::min(batch, total - first);
    std::vector<DenseVector<F>> candidates(count);
    auto make = [&](std::size_t c) {
      std::size_t idx = first + c;
      const auto& row = rows[idx / m].entries;
      std::size_t letter = idx % m;
      DenseVector<F> v(dim, field.zero());
      for (std::size_t b = 0; b < row.size(); ++b)
        if (!field.is_zero(row[b])) v[b * m + letter] = row[b];
      candidates[c] = apply_partial_symmetrizer(field, t, k, k - 1, v, exec);
    };
    if (exec == Execution::parallel && count > 1) {
      for_each_index(count, Execution::parallel, make);
    } else {
      for (std::size_t c = 0; c < count; ++c) make(c);
    }
    for (auto& v : candidates) next.insert(std::move(v));
  }
  return next;
}

template <class F>
RowSpace<F> degree_one_space(const F& field, std::size_t m) {
  RowSpace<F> space(field, m);
  for (std::size_t j = 0; j < m; ++j) space.insert(linalg::unit_vector(field, m, j));
  return space;
}

/// Basis of Im S_k via the recursion, starting from V.
template <class F>
RowSpace<F> symmetrizer_image(const F& field, const CoefficientSystem& cs, std::size_t k,
                              Execution exec = Execution::parallel) {
  if (k < 1) throw InvalidArgument("symmetrizer degree must be positive");
  auto t = make_braiding_table(field, cs);
  auto space = degree_one_space(field, cs.size());
  for (std::size_t d = 2; d <= k; ++d) space = symmetrizer_step(field, t, d, space, exec);
  return space;
}

/// c_1, ..., c_{k-1} on V^(x)k.
template <class F>
std::vector<MonomialOperator<F>> braiding_ops(const F& field, const CoefficientSystem& cs, std::size_t k) {
  if (k < 2) throw InvalidArgument("braiding operators need degree >= 2");
  auto t = make_braiding_table(field, cs);
  std::vector<MonomialOperator<F>> ops;
  for (std::size_t i = 1; i < k; ++i) ops.push_back(braiding_operator(field, t, k, i));
  return ops;
}

}  // namespace ybn::nichols
