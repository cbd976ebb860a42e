#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "ybn/error.hpp"

namespace ybn::linalg {

template <class F>
using DenseVector = std::vector<typename F::Element>;

template <class F>
DenseVector<F> zero_vector(const F& field, std::size_t dimension) {
  return DenseVector<F>(dimension, field.zero());
}

template <class F>
DenseVector<F> unit_vector(const F& field, std::size_t dimension, std::size_t index) {
  auto v = zero_vector(field, dimension);
  v.at(index) = field.one();
  return v;
}

template <class F>
bool is_zero_vector(const F& field, const DenseVector<F>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return field.is_zero(x); });
}

template <class F>
std::size_t support_size(const F& field, const DenseVector<F>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [&](const auto& x) { return !field.is_zero(x); }));
}

/// Basis b goes to scale[b] * e_{target[b]}.
template <class F>
struct MonomialOperator {
  std::vector<std::size_t> target;
  std::vector<typename F::Element> scale;

  std::size_t dimension() const { return target.size(); }

  static MonomialOperator identity(const F& field, std::size_t dimension) {
    MonomialOperator op;
    op.target.resize(dimension);
    for (std::size_t b = 0; b < dimension; ++b) op.target[b] = b;
    op.scale.assign(dimension, field.one());
    return op;
  }

  bool is_bijective() const {
    std::vector<char> hit(target.size(), 0);
    for (auto t : target) {
      if (t >= target.size() || hit[t]) return false;
      hit[t] = 1;
    }
    return true;
  }

  friend bool operator==(const MonomialOperator& a, const MonomialOperator& b) {
    return a.target == b.target && a.scale == b.scale;
  }
};

/// (op v)[target[b]] += scale[b] * v[b]
template <class F>
DenseVector<F> apply(const F& field, const MonomialOperator<F>& op, const DenseVector<F>& v) {
  if (v.size() != op.dimension()) throw DimensionMismatch("operator and vector dimensions differ");
  auto out = zero_vector(field, v.size());
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (field.is_zero(v[b])) continue;
    field.add_mul(out[op.target[b]], op.scale[b], v[b]);
  }
  return out;
}

/// The operator "first, then second".
template <class F>
MonomialOperator<F> compose(const F& field, const MonomialOperator<F>& second, const MonomialOperator<F>& first) {
  if (first.dimension() != second.dimension()) throw DimensionMismatch("composing operators of different size");
  MonomialOperator<F> out;
  out.target.resize(first.dimension());
  out.scale.resize(first.dimension(), field.zero());
  for (std::size_t b = 0; b < first.dimension(); ++b) {
    std::size_t mid = first.target[b];
    out.target[b] = second.target[mid];
    out.scale[b] = field.mul(first.scale[b], second.scale[mid]);
  }
  return out;
}

/// Reduced echelon basis of a subspace, grown one vector at a time.
template <class F>
class RowSpace {
 public:
  struct Row {
    std::size_t pivot;
    DenseVector<F> entries;
    std::vector<std::size_t> support;
  };

  RowSpace(F field, std::size_t dimension) : field_(std::move(field)), dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  const F& field() const { return field_; }

  /// Residual of v after elimination against the current basis.
  DenseVector<F> reduce(DenseVector<F> v) const {
    check(v);
    for (const auto& row : rows_) {
      if (field_.is_zero(v[row.pivot])) continue;
      auto c = v[row.pivot];
      for (auto idx : row.support) field_.sub_mul(v[idx], c, row.entries[idx]);
    }
    return v;
  }

  bool contains(const DenseVector<F>& v) const { return is_zero_vector(field_, reduce(v)); }

  /// Adds v to the span; returns true when v was already in it.
  bool insert(DenseVector<F> v) {
    v = reduce(std::move(v));
    std::size_t pivot = 0;
    while (pivot < dimension_ && field_.is_zero(v[pivot])) ++pivot;
    if (pivot == dimension_) return true;
    auto inv = field_.inv(v[pivot]);
    Row fresh{pivot, std::move(v), {}};
    for (std::size_t i = pivot; i < dimension_; ++i) {
      if (field_.is_zero(fresh.entries[i])) continue;
      field_.mul_assign(fresh.entries[i], inv);
      fresh.support.push_back(i);
    }
    for (auto& row : rows_) {
      if (field_.is_zero(row.entries[pivot])) continue;
      auto c = row.entries[pivot];
      for (auto idx : fresh.support) field_.sub_mul(row.entries[idx], c, fresh.entries[idx]);
      refresh_support(row);
    }
    auto at = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                               [](const Row& r, std::size_t p) { return r.pivot < p; });
    rows_.insert(at, std::move(fresh));
    return false;
  }

  std::vector<DenseVector<F>> basis() const {
    std::vector<DenseVector<F>> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.entries);
    return out;
  }

 private:
  void check(const DenseVector<F>& v) const {
    if (v.size() != dimension_)
      throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " in a space of dimension " +
                              std::to_string(dimension_));
  }

  void refresh_support(Row& row) const {
    row.support.clear();
    for (std::size_t i = row.pivot; i < dimension_; ++i)
      if (!field_.is_zero(row.entries[i])) row.support.push_back(i);
  }

  F field_;
  std::size_t dimension_;
  std::vector<Row> rows_;
};

template <class F>
std::size_t rank(const F& field, const std::vector<DenseVector<F>>& rows) {
  if (rows.empty()) return 0;
  RowSpace<F> space(field, rows.front().size());
  for (const auto& r : rows) space.insert(r);
  return space.rank();
}

}  // namespace ybn::linalg
