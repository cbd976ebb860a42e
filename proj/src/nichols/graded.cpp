#include "ybn/nichols/graded.hpp"

#include <algorithm>
#include <map>

#include "ybn/error.hpp"

namespace ybn::nichols {

using exact::CyclotomicField;
using exact::PrimeField;

std::string to_string(Termination t) {
  switch (t) {
    case Termination::zero:
      return "zero";
    case Termination::cap:
      return "cap";
    case Termination::cap_exceeded:
      return "cap_exceeded";
  }
  return "unknown";
}

std::optional<std::uint64_t> GradedDims::total() const {
  if (termination != Termination::zero) return std::nullopt;
  std::uint64_t sum = 0;
  for (auto d : dims) sum += d;
  return sum;
}

namespace {

RowSpace<PrimeField> specialize_space(const RowSpace<CyclotomicField>& space, const PrimeField& field) {
  RowSpace<PrimeField> out(field, space.dimension());
  for (const auto& row : space.rows()) {
    DenseVector<PrimeField> v(space.dimension(), 0);
    for (auto idx : row.support) v[idx] = field.from(row.entries[idx]);
    out.insert(std::move(v));
  }
  return out;
}

}  // namespace

GradedDims graded_dims(const CoefficientSystem& cs, const GradedDimsOptions& options) {
  const std::size_t m = cs.size();
  const CyclotomicField qfield{cs.order()};
  const auto qtable = make_braiding_table(qfield, cs);

  std::vector<std::uint64_t> primes = options.primes;
  if (primes.empty()) primes = exact::specialization_primes(cs.order(), 2);
  std::vector<PrimeField> pfields;
  std::vector<BraidingTable<PrimeField>> ptables;
  for (auto p : primes) {
    pfields.push_back(PrimeField::for_order(cs.order(), p));
    ptables.push_back(make_braiding_table(pfields.back(), cs));
  }

  GradedDims out;
  out.dims = {1};
  out.provenance.push_back({});
  if (options.max_degree == 0) {
    out.termination = Termination::cap;
    return out;
  }
  out.dims.push_back(m);
  out.provenance.push_back({});

  RowSpace<CyclotomicField> exact_space = degree_one_space(qfield, m);
  std::size_t exact_level = 1;
  std::vector<RowSpace<PrimeField>> mod_spaces;
  for (const auto& f : pfields) mod_spaces.push_back(degree_one_space(f, m));
  std::size_t mod_level = 1;

  auto bring_exact_to = [&](std::size_t k) {
    if (exact_level > k) {
      exact_space = degree_one_space(qfield, m);
      exact_level = 1;
    }
    while (exact_level < k) {
      ++exact_level;
      exact_space = symmetrizer_step(qfield, qtable, exact_level, exact_space, options.execution);
    }
  };

  for (std::size_t k = 2;; ++k) {
    if (out.dims.back() == 0) {
      out.termination = Termination::zero;
      break;
    }
    if (k > options.max_degree) {
      out.termination = Termination::cap;
      break;
    }
    const std::uint64_t dim = int_pow(m, k);
    if (dim > options.dimension_limit) {
      out.termination = Termination::cap_exceeded;
      out.note = "degree " + std::to_string(k) + " needs " + std::to_string(dim) + " coordinates";
      break;
    }
    const std::optional<std::uint64_t> expected = options.expected ? options.expected(k) : std::nullopt;
    DegreeProvenance prov;
    bool want_exact = options.mode == ArithmeticMode::exact ||
                      (options.mode == ArithmeticMode::automatic && dim <= options.exact_cap);
    if (options.force_exact.count(k)) {
      if (!want_exact) prov.reason = "forced";
      want_exact = true;
    }
    std::uint64_t rank = 0;
    bool settled = false;
    if (!want_exact || !prov.reason.empty()) {
      if (mod_level != k - 1) {
        bring_exact_to(k - 1);
        for (std::size_t t = 0; t < pfields.size(); ++t) mod_spaces[t] = specialize_space(exact_space, pfields[t]);
      }
      for (std::size_t t = 0; t < pfields.size(); ++t) {
        mod_spaces[t] = symmetrizer_step(pfields[t], ptables[t], k, mod_spaces[t], options.execution);
        prov.primes.push_back(pfields[t].p);
        prov.modular_ranks.push_back(mod_spaces[t].rank());
      }
      mod_level = k;
      bool agree = std::all_of(prov.modular_ranks.begin(), prov.modular_ranks.end(),
                               [&](std::uint64_t r) { return r == prov.modular_ranks.front(); });
      if (!agree) {
        prov.reason = "primes disagree";
      } else if (expected && *expected != prov.modular_ranks.front() && prov.reason.empty()) {
        prov.reason = "unexpected value " + std::to_string(prov.modular_ranks.front());
      }
      if (prov.reason.empty()) {
        rank = prov.modular_ranks.front();
        prov.exact = false;
        settled = true;
      } else {
        prov.escalated = true;
      }
    }
    if (!settled) {
      bring_exact_to(k);
      rank = exact_space.rank();
      prov.exact = true;
      if (prov.escalated && !prov.modular_ranks.empty() &&
          std::any_of(prov.modular_ranks.begin(), prov.modular_ranks.end(), [&](std::uint64_t r) { return r != rank; }))
        mod_level = 0;  // modular chains are stale; reseed from the exact basis next time
    }
    out.dims.push_back(rank);
    out.provenance.push_back(std::move(prov));
  }
  return out;
}

std::uint64_t symmetrizer_rank(const CoefficientSystem& cs, std::size_t k, Execution exec) {
  return symmetrizer_image(CyclotomicField{cs.order()}, cs, k, exec).rank();
}

DirectSymmetrizer direct_symmetrizer(const CoefficientSystem& cs, std::size_t k) {
  if (k < 1) throw InvalidArgument("symmetrizer degree must be positive");
  const CyclotomicField field{cs.order()};
  const std::uint64_t dim = int_pow(cs.size(), k);
  DirectSymmetrizer result;
  std::vector<MonomialOperator<CyclotomicField>> gens;
  if (k >= 2) gens = braiding_ops(field, cs, k);

  using Perm = std::vector<std::uint8_t>;
  std::vector<DenseVector<CyclotomicField>> columns(dim, DenseVector<CyclotomicField>(dim, field.zero()));
  auto accumulate = [&](const MonomialOperator<CyclotomicField>& op) {
    for (std::uint64_t b = 0; b < dim; ++b) field.add_assign(columns[b][op.target[b]], op.scale[b]);
  };

  Perm identity(k);
  for (std::size_t x = 0; x < k; ++x) identity[x] = static_cast<std::uint8_t>(x);
  std::map<Perm, MonomialOperator<CyclotomicField>> level;
  level.emplace(identity, MonomialOperator<CyclotomicField>::identity(field, dim));
  while (!level.empty()) {
    for (const auto& [perm, op] : level) {
      accumulate(op);
      ++result.group_order;
    }
    std::map<Perm, MonomialOperator<CyclotomicField>> next;
    for (const auto& [perm, op] : level) {
      Perm where(k);
      for (std::size_t x = 0; x < k; ++x) where[perm[x]] = static_cast<std::uint8_t>(x);
      for (std::size_t i = 0; i + 1 < k; ++i) {
        if (where[i] > where[i + 1]) continue;  // s_i would shorten perm
        Perm longer = perm;
        std::swap(longer[where[i]], longer[where[i + 1]]);
        auto lifted = linalg::compose(field, gens[i], op);
        auto [it, inserted] = next.emplace(std::move(longer), lifted);
        if (!inserted && !(it->second == lifted)) result.matsumoto_consistent = false;
      }
    }
    level = std::move(next);
  }
  result.rank = linalg::rank(field, columns);
  return result;
}

}  // namespace ybn::nichols
