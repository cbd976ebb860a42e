#include "ybn/nichols/relations.hpp"

#include "ybn/error.hpp"
#include "ybn/exact/fields.hpp"
#include "ybn/nichols/kernels.hpp"

namespace ybn::nichols {

using exact::CyclotomicField;

std::string to_string(const Relation& r, int index_base) {
  if (r.terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < r.terms.size(); ++t) {
    if (t) out += " + ";
    const auto& term = r.terms[t];
    if (!term.coefficient.is_one()) out += "(" + term.coefficient.to_string() + ")*";
    out += "w";
    for (auto x : term.word) out += std::to_string(x + index_base);
  }
  return out;
}

RelationCheck check_relation(const CoefficientSystem& cs, const Relation& relation, Execution exec) {
  RelationCheck check;
  if (relation.terms.empty()) {
    check.in_kernel = true;
    return check;
  }
  const std::size_t k = relation.degree();
  const std::size_t m = cs.size();
  for (const auto& term : relation.terms) {
    if (term.word.size() != k) throw InhomogeneousElement("relation mixes degrees");
    for (auto x : term.word)
      if (x >= m) throw InvalidArgument("relation letter outside X");
  }
  const CyclotomicField field{cs.order()};
  DenseVector<CyclotomicField> v(int_pow(m, k), field.zero());
  for (const auto& term : relation.terms) field.add_assign(v[orbits::encode(term.word, m)], field.from(term.coefficient));
  auto table = make_braiding_table(field, cs);
  auto image = apply_symmetrizer(field, table, k, std::move(v), exec);
  check.image_support = linalg::support_size(field, image);
  check.in_kernel = check.image_support == 0;
  return check;
}

std::vector<Relation> theorem_relations(const CoefficientSystem& cs) {
  const auto& s = cs.solution();
  auto d = ybe::diagonal(s);
  const auto m = static_cast<Letter>(s.size());
  std::vector<Relation> out;
  for (Letter i = 0; i < m; ++i)
    for (Letter j = 0; j < m; ++j) {
      if (i == d.apply(j)) continue;
      auto [a, b] = s(i, j);
      Relation r;
      r.label = "quadratic " + std::to_string(i) + std::to_string(j);
      r.terms.push_back({CycloElement::from_rational(cs.order(), exact::Rational(1)), {i, j}});
      r.terms.push_back({-cs(i, j), {a, b}});
      out.push_back(std::move(r));
    }
  for (Letter i = 0; i < m; ++i) {
    auto n = exact::root_of_unity_order(cs(d.apply(i), i));
    if (!n || *n < 2) throw HypothesesNotMet("R_{D(i),i} is not a primitive root of unity of order >= 2");
    Relation r;
    r.label = "power " + std::to_string(i);
    r.terms.push_back({CycloElement::from_rational(cs.order(), exact::Rational(1)),
                       orbits::psi(d, static_cast<std::size_t>(*n), i)});
    out.push_back(std::move(r));
  }
  return out;
}

std::size_t quadratic_relation_rank(const CoefficientSystem& cs) {
  const CyclotomicField field{cs.order()};
  const std::size_t m = cs.size();
  RowSpace<CyclotomicField> span(field, m * m);
  for (const auto& r : theorem_relations(cs)) {
    if (r.degree() != 2) continue;
    DenseVector<CyclotomicField> v(m * m, field.zero());
    for (const auto& term : r.terms) field.add_assign(v[orbits::encode(term.word, m)], term.coefficient);
    span.insert(std::move(v));
  }
  return span.rank();
}

}  // namespace ybn::nichols
