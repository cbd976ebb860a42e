#pragma once

#include <string>
#include <vector>

#include "ybn/nichols/coefficients.hpp"
#include "ybn/orbits/action.hpp"
#include "ybn/parallel.hpp"

namespace ybn::nichols {

using orbits::Word;

struct Term {
  CycloElement coefficient;
  Word word;
};

/// A homogeneous element of T(V), sum of coefficient * w_word.
struct Relation {
  std::string label;
  std::vector<Term> terms;
  std::size_t degree() const { return terms.empty() ? 0 : terms.front().word.size(); }
};

/// Letters printed from index_base on.
std::string to_string(const Relation& r, int index_base = 0);

struct RelationCheck {
  bool in_kernel = false;
  std::size_t image_support = 0;  // nonzero coordinates of S_k applied to the element
};

RelationCheck check_relation(const CoefficientSystem& cs, const Relation& relation,
                             Execution exec = Execution::parallel);

/// w_i w_j - R_{i,j} w_{sigma_i(j)} w_{tau_j(i)} off the fixed pairs, and
/// w_{D^{n-1}(i)} ... w_{D(i)} w_i with n the order of R_{D(i),i}.
std::vector<Relation> theorem_relations(const CoefficientSystem& cs);

/// Rank of the span of the degree-2 members of theorem_relations.
std::size_t quadratic_relation_rank(const CoefficientSystem& cs);

}  // namespace ybn::nichols
