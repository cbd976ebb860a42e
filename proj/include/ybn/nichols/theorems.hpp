#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybn/nichols/graded.hpp"
#include "ybn/nichols/relations.hpp"

namespace ybn::nichols {

/// Sum of Perm(lambda) over partitions of k into at most m parts with lambda_1 <= n - 1.
std::uint64_t predicted_dimension(std::uint32_t m, std::uint32_t n, std::uint32_t k);

/// predicted_dimension for the root order of q; throws HypothesesNotMet.
std::uint64_t orbit_count_oracle(const CoefficientSystem& cs, std::uint32_t k);

enum class TheoremBranch { root_of_unity, growth, product };
std::string to_string(TheoremBranch b);

struct PartSummary {
  ybe::Subset letters;
  long root_order = 0;
};

struct TheoremReport {
  TheoremBranch branch = TheoremBranch::root_of_unity;
  GradedDims dims;
  std::vector<std::uint64_t> expected_dims;  // per degree where the branch predicts them
  std::optional<std::uint64_t> expected_total;
  std::vector<PartSummary> parts;
  std::vector<std::pair<Relation, RelationCheck>> relations;
  bool dims_match = true;
  bool total_match = true;
  bool relations_pass = true;
  bool passed() const { return dims_match && total_match && relations_pass; }
  std::string summary;
};

struct TheoremOptions {
  std::size_t growth_cap = 8;
  bool check_relations = true;
  GradedDimsOptions dims;
};

TheoremReport theorem_suite(const CoefficientSystem& cs, const TheoremOptions& options = {});

}  // namespace ybn::nichols
