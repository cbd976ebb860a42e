#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ybn/exact/fields.hpp"
#include "ybn/nichols/kernels.hpp"

namespace ybn::nichols {

enum class Termination { zero, cap, cap_exceeded };
std::string to_string(Termination t);

enum class ArithmeticMode { automatic, exact, modular };

struct DegreeProvenance {
  bool exact = true;
  std::vector<std::uint64_t> primes;         // modular attempts at this degree
  std::vector<std::uint64_t> modular_ranks;  // one per prime
  bool escalated = false;
  std::string reason;  // why exact arithmetic was used after a modular attempt
};

struct GradedDims {
  std::vector<std::uint64_t> dims;
  Termination termination = Termination::cap;
  std::vector<DegreeProvenance> provenance;
  std::string note;
  /// Only defined when a zero degree was reached.
  std::optional<std::uint64_t> total() const;
};

struct GradedDimsOptions {
  std::size_t max_degree = 64;
  std::uint64_t exact_cap = 4096;            // automatic mode: exact while m^k is at most this
  std::uint64_t dimension_limit = 1u << 22;  // m^k beyond this stops with cap_exceeded
  ArithmeticMode mode = ArithmeticMode::automatic;
  std::vector<std::uint64_t> primes;  // defaults to the two smallest valid primes
  std::set<std::size_t> force_exact;
  std::function<std::optional<std::uint64_t>(std::size_t)> expected;
  Execution execution = Execution::parallel;
};

GradedDims graded_dims(const CoefficientSystem& cs, const GradedDimsOptions& options = {});

/// dim Im S_k in exact arithmetic.
std::uint64_t symmetrizer_rank(const CoefficientSystem& cs, std::size_t k, Execution exec = Execution::parallel);

struct DirectSymmetrizer {
  std::uint64_t rank = 0;
  bool matsumoto_consistent = true;
  std::uint64_t group_order = 0;
};

/// Sum over all of S_k of the braid-lifted operators, with every left descent checked for agreement.
DirectSymmetrizer direct_symmetrizer(const CoefficientSystem& cs, std::size_t k);

}  // namespace ybn::nichols
