#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ybn/orbits/action.hpp"
#include "ybn/parallel.hpp"

namespace ybn::orbits {

struct CensusRow {
  Partition lambda;
  std::uint64_t count = 0;  // orbits of this type
  std::uint64_t size = 0;   // common orbit size
  bool uniform_size = true;
};

struct Census {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<CensusRow> rows;      // decreasing lambda
  std::vector<OrbitReport> orbits;  // by increasing representative
  std::uint64_t orbit_count() const { return orbits.size(); }
};

struct CensusOptions {
  std::uint64_t max_words = 10'000'000;
  Execution execution = Execution::parallel;
};

/// Partitions X^n into orbits by exhaustive search and classifies each one.
Census orbit_census(const ybe::SetSolution& s, std::size_t n, const CensusOptions& options = {});

}  // namespace ybn::orbits
