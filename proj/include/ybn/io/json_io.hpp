#pragma once

#include <string>

#include "json.hpp"
#include "ybn/nichols/graded.hpp"
#include "ybn/orbits/census.hpp"

namespace ybn::io {

using Json = nlohmann::ordered_json;

Json to_json(const ybe::SetSolution& s);
ybe::SetSolution solution_from_json(const Json& j);

Json to_json(const exact::CycloElement& x);
exact::CycloElement cyclo_from_json(const Json& j);

Json to_json(const nichols::CoefficientSystem& cs);
/// Validates the hexagon identity on load.
nichols::CoefficientSystem coefficients_from_json(const Json& j);

Json to_json(const nichols::GradedDims& g);
Json to_json(const orbits::Census& c, bool witnesses);
Json to_json(const orbits::Partition& p);

/// Parses a file; ParseError on I/O or syntax problems.
Json read_json_file(const std::string& path);

}  // namespace ybn::io
