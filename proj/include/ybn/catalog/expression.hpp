#pragma once

#include <map>
#include <string>
#include <string_view>

#include "ybn/exact/cyclotomic.hpp"

namespace ybn::catalog {

using exact::CycloElement;
using Environment = std::map<std::string, CycloElement>;

/// Evaluates products and quotients of rationals, parameters and zetaN, with integer powers and parentheses,
/// e.g. "q^3*x2^-1", "-(x3*x8)^2", "1/2*zeta6^5". Throws ParseError / UnknownName.
CycloElement evaluate(std::string_view text, const Environment& env = {});

/// A parameter value such as "2", "-1/3", "zeta3", "-zeta4^3".
CycloElement parse_value(std::string_view text);

/// Parameter names referenced by an expression, zetaN excluded.
std::vector<std::string> identifiers(std::string_view text);

}  // namespace ybn::catalog
