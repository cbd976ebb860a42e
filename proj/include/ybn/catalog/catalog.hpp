#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ybn/catalog/expression.hpp"
#include "ybn/nichols/coefficients.hpp"
#include "ybn/nichols/relations.hpp"

namespace ybn::catalog {

struct CatalogEntry {
  std::string name;
  std::string locus;  // short description of where the example comes from
  int index_base = 0;  // letters in table and relations start at this value
  std::size_t size = 0;
  std::string table;   // "i j coefficient k l;" per pair, r(i,j) = (k,l)
  std::vector<std::pair<std::string, std::string>> defaults;
  std::vector<std::string> constraints;  // "lhs = rhs"
  std::vector<std::string> relations;    // "coef:word + word + ..."
  bool theorem_relations = false;        // also check the generated quadratic and power relations
  bool involutive = true;
  std::optional<std::uint64_t> expected_total;  // fixed total; otherwise predicted by the theorem checks
  std::vector<std::string> aliases;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& find_entry(const std::string& name);
bool has_entry(const std::string& name);

struct Instance {
  const CatalogEntry* entry = nullptr;
  std::map<std::string, CycloElement> parameters;
  nichols::CoefficientSystem system;
  std::vector<nichols::Relation> relations;  // listed relations, then generated ones
};

/// Solution table of an entry without coefficients.
ybe::SetSolution entry_solution(const CatalogEntry& entry);

/// Evaluates the parameter point (defaults plus overrides), checks constraints and the hexagon identity.
/// Throws UnknownName for unknown parameters, ConstraintViolation, HexagonViolation.
Instance instantiate(const CatalogEntry& entry, const std::map<std::string, std::string>& overrides = {});

/// Parses "coef:word + word, ..." with words written in the given index base.
nichols::Relation parse_relation(const std::string& text, const Environment& env, int index_base,
                                 std::size_t alphabet);

std::vector<std::string> constraint_failures(const CatalogEntry& entry, const Environment& env);

}  // namespace ybn::catalog
