#include "ybn/catalog/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ybn/error.hpp"

namespace ybn::catalog {

namespace {

std::string flip_table(std::size_t m) {
  std::string t;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      t += std::to_string(i) + " " + std::to_string(j) + (i == j ? " q " : " 1 ") + std::to_string(j) + " " +
           std::to_string(i) + ";";
  return t;
}

CatalogEntry flip_entry(std::size_t m) {
  return {"flip" + std::to_string(m), "flip solution with diagonal braiding", 0, m, flip_table(m),
          {{"q", "-1"}}, {}, {}, true, true, std::nullopt, {}};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries = {
  {
      "z2-shift", "shift solution r(i,j) = (j-1, i+1) on Z/2", 0, 2,
       "0 0 a 1 1;0 1 q 0 1;1 0 q 1 0;1 1 e 0 0;",
      {{"a", "1"}, {"e", "1"}, {"q", "-1"}},
      {"a*e = 1"},
      {},
      true, true, std::nullopt, {}},
  {
      "z3-shift", "shift solution r(i,j) = (j-1, i+1) on Z/3", 0, 3,
       "0 0 a 2 1;0 1 q 0 1;0 2 d 1 1;"
       "1 0 e 2 2;1 1 f 0 2;1 2 q 1 2;"
       "2 0 q 2 0;2 1 d*f*a^-1 0 0;2 2 d*f*e^-1 1 0;",
      {{"a", "1"}, {"d", "1"}, {"e", "1"}, {"f", "1"}, {"q", "zeta3"}},
      {"d*f = 1"},
      {"00 + -a:21", "02 + -d:11", "10 + -e:22"},
      true, true, std::nullopt, {}},
  {
      "z4-shift1", "shift solution r(i,j) = (j-1, i+1) on Z/4", 0, 4,
       "0 0 x1 3 1;0 1 q 0 1;0 2 x2 1 1;0 3 x3 2 1;"
       "1 0 x4 3 2;1 1 x5 0 2;1 2 q 1 2;1 3 x6 2 2;"
       "2 0 x2*x4*x3^-1 3 3;2 1 x2*x4*x5*x1^-1*x6^-1 0 3;2 2 x2*x5*x6^-1 1 3;2 3 q 2 3;"
       "3 0 q 3 0;3 1 x2*x5*x1^-1 0 0;3 2 x2*x3*x5*x1^-1*x6^-1 1 0;3 3 x3*x5*x4^-1 2 0;",
      {{"q", "-1"}, {"x1", "1"}, {"x2", "1"}, {"x3", "1"}, {"x4", "1"}, {"x5", "1"}, {"x6", "1"}},
      {"x2*x5 = 1", "x1*x6 = x2*x3*x4*x5"},
      {"00 + -x1:31", "02 + -x2:11", "03 + -x3:21", "10 + -x4:32", "13 + -x6:22", "20 + -x2*x4/x3:33"},
      true, true, std::nullopt, {}},
  {
      "z4-shift2", "shift solution r(i,j) = (j-2, i+2) on Z/4, decomposable into even and odd letters", 0, 4,
       "0 0 x1 2 2;0 1 x2 3 2;0 2 q1 0 2;0 3 x3 1 2;"
       "1 0 x4 2 3;1 1 x5 3 3;1 2 x6 0 3;1 3 q2 1 3;"
       "2 0 q1 2 0;2 1 x7 3 0;2 2 x1*x7*x9*x2^-1*x3^-1 0 0;2 3 x9 1 0;"
       "3 0 x3*x6*x7^-1 2 1;3 1 q2 3 1;3 2 x4*x9*x2^-1 0 1;3 3 x3*x5*x9*x2^-1*x7^-1 1 1;",
      {{"q1", "-1"}, {"q2", "zeta3"}, {"x1", "1"}, {"x2", "1"}, {"x3", "1"}, {"x4", "1"}, {"x5", "1"},
       {"x6", "1"}, {"x7", "1"}, {"x9", "1"}},
      {"x1^2*x7*x9 = x2*x3", "x4*x9 = 1", "x3*x6 = 1", "x2*x7 = x3*x5^2*x9"},
      {"00 + -x1:22", "01 + -x2:32", "03 + -x3:12", "10 + -x4:23", "21 + -x7:30", "11 + -x5:33"},
      true, true, std::nullopt, {}},
  {
      "x4-sigma", "solution on {1,2,3,4} with diagonal map (2 3)", 1, 4,
       "1 1 q 1 1;1 2 x2 2 4;1 3 x3 4 2;1 4 x4 3 3;"
       "2 1 x5 3 4;2 2 x6 4 1;2 3 q 2 3;2 4 x8 1 2;"
       "3 1 x5^2*x8*x4^-1*x6^-1 4 3;3 2 q 3 2;3 3 x3*x5*x8*x2^-1*x4^-1 1 4;3 4 x3*x8*x2^-1 2 1;"
       "4 1 x3*x5*x8*x2^-1*x6^-1 2 2;4 2 x5*x8*x2^-1 1 3;4 3 x2*x4*x6*x5^-2 3 1;4 4 q 4 4;",
      {{"q", "-1"}, {"x2", "1"}, {"x3", "1"}, {"x4", "1"}, {"x5", "1"}, {"x6", "1"}, {"x8", "1"}},
      {"(x2*x4*x6)^2 = (x5^2*x8)^2", "x2*x8 = 1", "x2 = x3*x5*x8"},
      {"12 + -x2:24", "13 + -x3:42", "14 + -x4:33", "21 + -x5:34", "22 + -x6:41",
       "31 + -x5^2*x2^-1*x4^-1*x6^-1:43"},
      true, true, std::nullopt, {}},
  {
      "w1", "72-dimensional example 1", 1, 4,
       "1 1 q 1 1;"
       "1 2 x2 3 1;"
       "1 3 x3 4 1;"
       "1 4 q^3*x2^-1*x3^-1 2 1;"
       "2 1 q^3*x7^-1*x8^-1 4 2;"
       "2 2 q 2 2;"
       "2 3 x7 1 2;"
       "2 4 x8 3 2;"
       "3 1 q^5*x2^-1*x3^-1*x7^-1*x8^-1 2 3;"
       "3 2 q*x2*x8^-1 4 3;"
       "3 3 q 3 3;"
       "3 4 q*x7*x3^-1 1 3;"
       "4 1 q^4*x3^-1*x7^-1*x8^-1 3 4;"
       "4 2 x2*x7*q^-1 1 4;"
       "4 3 q^4*x2^-1*x3^-1*x8^-1 2 4;"
       "4 4 q 4 4;",
      {{"q", "-1"}, {"x2", "1"}, {"x3", "1"}, {"x7", "1"}, {"x8", "1"}},
      {"(x3*x8)^2 = q^4", "q = -1", "x3*x8 = 1"},
      {"11",
       "22",
       "33",
       "44",
       "14 + x2^-1*x3^-1:21 + x2^-1*x7^-1:42",
       "13 + -x3:41 + x3*x7^-1:34",
       "12 + -x2:31 + -x7^-1:23",
       "24 + -x8:32 + -x2:43",
       "321321 + 213213 + 132132"},
      false, false, 72, {"w1-grana"}},
  {
      "w2", "72-dimensional example 2", 1, 4,
       "1 1 q 1 1;"
       "1 2 x2 3 4;"
       "1 3 x3 4 2;"
       "1 4 x4 2 3;"
       "2 1 x5 1 2;"
       "2 2 x2*x4*x7*x3^-1*x5^-1 3 3;"
       "2 3 x7 4 1;"
       "2 4 q 2 4;"
       "3 1 x9 1 3;"
       "3 2 q 3 2;"
       "3 3 x3*x7*q^-1 4 4;"
       "3 4 q*x4*x7*x2^-1*x9^-1 2 1;"
       "4 1 x5*x9*q^-1 1 4;"
       "4 2 q*x4*x7*x3^-1*x5^-1 3 1;"
       "4 3 q 4 3;"
       "4 4 x4^2*x7*x2^-1*x9^-1 2 2;",
      {{"q", "-1"}, {"x2", "1"}, {"x3", "1"}, {"x4", "1"}, {"x5", "1"}, {"x7", "1"}, {"x9", "1"}},
      {"x9^2 = q^2", "x5^2 = q^2", "(x4*x7)^2 = q^4", "q = -1", "x4*x5*x7*x9 = 1"},
      {"11",
       "24",
       "32",
       "43",
       "12 + -x2:34 + -x5^-1:21",
       "13 + -x3:42 + -x9^-1:31",
       "14 + -x4:23 + x4*x7:41",
       "33 + x3*x7:44 + -x3*x2^-1*x9^-1:22",
       "x4:312123 + x3*x4*x2^-1:221221 + x3*x4*x2^-1:122122 + 131214"},
      false, false, 72, {}},
  {
      "w3", "72-dimensional example 3", 1, 4,
       "1 1 q 1 1;"
       "1 2 q^3*x3^-1*x4^-1 4 1;"
       "1 3 x3 2 1;"
       "1 4 x4 3 1;"
       "2 1 x7^3*q^-1*x6^-1 4 4;"
       "2 2 x6 1 4;"
       "2 3 x7 3 4;"
       "2 4 q 2 4;"
       "3 1 x3*x7*x6^-1 2 2;"
       "3 2 q 3 2;"
       "3 3 q^2*x3*x6*x4^-1*x7^-2 1 2;"
       "3 4 x3^2*x4*x7*q^-3 4 2;"
       "4 1 q*x4*x7*x3^-1*x6^-1 3 3;"
       "4 2 x3*x4^2*x7*q^-3 2 3;"
       "4 3 q 4 3;"
       "4 4 q*x4*x6*x7^-2 1 3;",
      {{"q", "-1"}, {"x3", "-1"}, {"x4", "1"}, {"x6", "1"}, {"x7", "1"}},
      {"(x3*x4*x7)^2 = q^6", "q = -1", "x3*x4*x7 = -1"},
      {"11",
       "24",
       "32",
       "43",
       "41 + -x7^-1:12 + -x3^-2*x6^-1:33",
       "13 + -x3:21 + -x3*x7^3*x6^-1:44",
       "14 + -x4:31 + -x6^-1:22",
       "23 + -x7:34 + x3*x7:42",
       "x3^6:222222 + 333333 + -x3^6*x4*x6:122223 + x3^9*x4^3*x6^3:212121"},
      false, false, 72, {}},
  {
      "w4", "72-dimensional example 4", 1, 4,
       "1 1 q 1 1;"
       "1 2 x3^2*x4*x5*x6^2*q^-5 4 4;"
       "1 3 x3 2 2;"
       "1 4 x4 3 3;"
       "2 1 x5 1 4;"
       "2 2 x6 4 1;"
       "2 3 q 2 3;"
       "2 4 q^3*x3^-1*x6^-1 3 2;"
       "3 1 q^4*x5*x3^-1*x4^-1*x6^-2 1 2;"
       "3 2 x3^2*x4*x6^3*q^-4*x5^-1 4 3;"
       "3 3 q^7*x5*x3^-2*x4^-2*x6^-3 2 1;"
       "3 4 q 3 4;"
       "4 1 q^7*x5^2*x3^-3*x4^-1*x6^-4 1 3;"
       "4 2 q 4 2;"
       "4 3 x3*x6*x5^-1 2 4;"
       "4 4 q^8*x3^-3*x4^-1*x6^-3 3 1;",
      {{"q", "-1"}, {"x3", "1"}, {"x4", "1"}, {"x5", "1"}, {"x6", "1"}},
      {"q^8*x5^4 = x3^4*x4^2*x6^6", "q = -1", "x3^2*x4*x6^3 = x5^2"},
      {"11",
       "23",
       "34",
       "42",
       "12 + x5^3*x6^-1:44 + -x3*x4*x6^2*x5^-1:31",
       "13 + -x3:22 + x3*x6:41",
       "21 + -x5:14 + x4*x5:33",
       "32 + x3*x6:24 + -x5:43",
       "222222 + x3^-3:313131 + -x6^3*x5^-3:121212 + x6:122224 + -x6^3*x5^-3:212121"},
      false, false, 72, {}},
  {
      "w5", "72-dimensional example 5", 1, 4,
       "1 1 q 1 1;"
       "1 2 x3*x4*q^-1 2 1;"
       "1 3 x3 3 1;"
       "1 4 x4 4 1;"
       "2 1 x5 4 3;"
       "2 2 x5*x8*q^-1 3 3;"
       "2 3 q 2 3;"
       "2 4 x8 1 3;"
       "3 1 q*x5*x6*x4^-1*x8^-1 2 4;"
       "3 2 q^2*x3*x2^-1*x5^-1 1 4;"
       "3 3 q^2*x3*x6*x2^-1*x4^-1*x8^-1 4 4;"
       "3 4 q 3 4;"
       "4 1 q*x2*x6^-1 3 2;"
       "4 2 q 4 2;"
       "4 3 x6 1 2;"
       "4 4 x2 2 2;",
      {{"q", "-1"}, {"x2", "1"}, {"x3", "1"}, {"x4", "1"}, {"x5", "1"}, {"x6", "1"}, {"x8", "1"}},
      {"x4^2 = q^2", "x3^2 = q^2", "(x5*x6)^2 = q^4", "q = -1", "x3*x4*x5*x6 = 1"},
      {"11",
       "23",
       "34",
       "42",
       "21 + x5*x6:12 + -x5:43",
       "24 + -x8:13 + x3*x8:31",
       "14 + -x4:41 + -x2*x5*x3^-1:32",
       "44 + -x2:22 + -x2*x5*x8:33",
       "122122 + -x5*x8*x3^-1:132213 + 221221 + x5:322124"},
      false, false, 72, {}},
  {
      "w6", "72-dimensional example 6", 1, 4,
       "1 1 q 1 1;"
       "1 2 q^3*x2^-1*x3^-1 2 4;"
       "1 3 x1 3 2;"
       "1 4 x5 4 3;"
       "2 1 q*x5*x1^-1 1 3;"
       "2 2 q 2 2;"
       "2 3 q^2*x5*x1^-1*x2^-1 3 4;"
       "2 4 x3*x5*x1^-1 4 1;"
       "3 1 x3*x5*x2^-1 1 4;"
       "3 2 x3 2 1;"
       "3 3 q 3 3;"
       "3 4 x1*x3*q^-1 4 2;"
       "4 1 x1*x2*x3*q^-2 1 2;"
       "4 2 x2 2 3;"
       "4 3 q*x2*x5^-1 3 1;"
       "4 4 q 4 4;",
      {{"q", "-1"}, {"x1", "1"}, {"x2", "1"}, {"x3", "1"}, {"x5", "1"}},
      {"(x3*x5)^2 = q^4", "q = -1", "x3*x5 = 1"},
      {"11",
       "22",
       "33",
       "44",
       "41 + -x1*x2*x3:12 + -x1:24",
       "13 + -x1:32 + x1*x3:21",
       "34 + -x1*x2*x3:23 + x1*x3:42",
       "14 + -x5:43 + -x2:31",
       "214214 + 142142 + 421421"},
      false, false, 72, {}},
  {
      "w7", "72-dimensional example 7", 1, 4,
       "1 1 x1 3 2;"
       "1 2 q 1 2;"
       "1 3 x3 2 2;"
       "1 4 x1*x3*x7^2*q^-3 4 2;"
       "2 1 q 2 1;"
       "2 2 x1*x7^2*x2^-1*x3^-1 4 1;"
       "2 3 x7 3 1;"
       "2 4 x2*x3*x7*q^-1*x1^-1 1 1;"
       "3 1 x1^3*x7^5*q^-5*x2^-2 4 4;"
       "3 2 x1*x7^2*q^-1*x2^-1 2 4;"
       "3 3 q*x7*x2^-1 1 4;"
       "3 4 q 3 4;"
       "4 1 x2*x3*x7*q^-2 1 3;"
       "4 2 x2 3 3;"
       "4 3 q 4 3;"
       "4 4 q^3*x2^2*x3*x1^-2*x7^-3 2 3;",
      {{"q", "-1"}, {"x1", "-1"}, {"x2", "1"}, {"x3", "1"}, {"x7", "1"}},
      {"(x1*x3*x7^3)^2 = q^10", "q = -1", "x1*x3*x7^3 = -1"},
      {"42 + -x7:14 + -x2:33",
       "11 + -x1:32 + x1*x2^-1*x3^-1*x7^-1:24",
       "12",
       "21",
       "34",
       "43",
       "13 + -x3:22 + -x2^-1*x3^-1*x7^-1:41",
       "23 + -x7:31 + x2^-2*x3^-3*x7^-3:44",
       "113113 + 131131 + x1*x2^-1:223114 + x1:231133 + 311311"},
      false, false, 72, {}},
  {
      "w8", "72-dimensional example 8", 1, 4,
       "1 1 x1 2 3;"
       "1 2 q 1 2;"
       "1 3 x3 4 4;"
       "1 4 x4 3 1;"
       "2 1 q 2 1;"
       "2 2 x3^3*x4^3*q^-1*x1^-2*x7^-2 1 4;"
       "2 3 x7 4 2;"
       "2 4 x3^2*x4^4*q^-3*x1^-1*x7^-1 3 3;"
       "3 1 q^2*x1^2*x7^3*x3^-3*x4^-3 2 2;"
       "3 2 x3*x4^2*q^-1*x1^-1 1 3;"
       "3 3 q^3*x7*x3^-1*x4^-2 4 1;"
       "3 4 q 3 4;"
       "4 1 q*x1*x7*x3^-1*x4^-1 2 4;"
       "4 2 q*x4*x1^-1 1 1;"
       "4 3 q 4 3;"
       "4 4 q^2*x1*x7*x3^-2*x4^-1 3 2;",
      {{"q", "-1"}, {"x1", "1"}, {"x3", "1"}, {"x4", "1"}, {"x7", "1"}},
      {"q^4 = (x4*x7)^2", "q = -1", "x4*x7 = 1"},
      {"12",
       "21",
       "34",
       "43",
       "11 + -x1:23 + x1*x7:42",
       "13 + -x3:44 + x1*x7^2*x3^-1:32",
       "14 + -x7^-1:31 + x1^2*x7^5*x3^-3:22",
       "24 + x3^2*x1^-1*x7^-5:33 + x3*x1^-1*x7^-2:41",
       "132241 + 224113 + 411322"},
      false, false, 72, {}},

  };
  for (std::size_t m = 2; m <= 4; ++m) entries.push_back(flip_entry(m));
  return entries;
}

std::vector<std::string> split(const std::string& text, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (seps.find(c) != std::string::npos) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

CycloElement common(const CycloElement& x, long order) { return x.order() == order ? x : x.embed(order); }

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

bool has_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name || std::count(e.aliases.begin(), e.aliases.end(), name)) return true;
  return false;
}

const CatalogEntry& find_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name || std::count(e.aliases.begin(), e.aliases.end(), name)) return e;
  throw UnknownName(name);
}

namespace {

struct ParsedTable {
  std::vector<std::pair<ybe::Letter, ybe::Letter>> pairs;
  std::vector<std::string> coefficients;
};

ParsedTable parse_table(const CatalogEntry& entry) {
  const std::size_t m = entry.size;
  ParsedTable t;
  t.pairs.resize(m * m);
  t.coefficients.resize(m * m);
  std::vector<char> seen(m * m, 0);
  for (const auto& row : split(entry.table, ";")) {
    if (trim(row).empty()) continue;
    std::istringstream in(row);
    long i, j, k, l;
    std::string coef;
    if (!(in >> i >> j >> coef >> k >> l)) throw ParseError("bad table row '" + row + "' in " + entry.name);
    for (long* v : {&i, &j, &k, &l}) {
      *v -= entry.index_base;
      if (*v < 0 || *v >= static_cast<long>(m)) throw ParseError("letter out of range in " + entry.name);
    }
    std::size_t idx = static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j);
    if (seen[idx]) throw ParseError("duplicate table row in " + entry.name);
    seen[idx] = 1;
    t.pairs[idx] = {static_cast<ybe::Letter>(k), static_cast<ybe::Letter>(l)};
    t.coefficients[idx] = coef;
  }
  if (std::count(seen.begin(), seen.end(), 0)) throw ParseError("incomplete table in " + entry.name);
  return t;
}

}  // namespace

ybe::SetSolution entry_solution(const CatalogEntry& entry) {
  return ybe::SetSolution(entry.size, parse_table(entry).pairs);
}

nichols::Relation parse_relation(const std::string& text, const Environment& env, int index_base,
                                 std::size_t alphabet) {
  nichols::Relation r;
  r.label = trim(text);
  for (const auto& raw : split(text, "+,")) {
    std::string term = trim(raw);
    if (term.empty()) continue;
    std::string coef = "1";
    std::string word = term;
    auto colon = term.find(':');
    if (colon != std::string::npos) {
      coef = trim(term.substr(0, colon));
      word = trim(term.substr(colon + 1));
    } else if (term[0] == '-') {
      coef = "-1";
      word = trim(term.substr(1));
    }
    nichols::Term t{evaluate(coef, env), {}};
    if (word.empty()) throw ParseError("empty word in relation '" + text + "'");
    for (char c : word) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad letter in relation '" + text + "'");
      long x = (c - '0') - index_base;
      if (x < 0 || x >= static_cast<long>(alphabet)) throw ParseError("letter out of range in '" + text + "'");
      t.word.push_back(static_cast<ybe::Letter>(x));
    }
    r.terms.push_back(std::move(t));
  }
  return r;
}

std::vector<std::string> constraint_failures(const CatalogEntry& entry, const Environment& env) {
  std::vector<std::string> failures;
  for (const auto& c : entry.constraints) {
    auto eq = c.find('=');
    if (eq == std::string::npos) throw ParseError("constraint without '=' in " + entry.name);
    auto lhs = evaluate(c.substr(0, eq), env);
    auto rhs = evaluate(c.substr(eq + 1), env);
    long order = exact::lcm_order(lhs.order(), rhs.order());
    if (!(common(lhs, order) == common(rhs, order))) failures.push_back(c);
  }
  return failures;
}

Instance instantiate(const CatalogEntry& entry, const std::map<std::string, std::string>& overrides) {
  Environment env;
  for (const auto& [name, value] : entry.defaults) env.emplace(name, parse_value(value));
  for (const auto& [name, value] : overrides) {
    if (!env.count(name)) throw UnknownName("parameter " + name + " of " + entry.name);
    auto v = parse_value(value);
    if (v.is_zero()) throw ConstraintViolation("parameter " + name + " must be nonzero");
    env[name] = v;
  }
  auto failures = constraint_failures(entry, env);
  if (!failures.empty()) {
    std::string msg = entry.name + " parameter point violates:";
    for (const auto& f : failures) msg += " [" + f + "]";
    throw ConstraintViolation(msg);
  }
  auto table = parse_table(entry);
  std::vector<CycloElement> coeffs;
  long order = 1;
  for (const auto& text : table.coefficients) {
    coeffs.push_back(evaluate(text, env));
    order = exact::lcm_order(order, coeffs.back().order());
  }
  for (auto& c : coeffs) c = common(c, order);
  auto system = nichols::validate_coefficients(ybe::SetSolution(entry.size, table.pairs), std::move(coeffs));
  std::vector<nichols::Relation> relations;
  for (const auto& text : entry.relations) relations.push_back(parse_relation(text, env, entry.index_base, entry.size));
  if (entry.theorem_relations) {
    try {
      for (auto& r : nichols::theorem_relations(system)) relations.push_back(std::move(r));
    } catch (const HypothesesNotMet&) {
      // generated relations only exist at root-of-unity points
    }
  }
  return Instance{&entry, std::move(env), std::move(system), std::move(relations)};
}

}  // namespace ybn::catalog
