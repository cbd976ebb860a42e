#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "oracles.hpp"
#include "ybn/catalog/catalog.hpp"
#include "ybn/error.hpp"
#include "ybn/io/json_io.hpp"
#include "ybn/nichols/graded.hpp"

using namespace ybn;
using namespace ybn::catalog;

TEST_CASE("expression evaluation") {
  Environment env{{"x", parse_value("2")}, {"q", parse_value("zeta3")}};
  CHECK(evaluate("x^3*x^-1", env) == parse_value("4"));
  CHECK(evaluate("-(x*x)^2", env) == parse_value("-16"));
  CHECK(evaluate("1/2*x", env) == parse_value("1"));
  CHECK(evaluate("q^3", env).is_one());
  CHECK(evaluate("q*zeta4", env).order() == 12);
  CHECK(std::abs(oracle::numeric(evaluate("q*zeta4", env)) - std::polar(1.0, 2 * M_PI * 7 / 12)) < 1e-9);
  CHECK(parse_value("-zeta4^3") == exact::CycloElement::root_power(4, 1));
  CHECK(parse_value("-1/3") == exact::CycloElement::from_rational(1, exact::Rational(-1, 3)));
  CHECK_THROWS_AS(evaluate("y", env), UnknownName);
  CHECK_THROWS_AS(evaluate("x^", env), ParseError);
  CHECK_THROWS_AS(evaluate("(x", env), ParseError);
  CHECK(identifiers("q^3*x2^-1*zeta4") == std::vector<std::string>{"q", "x2"});
}

TEST_CASE("relation parsing") {
  Environment env{{"a", parse_value("3")}};
  auto r = parse_relation("00 + -a:21", env, 0, 3);
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[1].coefficient == parse_value("-3"));
  CHECK(r.terms[1].word == orbits::Word{2, 1});
  auto s = parse_relation("12, -41", {}, 1, 4);
  CHECK(s.terms[0].word == orbits::Word{0, 1});
  CHECK(s.terms[1].coefficient == parse_value("-1"));
  CHECK(s.terms[1].word == orbits::Word{3, 0});
  CHECK_THROWS_AS(parse_relation("05", {}, 0, 3), ParseError);
  CHECK_THROWS_AS(parse_relation("0x", {}, 0, 3), ParseError);
}

TEST_CASE("catalog lookup and instantiation") {
  CHECK(has_entry("w1-grana"));
  CHECK(&find_entry("w1-grana") == &find_entry("w1"));
  CHECK_THROWS_AS(find_entry("w9"), UnknownName);
  for (const char* name : {"z2-shift", "z3-shift", "z4-shift1", "z4-shift2", "x4-sigma", "w1", "w2", "w3", "w4",
                           "w5", "w6", "w7", "w8"})
    CHECK(has_entry(name));
  for (const auto& e : catalog::catalog()) {
    CAPTURE(e.name);
    CHECK_NOTHROW(instantiate(e));
    auto inst = instantiate(e);
    Environment env;
    for (const auto& [k, v] : e.defaults) env.emplace(k, parse_value(v));
    CHECK(constraint_failures(e, env).empty());
    CHECK(inst.system.size() == e.size);
  }
  CHECK_THROWS_AS(instantiate(find_entry("z3-shift"), {{"nope", "1"}}), UnknownName);
  CHECK_THROWS_AS(instantiate(find_entry("z3-shift"), {{"d", "2"}}), ConstraintViolation);
  CHECK_THROWS_AS(instantiate(find_entry("z3-shift"), {{"d", "0"}}), ConstraintViolation);
  CHECK_THROWS_AS(instantiate(find_entry("w1"), {{"q", "1"}}), ConstraintViolation);
  auto moved = instantiate(find_entry("z3-shift"), {{"d", "2"}, {"f", "1/2"}, {"a", "zeta4"}});
  CHECK(moved.system.order() == 12);
  for (const auto& rel : moved.relations) CHECK(nichols::check_relation(moved.system, rel).in_kernel);
}

TEST_CASE("solution JSON round trip") {
  for (const auto& e : catalog::catalog()) {
    auto s = entry_solution(e);
    auto j = io::to_json(s);
    CHECK(io::solution_from_json(j) == s);
    CHECK(io::solution_from_json(io::Json::parse(j.dump())) == s);
  }
  auto j = io::to_json(entry_solution(find_entry("z2-shift")));
  CHECK(j.dump() == R"({"size":2,"r":[[[1,1],[0,1]],[[1,0],[0,0]]]})");
  CHECK_THROWS_AS(io::solution_from_json(io::Json::parse(R"({"size":2,"r":[[[0,0]]]})")), ParseError);
  CHECK_THROWS_AS(io::solution_from_json(io::Json::parse(R"({"size":1,"r":[[[0,3]]]})")), ParseError);
  CHECK_THROWS_AS(io::solution_from_json(io::Json::parse(R"({"r":[]})")), ParseError);
}

TEST_CASE("coefficient JSON round trip validates on load") {
  auto cs = instantiate(find_entry("z3-shift"), {{"a", "1/2"}, {"e", "zeta3"}}).system;
  auto j = io::to_json(cs);
  auto back = io::coefficients_from_json(io::Json::parse(j.dump()));
  CHECK(back.table() == cs.table());
  CHECK(back.solution() == cs.solution());
  j["R"][0][0]["coeffs"][0] = "5";
  j["R"][0][0]["coeffs"][1] = "0";
  CHECK_THROWS_AS(io::coefficients_from_json(j), HexagonViolation);
  auto x = exact::CycloElement::root_power(12, 5);
  CHECK(io::cyclo_from_json(io::to_json(x)) == x);
  CHECK_THROWS_AS(io::cyclo_from_json(io::Json::parse(R"({"order":3,"coeffs":["1"]})")), ParseError);
}

TEST_CASE("graded dims and census JSON") {
  auto cs = instantiate(find_entry("z2-shift")).system;
  auto g = nichols::graded_dims(cs);
  CHECK(io::to_json(g).dump() ==
        R"({"dims":[1,2,1,0],"total":4,"provenance":[{"arithmetic":"exact"},{"arithmetic":"exact"},)"
        R"({"arithmetic":"exact"},{"arithmetic":"exact"}],"termination":"zero"})");
  auto c = orbits::orbit_census(entry_solution(find_entry("flip2")), 3);
  CHECK(io::to_json(c, false).dump() ==
        R"({"n":3,"orbits":[{"lambda":[3],"count":2,"size":1},{"lambda":[2,1],"count":2,"size":3}]})");
  auto w = io::to_json(c, true);
  CHECK(w["witnesses"].size() == 4);
}

TEST_CASE("reading files") {
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), ParseError);
  const char* path = "catalog_io_scratch.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(io::read_json_file(path), ParseError);
  std::remove(path);
}
