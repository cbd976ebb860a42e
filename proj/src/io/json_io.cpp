#include "ybn/io/json_io.hpp"

#include <fstream>

#include "ybn/error.hpp"

namespace ybn::io {

Json to_json(const ybe::SetSolution& s) {
  Json rows = Json::array();
  for (ybe::Letter i = 0; i < s.size(); ++i) {
    Json row = Json::array();
    for (ybe::Letter j = 0; j < s.size(); ++j) row.push_back({s(i, j).first, s(i, j).second});
    rows.push_back(std::move(row));
  }
  return Json{{"size", s.size()}, {"r", std::move(rows)}};
}

ybe::SetSolution solution_from_json(const Json& j) {
  try {
    std::size_t m = j.at("size").get<std::size_t>();
    const auto& rows = j.at("r");
    if (m < 1 || !rows.is_array() || rows.size() != m) throw ParseError("solution 'r' must have size rows");
    std::vector<std::pair<ybe::Letter, ybe::Letter>> table;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != m) throw ParseError("solution row must have size entries");
      for (const auto& e : row) {
        if (!e.is_array() || e.size() != 2) throw ParseError("solution entry must be a pair");
        auto a = e[0].get<long>(), b = e[1].get<long>();
        if (a < 0 || b < 0 || a >= static_cast<long>(m) || b >= static_cast<long>(m))
          throw ParseError("solution entry outside X");
        table.push_back({static_cast<ybe::Letter>(a), static_cast<ybe::Letter>(b)});
      }
    }
    return ybe::SetSolution(m, std::move(table));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed solution JSON: ") + e.what());
  }
}

Json to_json(const exact::CycloElement& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(c.to_string());
  return Json{{"order", x.order()}, {"coeffs", std::move(coeffs)}};
}

exact::CycloElement cyclo_from_json(const Json& j) {
  try {
    long order = j.at("order").get<long>();
    if (order < 1) throw ParseError("cyclotomic order must be positive");
    std::vector<exact::Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
      if (c.is_string())
        coeffs.push_back(exact::Rational::parse(c.get<std::string>()));
      else
        coeffs.push_back(exact::Rational(c.get<long>()));
    }
    if (static_cast<long>(coeffs.size()) != exact::euler_phi(order))
      throw ParseError("cyclotomic element needs phi(order) coefficients");
    return exact::CycloElement(order, std::move(coeffs));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed cyclotomic element: ") + e.what());
  }
}

Json to_json(const nichols::CoefficientSystem& cs) {
  Json rows = Json::array();
  for (ybe::Letter i = 0; i < cs.size(); ++i) {
    Json row = Json::array();
    for (ybe::Letter j = 0; j < cs.size(); ++j) row.push_back(to_json(cs(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"solution", to_json(cs.solution())}, {"cyclotomic_order", cs.order()}, {"R", std::move(rows)}};
}

nichols::CoefficientSystem coefficients_from_json(const Json& j) {
  try {
    auto s = solution_from_json(j.at("solution"));
    long order = j.at("cyclotomic_order").get<long>();
    const auto& rows = j.at("R");
    if (!rows.is_array() || rows.size() != s.size()) throw ParseError("'R' must have size rows");
    std::vector<exact::CycloElement> table;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != s.size()) throw ParseError("'R' row must have size entries");
      for (const auto& e : row) {
        auto x = cyclo_from_json(e);
        if (order % x.order() != 0) throw ParseError("entry order does not divide cyclotomic_order");
        table.push_back(x.embed(order));
      }
    }
    return nichols::validate_coefficients(std::move(s), std::move(table));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed coefficient JSON: ") + e.what());
  }
}

Json to_json(const nichols::GradedDims& g) {
  Json prov = Json::array();
  for (const auto& p : g.provenance) {
    Json entry{{"arithmetic", p.exact ? "exact" : "modular"}};
    if (!p.primes.empty()) {
      entry["primes"] = p.primes;
      entry["modular_ranks"] = p.modular_ranks;
    }
    if (p.escalated) {
      entry["escalated"] = true;
      entry["reason"] = p.reason;
    }
    prov.push_back(std::move(entry));
  }
  Json out{{"dims", g.dims}};
  auto total = g.total();
  out["total"] = total ? Json(*total) : Json(nullptr);
  out["provenance"] = std::move(prov);
  out["termination"] = nichols::to_string(g.termination);
  if (!g.note.empty()) out["note"] = g.note;
  return out;
}

Json to_json(const orbits::Partition& p) { return Json(p.parts); }

Json to_json(const orbits::Census& c, bool witnesses) {
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    Json row{{"lambda", to_json(r.lambda)}, {"count", r.count}, {"size", r.size}};
    if (!r.uniform_size) row["uniform_size"] = false;
    rows.push_back(std::move(row));
  }
  Json out{{"n", c.n}, {"orbits", std::move(rows)}};
  if (witnesses) {
    Json list = Json::array();
    for (const auto& o : c.orbits)
      list.push_back({{"representative", orbits::word_string(o.representative)},
                      {"size", o.size},
                      {"lambda", to_json(o.lambda)},
                      {"lambda_element", orbits::word_string(o.lambda_element)}});
    out["witnesses"] = std::move(list);
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace ybn::io
