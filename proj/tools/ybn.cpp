#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ybn/catalog/catalog.hpp"
#include "ybn/error.hpp"
#include "ybn/io/json_io.hpp"
#include "ybn/nichols/theorems.hpp"
#include "ybn/orbits/census.hpp"

using namespace ybn;
using io::Json;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;

struct Globals {
  bool json = false;
  int threads = 0;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> mod_primes;
  std::uint64_t exact_cap = 4096;
};

/// What a positional target resolves to: a catalog entry or a JSON file.
struct Target {
  const catalog::CatalogEntry* entry = nullptr;
  std::string label;
  std::optional<Json> file;
  int base = 0;
};

Target resolve(const std::string& name) {
  Target t;
  t.label = name;
  if (std::filesystem::is_regular_file(name)) {
    t.file = io::read_json_file(name);
    return t;
  }
  t.entry = &catalog::find_entry(name);
  t.base = t.entry->index_base;
  t.label = t.entry->name;
  return t;
}

ybe::SetSolution target_solution(const Target& t) {
  if (t.entry) return catalog::entry_solution(*t.entry);
  if (t.file->contains("solution")) return io::solution_from_json((*t.file)["solution"]);
  return io::solution_from_json(*t.file);
}

struct SystemRequest {
  std::string q;
  std::vector<std::string> params;
};

std::map<std::string, std::string> parse_params(const SystemRequest& req) {
  std::map<std::string, std::string> out;
  for (const auto& p : req.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects name=value, got " + p);
    out[p.substr(0, eq)] = p.substr(eq + 1);
  }
  if (!req.q.empty()) out["q"] = req.q;
  return out;
}

struct Loaded {
  nichols::CoefficientSystem system;
  std::vector<nichols::Relation> relations;
  catalog::Environment env;
};

Loaded load_system(const Target& t, const SystemRequest& req) {
  if (t.entry) {
    auto inst = catalog::instantiate(*t.entry, parse_params(req));
    return {std::move(inst.system), std::move(inst.relations), std::move(inst.parameters)};
  }
  if (!req.params.empty()) throw InputError("--param applies to catalog entries only");
  if (t.file->contains("solution")) {
    if (!req.q.empty()) throw InputError("--q applies to bare solutions, this file carries coefficients");
    return {io::coefficients_from_json(*t.file), {}, {}};
  }
  auto q = catalog::parse_value(req.q.empty() ? "-1" : req.q);
  auto s = io::solution_from_json(*t.file);
  return {nichols::canonical_coefficients(s, q, true), {}, {{"q", q}}};
}

std::string subset_string(const ybe::Subset& part, int base) {
  std::string out = "{";
  for (std::size_t i = 0; i < part.size(); ++i) out += (i ? "," : "") + std::to_string(part[i] + base);
  return out + "}";
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::vector<std::uint64_t> phi_vector(const ybe::SetSolution& s) {
  auto l = ybe::phi_invariant(s);
  return {l.begin() + 1, l.end()};
}

nichols::GradedDimsOptions dims_options(const Globals& g) {
  nichols::GradedDimsOptions o;
  o.exact_cap = g.exact_cap;
  o.primes = g.mod_primes;
  return o;
}

void print_dims_text(const nichols::GradedDims& d) {
  std::cout << "dims: " << join(d.dims, " ") << "\n";
  auto total = d.total();
  std::cout << "total: " << (total ? std::to_string(*total) : std::string("unknown")) << "\n";
  std::cout << "termination: " << nichols::to_string(d.termination) << "\n";
  for (std::size_t k = 0; k < d.provenance.size(); ++k) {
    const auto& p = d.provenance[k];
    if (p.primes.empty() && !p.escalated) continue;
    std::cout << "  degree " << k << ": ";
    if (!p.primes.empty()) std::cout << "mod " << join(p.primes, ",") << " ranks " << join(p.modular_ranks, ",");
    if (p.escalated) std::cout << (p.primes.empty() ? "" : "; ") << "exact (" << p.reason << ")";
    std::cout << "\n";
  }
  if (!d.note.empty()) std::cout << "note: " << d.note << "\n";
}

// ---- verify

struct VerifyArgs {
  std::string target;
  std::size_t mutations = 0;
};

/// Scales one random table entry by 2 and asks the validator again.
std::pair<std::size_t, std::size_t> run_mutations(const nichols::CoefficientSystem& cs, std::size_t count,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, cs.table().size() - 1);
  std::size_t rejected = 0;
  auto two = exact::CycloElement::from_rational(cs.order(), exact::Rational(2));
  for (std::size_t n = 0; n < count; ++n) {
    auto table = cs.table();
    table[pick(rng)] *= two;
    if (!nichols::hexagon_failures(cs.solution(), table).empty()) ++rejected;
  }
  return {rejected, count};
}

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  auto t = resolve(a.target);
  auto s = target_solution(t);
  auto rep = ybe::verify_solution(s);
  const int base = t.base;
  Json out;
  out["target"] = t.label;
  out["size"] = s.size();
  out["ybe"] = rep.is_ybe;
  out["nondegenerate"] = rep.is_nondegenerate;
  out["involutive"] = rep.is_involutive;
  out["bijective"] = rep.is_bijective;
  if (!rep.ybe_failures.empty()) {
    Json w = Json::array();
    for (auto& f : rep.ybe_failures) w.push_back({f[0] + base, f[1] + base, f[2] + base});
    out["ybe_failures"] = w;
  }

  bool ok = rep.is_ybe && rep.is_nondegenerate;
  if (t.entry)
    ok = ok && rep.is_involutive == t.entry->involutive;

  if (rep.is_nondegenerate && rep.is_involutive) {
    auto d = ybe::diagonal(s);
    out["diagonal"] = ybe::cycle_string(d.forward, base);
    auto split = ybe::decompose(s);
    out["decomposition"] = split ? subset_string(split->first, base) + "|" + subset_string(split->second, base)
                                 : std::string("indecomposable");
    auto parts = ybe::finest_decomposition(s);
    Json fp = Json::array();
    bool preserved = true;
    for (const auto& part : parts) {
      fp.push_back(subset_string(part, base));
      std::set<ybe::Letter> in(part.begin(), part.end());
      for (auto x : part) preserved = preserved && in.count(d.apply(x));
    }
    out["finest_parts"] = fp;
    out["diagonal_preserves_parts"] = preserved;
  }
  if (rep.is_bijective) out["phi"] = phi_vector(s);
  if (rep.is_nondegenerate) out["transitive"] = ybe::is_transitive(s);

  if (t.entry || (t.file && t.file->contains("solution"))) {
    try {
      auto loaded = load_system(t, {});
      out["hexagon"] = true;
      if (a.mutations) {
        auto [rejected, total] = run_mutations(loaded.system, a.mutations, g.seed);
        out["mutations"] = {{"rejected", rejected}, {"total", total}, {"seed", g.seed}};
      }
    } catch (const HexagonViolation& e) {
      out["hexagon"] = false;
      out["hexagon_failures"] = e.witnesses().size();
      ok = false;
    } catch (const ConstraintViolation& e) {
      out["constraints"] = e.what();
      ok = false;
    }
  }
  out["pass"] = ok;

  if (g.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "solution: " << t.label << " (size " << s.size() << ")\n";
    std::cout << "YBE: " << yn(rep.is_ybe) << "\n";
    for (auto& f : rep.ybe_failures)
      std::cout << "  fails on (" << f[0] + base << "," << f[1] + base << "," << f[2] + base << ")\n";
    std::cout << "non-degenerate: " << yn(rep.is_nondegenerate) << "\n";
    std::cout << "involutive: " << yn(rep.is_involutive) << "\n";
    std::cout << "bijective: " << yn(rep.is_bijective) << "\n";
    if (out.contains("diagonal")) {
      std::cout << "D: " << out["diagonal"].get<std::string>() << "\n";
      std::cout << "decomposition: " << out["decomposition"].get<std::string>() << "\n";
      std::cout << "finest parts:";
      for (auto& p : out["finest_parts"]) std::cout << " " << p.get<std::string>();
      std::cout << "\nD preserves parts: " << yn(out["diagonal_preserves_parts"].get<bool>()) << "\n";
    }
    if (out.contains("transitive")) std::cout << "transitive: " << yn(out["transitive"].get<bool>()) << "\n";
    if (out.contains("phi")) std::cout << "Phi: (" << join(phi_vector(s), ",") << ")\n";
    if (out.contains("hexagon")) std::cout << "hexagon: " << (out["hexagon"].get<bool>() ? "ok" : "fails") << "\n";
    if (out.contains("constraints")) std::cout << "constraints: " << out["constraints"].get<std::string>() << "\n";
    if (out.contains("mutations"))
      std::cout << "mutations rejected: " << out["mutations"]["rejected"].get<std::size_t>() << "/"
                << out["mutations"]["total"].get<std::size_t>() << " (seed " << g.seed << ")\n";
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? exit_pass : exit_mismatch;
}

// ---- orbits

struct OrbitsArgs {
  std::string target;
  std::size_t n = 0;
  bool witness = false;
  bool csv = false;
  std::uint64_t max_words = 10'000'000;
};

/// Census facts that hold for every non-degenerate involutive solution.
std::vector<std::string> census_failures(const orbits::Census& c) {
  std::vector<std::string> bad;
  const auto m = static_cast<std::uint32_t>(c.m);
  const auto n = static_cast<std::uint32_t>(c.n);
  auto expected_orbits = orbits::binomial(n + m - 1, m - 1);
  if (c.orbit_count() != expected_orbits)
    bad.push_back("orbit count " + std::to_string(c.orbit_count()) + " != " + std::to_string(expected_orbits));
  std::uint64_t words = 0;
  for (const auto& r : c.rows) {
    auto perm = orbits::perm_count(r.lambda, m);
    auto size = orbits::multinomial(r.lambda);
    if (r.count != perm) bad.push_back(r.lambda.to_string() + ": count " + std::to_string(r.count) + " != " + std::to_string(perm));
    if (!r.uniform_size || r.size != size)
      bad.push_back(r.lambda.to_string() + ": size " + std::to_string(r.size) + " != " + std::to_string(size));
    words += r.count * r.size;
  }
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) total *= m;
  if (words != total) bad.push_back("orbits cover " + std::to_string(words) + " words of " + std::to_string(total));
  return bad;
}

int cmd_orbits(const Globals& g, const OrbitsArgs& a) {
  auto t = resolve(a.target);
  auto s = target_solution(t);
  orbits::CensusOptions opts;
  opts.max_words = a.max_words;
  auto census = orbits::orbit_census(s, a.n, opts);
  auto bad = census_failures(census);

  if (g.json) {
    auto out = io::to_json(census, a.witness);
    out["checks"] = bad.empty();
    std::cout << out.dump(2) << "\n";
  } else if (a.csv) {
    std::cout << "lambda,count,size\n";
    for (const auto& r : census.rows)
      std::cout << "\"" << r.lambda.to_string() << "\"," << r.count << "," << r.size << "\n";
    if (a.witness) {
      std::cout << "\nrepresentative,size,lambda,lambda_element\n";
      for (const auto& o : census.orbits)
        std::cout << orbits::word_string(o.representative) << "," << o.size << ",\"" << o.lambda.to_string() << "\","
                  << orbits::word_string(o.lambda_element) << "\n";
    }
  } else {
    std::cout << t.label << ", n = " << census.n << ": " << census.orbit_count() << " orbits\n";
    std::cout << "lambda        count  size\n";
    for (const auto& r : census.rows) {
      auto l = r.lambda.to_string();
      std::cout << l << std::string(l.size() < 14 ? 14 - l.size() : 1, ' ') << r.count << std::string(7 - std::min<std::size_t>(6, std::to_string(r.count).size()), ' ') << r.size << "\n";
    }
    if (a.witness)
      for (const auto& o : census.orbits)
        std::cout << "  O(" << orbits::word_string(o.representative) << ") size " << o.size << " "
                  << o.lambda.to_string() << " witness " << orbits::word_string(o.lambda_element) << "\n";
    for (const auto& b : bad) std::cout << "check failed: " << b << "\n";
  }
  for (const auto& b : bad) std::cerr << "ybn: " << b << "\n";
  return bad.empty() ? exit_pass : exit_mismatch;
}

// ---- dims

struct DimsArgs {
  std::string target;
  SystemRequest request;
  std::optional<std::size_t> cap;
  bool mod = false;
  bool exact = false;
  bool expect = false;
  std::vector<std::size_t> escalate;
};

int cmd_dims(const Globals& g, const DimsArgs& a) {
  auto t = resolve(a.target);
  auto loaded = load_system(t, a.request);
  auto opts = dims_options(g);
  if (a.cap) opts.max_degree = *a.cap;
  if (a.mod) opts.mode = nichols::ArithmeticMode::modular;
  if (a.exact) opts.mode = nichols::ArithmeticMode::exact;
  opts.force_exact.insert(a.escalate.begin(), a.escalate.end());

  Json out{{"target", t.label}};
  bool ok = true;
  nichols::GradedDims dims;

  if (!a.expect) {
    dims = nichols::graded_dims(loaded.system, opts);
    out["graded"] = io::to_json(dims);
  } else if (t.entry && t.entry->expected_total) {
    dims = nichols::graded_dims(loaded.system, opts);
    out["graded"] = io::to_json(dims);
    out["expected_total"] = *t.entry->expected_total;
    ok = dims.total() == t.entry->expected_total;
  } else {
    nichols::TheoremOptions to;
    to.dims = opts;
    to.growth_cap = a.cap.value_or(8);
    to.check_relations = false;
    auto rep = nichols::theorem_suite(loaded.system, to);
    dims = rep.dims;
    out["graded"] = io::to_json(dims);
    out["branch"] = nichols::to_string(rep.branch);
    out["expected_dims"] = rep.expected_dims;
    out["expected_total"] = rep.expected_total ? Json(*rep.expected_total) : Json(nullptr);
    if (!rep.parts.empty()) {
      Json parts = Json::array();
      for (const auto& p : rep.parts) parts.push_back({{"letters", subset_string(p.letters, t.base)}, {"root_order", p.root_order}});
      out["parts"] = parts;
    }
    out["summary"] = rep.summary;
    ok = rep.passed();
  }
  if (a.expect) out["pass"] = ok;

  if (g.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    print_dims_text(dims);
    if (a.expect) {
      if (out.contains("summary")) std::cout << "expected (" << out["branch"].get<std::string>() << "): " << out["summary"].get<std::string>() << "\n";
      else std::cout << "expected total: " << *t.entry->expected_total << "\n";
      std::cout << (ok ? "PASS" : "FAIL") << "\n";
    }
  }
  return ok ? exit_pass : exit_mismatch;
}

// ---- relations

struct RelationsArgs {
  std::string target;
  SystemRequest request;
  std::vector<std::string> checks;
};

int cmd_relations(const Globals& g, const RelationsArgs& a) {
  auto t = resolve(a.target);
  auto loaded = load_system(t, a.request);
  const auto m = loaded.system.size();
  std::vector<nichols::Relation> rels;
  if (!a.checks.empty()) {
    for (const auto& text : a.checks) rels.push_back(catalog::parse_relation(text, loaded.env, t.base, m));
  } else if (t.entry) {
    rels = loaded.relations;
  } else {
    rels = nichols::theorem_relations(loaded.system);
  }
  if (rels.empty()) throw InputError(t.label + " has no relations to check");

  bool ok = true;
  Json list = Json::array();
  for (const auto& r : rels) {
    auto check = nichols::check_relation(loaded.system, r);
    ok = ok && check.in_kernel;
    list.push_back({{"relation", nichols::to_string(r, t.base)},
                    {"degree", r.degree()},
                    {"in_kernel", check.in_kernel},
                    {"image_support", check.image_support}});
  }
  if (g.json) {
    Json out{{"target", t.label}, {"relations", list}, {"pass", ok}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : list)
      std::cout << (r["in_kernel"].get<bool>() ? "pass  " : "FAIL  ") << "deg " << r["degree"].get<std::size_t>()
                << "  " << r["relation"].get<std::string>() << "  (image support "
                << r["image_support"].get<std::size_t>() << ")\n";
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? exit_pass : exit_mismatch;
}

// ---- phi

struct PhiArgs {
  std::string target;
  SystemRequest request;
  bool with_dims = false;
  std::optional<std::size_t> cap;
};

int cmd_phi(const Globals& g, const PhiArgs& a) {
  auto t = resolve(a.target);
  auto s = target_solution(t);
  auto phi = phi_vector(s);
  Json out{{"target", t.label}, {"phi", phi}};
  std::optional<nichols::GradedDims> dims;
  if (a.with_dims) {
    auto loaded = load_system(t, a.request);
    auto opts = dims_options(g);
    if (a.cap) opts.max_degree = *a.cap;
    dims = nichols::graded_dims(loaded.system, opts);
    out["graded"] = io::to_json(*dims);
  }
  if (g.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "Phi: (" << join(phi, ",") << ")\n";
    if (dims) print_dims_text(*dims);
  }
  return exit_pass;
}

// ---- catalog

int cmd_catalog(const Globals& g, const std::string& name) {
  if (name.empty()) {
    if (g.json) {
      Json list = Json::array();
      for (const auto& e : catalog::catalog())
        list.push_back({{"name", e.name}, {"size", e.size}, {"locus", e.locus}});
      std::cout << list.dump(2) << "\n";
    } else {
      for (const auto& e : catalog::catalog())
        std::cout << e.name << std::string(e.name.size() < 11 ? 11 - e.name.size() : 1, ' ') << "m=" << e.size
                  << "  " << e.locus << "\n";
    }
    return exit_pass;
  }
  const auto& e = catalog::find_entry(name);
  Json defaults = Json::object();
  for (const auto& [k, v] : e.defaults) defaults[k] = v;
  Json out{{"name", e.name},
           {"locus", e.locus},
           {"index_base", e.index_base},
           {"size", e.size},
           {"involutive", e.involutive},
           {"defaults", defaults},
           {"constraints", e.constraints},
           {"relations", e.relations},
           {"theorem_relations", e.theorem_relations},
           {"expected_total", e.expected_total ? Json(*e.expected_total) : Json(nullptr)},
           {"aliases", e.aliases},
           {"solution", io::to_json(catalog::entry_solution(e))}};
  if (g.json) {
    std::cout << out.dump(2) << "\n";
    return exit_pass;
  }
  std::cout << e.name << ": " << e.locus << "\n";
  std::cout << "letters " << e.index_base << ".." << e.index_base + static_cast<int>(e.size) - 1 << "\n";
  std::cout << "parameters:";
  for (const auto& [k, v] : e.defaults) std::cout << " " << k << "=" << v;
  std::cout << "\n";
  for (const auto& c : e.constraints) std::cout << "constraint: " << c << "\n";
  for (const auto& r : e.relations) std::cout << "relation: " << r << "\n";
  if (e.expected_total) std::cout << "expected total: " << *e.expected_total << "\n";
  for (const auto& alias : e.aliases) std::cout << "alias: " << alias << "\n";
  return exit_pass;
}

void add_system_flags(CLI::App* cmd, SystemRequest& req) {
  cmd->add_option("--q", req.q, "value of q, e.g. -1, zeta3, 2");
  cmd->add_option("--param", req.params, "parameter override name=value")->allow_extra_args(false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-theoretic Yang-Baxter solutions, orbit censuses and Nichols algebra dimensions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--threads", g.threads, "worker cap")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--mod-primes", g.mod_primes, "primes for modular ranks")->delimiter(',');
  app.add_option("--exact-cap", g.exact_cap, "use exact arithmetic while m^k is at most this");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a solution and its coefficients");
  verify->add_option("target", va.target, "catalog name or JSON file")->required();
  verify->add_option("--mutations", va.mutations, "random single-entry coefficient mutations to try");

  OrbitsArgs oa;
  auto* orbits_cmd = app.add_subcommand("orbits", "orbit census of the S_n action on X^n");
  orbits_cmd->add_option("target", oa.target)->required();
  orbits_cmd->add_option("n", oa.n)->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  orbits_cmd->add_flag("--witness", oa.witness, "list every orbit with a lambda-element");
  orbits_cmd->add_flag("--csv", oa.csv, "lambda,count,size table as CSV");
  orbits_cmd->add_option("--max-words", oa.max_words, "refuse censuses with more words than this");

  DimsArgs da;
  auto* dims = app.add_subcommand("dims", "graded dimensions of the Nichols algebra");
  dims->add_option("target", da.target)->required();
  add_system_flags(dims, da.request);
  dims->add_option("--cap", da.cap, "highest degree");
  auto* mod = dims->add_flag("--mod", da.mod, "modular ranks only");
  auto* exact = dims->add_flag("--exact", da.exact, "exact ranks only");
  mod->excludes(exact);
  dims->add_flag("--expect", da.expect, "compare with the predicted profile");
  dims->add_option("--escalate", da.escalate, "recompute these degrees exactly")->delimiter(',');

  RelationsArgs ra;
  auto* relations = app.add_subcommand("relations", "check relations lie in the kernel of the symmetrizer");
  relations->add_option("target", ra.target)->required();
  add_system_flags(relations, ra.request);
  relations->add_option("--check", ra.checks, "relation \"coef:word + word\" in the entry's letters");

  PhiArgs pa;
  auto* phi = app.add_subcommand("phi", "orbit sizes of <r> on X x X");
  phi->add_option("target", pa.target)->required();
  add_system_flags(phi, pa.request);
  phi->add_flag("--dims", pa.with_dims, "also print graded dimensions");
  phi->add_option("--cap", pa.cap);

  std::string entry_name;
  auto* cat = app.add_subcommand("catalog", "list built-in examples");
  cat->add_option("name", entry_name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_input;
  }

  try {
    set_worker_count(g.threads);
    if (*verify) return cmd_verify(g, va);
    if (*orbits_cmd) return cmd_orbits(g, oa);
    if (*dims) return cmd_dims(g, da);
    if (*relations) return cmd_relations(g, ra);
    if (*phi) return cmd_phi(g, pa);
    if (*cat) return cmd_catalog(g, entry_name);
  } catch (const InputError& e) {
    std::cerr << "ybn: " << e.what() << "\n";
    return exit_input;
  } catch (const ConstraintViolation& e) {
    std::cerr << "ybn: constraint violated: " << e.what() << "\n";
    return exit_input;
  } catch (const TooLarge& e) {
    std::cerr << "ybn: " << e.what() << "\n";
    return exit_input;
  } catch (const BadPrime& e) {
    std::cerr << "ybn: " << e.what() << "\n";
    return exit_input;
  } catch (const Error& e) {
    std::cerr << "ybn: " << e.what() << "\n";
    return exit_mismatch;
  }
  return exit_input;
}
