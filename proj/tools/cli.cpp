#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "latcomp/congruence.hpp"
#include "latcomp/constructions.hpp"
#include "latcomp/json_io.hpp"
#include "latcomp/morphism.hpp"
#include "latcomp/terms.hpp"
#include "latcomp/verify.hpp"

namespace latcomp::cli {

namespace {

using nlohmann::ordered_json;

CompLattice resolve_algebra(const std::string& name, const std::string& file) {
  if (!file.empty()) return algebra_from_json(load_json_file(file));
  if (name.empty()) throw InputError("no algebra given (use --algebra or --algebra-file)");
  std::string id = name;
  std::transform(id.begin(), id.end(), id.begin(), ::tolower);
  if (id.size() >= 3 && id.front() == 'm' && id.back() == 'p') {
    const std::string digits = id.substr(1, id.size() - 2);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
      return make_mn_prime(std::stoi(digits));
  }
  if (id.size() >= 2 && id.front() == 'b' &&
      id.substr(1).find_first_not_of("0123456789") == std::string::npos)
    return boolean_algebra(std::stoi(id.substr(1)));
  return fixture(id);
}

Lattice resolve_lattice(const std::string& name, const std::string& file) {
  if (!file.empty()) return lattice_from_json(load_json_file(file));
  if (name.empty()) throw InputError("no lattice given (use --lattice or --lattice-file)");
  std::string id = name;
  std::transform(id.begin(), id.end(), id.begin(), ::tolower);
  if (id.size() >= 2 && id.front() == 'm' &&
      id.substr(1).find_first_not_of("0123456789") == std::string::npos)
    return make_mn(std::stoi(id.substr(1)));
  if (id.size() >= 2 && id.front() == 'b' &&
      id.substr(1).find_first_not_of("0123456789") == std::string::npos)
    return boolean_algebra(std::stoi(id.substr(1))).lattice();
  return fixture_lattice(id);
}

Formula resolve_formula(const std::string& spec, std::optional<int> n) {
  std::string id = spec;
  std::vector<int> params;
  auto pos = id.find(':');
  if (pos != std::string::npos) {
    params.push_back(std::stoi(id.substr(pos + 1)));
    id = id.substr(0, pos);
  }
  std::string up = id;
  std::transform(up.begin(), up.end(), up.begin(), ::toupper);
  const bool needs_param = up == "MN" || up == "TN" || up == "ATAU";
  if (needs_param && params.empty()) {
    if (!n) throw InputError("formula '" + id + "' needs a parameter (--n or name:<n>)");
    params.push_back(*n);
  }
  if (!needs_param) params.clear();
  return builtin_formula(id, params);
}

unsigned long long default_budget() {
  if (const char* env = std::getenv("LATCOMP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1'000'000'000ULL;
}

std::string describe_assignment(const CompLattice& a,
                                const std::vector<std::pair<std::string, int>>& asg) {
  std::string s;
  for (const auto& [var, elem] : asg) {
    if (!s.empty()) s += ", ";
    s += var + " = " + a.label(elem);
  }
  return s;
}

ordered_json class_report_json(const ClassReport& r) {
  ordered_json j;
  j["W"] = r.satisfies_w;
  j["DM"] = r.satisfies_dm;
  j["modular"] = r.modular;
  j["weakly_orthomodular"] = r.weakly_orthomodular;
  j["dually_weakly_orthomodular"] = r.dually_weakly_orthomodular;
  j["comp_injective"] = r.comp_injective;
  j["comp_involutive"] = r.comp_involutive;
  j["boolean_algebra"] = r.is_boolean_algebra;
  return j;
}

ordered_json congruence_json(const CompLattice& a, const Congruence& c) {
  ordered_json blocks = ordered_json::array();
  for (const auto& blk : c.block_lists()) {
    ordered_json b = ordered_json::array();
    for (int x : blk) b.push_back(a.label(x));
    blocks.push_back(b);
  }
  return blocks;
}

struct Shared {
  std::string algebra, algebra_file;
  std::string other, other_file;
  std::string lattice, lattice_file;
  bool json = false;
  unsigned long long budget = default_budget();
  int jobs = 1;
};

void add_algebra_opts(CLI::App* cmd, Shared& s) {
  cmd->add_option("--algebra", s.algebra, "built-in algebra name (m3p, h1, pg22-c1, ...)");
  cmd->add_option("--algebra-file", s.algebra_file, "algebra JSON document");
}

void add_common(CLI::App* cmd, Shared& s) {
  cmd->add_flag("--json", s.json, "emit a machine-readable payload");
  cmd->add_option("--budget", s.budget, "evaluation budget");
  cmd->add_option("--jobs", s.jobs, "worker threads for exhaustive checks")
      ->check(CLI::Range(1, 256));
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CommandResult res;
  Shared s;

  CLI::App app{"finite lattices with complementation: checks, constructions, verification"};
  app.name("latcomp");
  app.require_subcommand(0, 1);

  // ---- validate
  auto* validate = app.add_subcommand("validate", "load and validate an algebra document");
  add_algebra_opts(validate, s);
  add_common(validate, s);
  validate->callback([&] {
    CompLattice a = resolve_algebra(s.algebra, s.algebra_file);
    res.payload["status"] = "ok";
    res.payload["size"] = a.size();
    res.payload["labels"] = a.lattice().labels();
    res.report = "valid algebra with " + std::to_string(a.size()) + " elements";
  });

  // ---- report
  auto* report = app.add_subcommand("report", "classification report for an algebra");
  add_algebra_opts(report, s);
  add_common(report, s);
  report->callback([&] {
    CompLattice a = resolve_algebra(s.algebra, s.algebra_file);
    ClassReport r = classify(a);
    LatticeProfile p = lattice_profile(a.lattice());
    res.payload["status"] = "ok";
    res.payload["size"] = a.size();
    res.payload["classes"] = class_report_json(r);
    res.payload["length"] = p.length;
    res.payload["width"] = p.width;
    ordered_json elements = ordered_json::array();
    std::ostringstream txt;
    txt << "size " << a.size() << ", length " << p.length << ", width " << p.width << "\n";
    auto flag = [](bool b) { return b ? "yes" : "no"; };
    txt << "W " << flag(r.satisfies_w) << ", DM " << flag(r.satisfies_dm) << ", modular "
        << flag(r.modular) << ", WOML " << flag(r.weakly_orthomodular) << ", DWOML "
        << flag(r.dually_weakly_orthomodular) << "\n";
    txt << "comp injective " << flag(r.comp_injective) << ", involutive "
        << flag(r.comp_involutive) << ", Boolean algebra " << flag(r.is_boolean_algebra);
    for (int x = 0; x < a.size(); ++x) {
      ElementProfile ep = element_profile(a.lattice(), x);
      ordered_json e;
      e["label"] = a.label(x);
      e["complement"] = a.label(a.comp(x));
      e["neutral"] = ep.neutral;
      e["standard"] = ep.standard;
      e["distributive"] = ep.distributive;
      ordered_json comps = ordered_json::array();
      for (int cpl : ep.complements) comps.push_back(a.label(cpl));
      e["complements"] = comps;
      elements.push_back(e);
    }
    res.payload["elements"] = elements;
    res.report = txt.str();
  });

  // ---- check
  auto* check = app.add_subcommand("check", "check a formula against an algebra");
  std::string formula_name, formula_file;
  int param_n = -1;
  check->add_option("--formula", formula_name, "built-in formula name (W, DM, Mn:4, ...)");
  check->add_option("--formula-file", formula_file, "formula JSON document");
  check->add_option("--n", param_n, "parameter for Mn / Tn / ATAU");
  add_algebra_opts(check, s);
  add_common(check, s);
  check->callback([&] {
    CompLattice a = resolve_algebra(s.algebra, s.algebra_file);
    Formula f = formula_file.empty()
                    ? resolve_formula(formula_name,
                                      param_n > 0 ? std::optional<int>(param_n) : std::nullopt)
                    : formula_from_json(load_json_file(formula_file));
    if (formula_file.empty() && formula_name.empty())
      throw InputError("no formula given (use --formula or --formula-file)");
    CheckOptions opts;
    opts.budget = s.budget;
    opts.jobs = s.jobs;
    FormulaCheck out = check_formula(a, f, opts);
    res.payload["formula"] = f.name();
    if (out.holds) {
      res.payload["status"] = "ok";
      res.payload["holds"] = true;
      res.report = "formula " + f.name() + ": holds";
    } else {
      res.exit_code = 1;
      res.payload["status"] = "fail";
      res.payload["holds"] = false;
      ordered_json asg;
      for (const auto& [var, elem] : out.assignment) asg[var] = a.label(elem);
      res.payload["counterexample"] = asg;
      res.payload["clause"] = out.failed_clause;
      res.report = "formula " + f.name() + ": fails at " + describe_assignment(a, out.assignment);
    }
  });

  // ---- con
  auto* con = app.add_subcommand("con", "congruence lattice of an algebra");
  bool reduct = false;
  con->add_flag("--reduct", reduct, "congruences of the lattice reduct only");
  add_algebra_opts(con, s);
  add_common(con, s);
  con->callback([&] {
    CompLattice a = resolve_algebra(s.algebra, s.algebra_file);
    ConLattice cl = congruence_lattice(a, reduct ? Subject::LatticeReduct : Subject::Algebra);
    res.payload["status"] = "ok";
    res.payload["count"] = cl.size();
    ordered_json congruences = ordered_json::array();
    for (const auto& c : cl.congruences) congruences.push_back(congruence_json(a, c));
    res.payload["congruences"] = congruences;
    res.payload["atoms"] = cl.atoms();
    res.report = std::to_string(cl.size()) + " congruences, " +
                 std::to_string(cl.atoms().size()) + " atoms";
  });

  // ---- si
  auto* si = app.add_subcommand("si", "subdirect irreducibility");
  add_algebra_opts(si, s);
  add_common(si, s);
  si->callback([&] {
    CompLattice a = resolve_algebra(s.algebra, s.algebra_file);
    SIResult r = subdirect_irreducibility(a);
    res.payload["status"] = "ok";
    res.payload["subdirectly_irreducible"] = r.subdirectly_irreducible;
    if (r.monolith) {
      res.payload["monolith"] = congruence_json(a, *r.monolith);
      res.report = "subdirectly irreducible with monolith of " +
                   std::to_string(r.monolith->blocks) + " blocks";
    } else {
      res.report = "not subdirectly irreducible";
    }
  });

  // ---- quotient
  auto* quot = app.add_subcommand("quotient", "quotient by the principal congruence of a pair");
  std::string pair_spec;
  quot->add_option("--pair", pair_spec, "two element labels, comma separated")->required();
  add_algebra_opts(quot, s);
  add_common(quot, s);
  quot->callback([&] {
    CompLattice a = resolve_algebra(s.algebra, s.algebra_file);
    auto comma = pair_spec.find(',');
    if (comma == std::string::npos) throw InputError("--pair wants 'x,y'");
    int x = a.index_of(pair_spec.substr(0, comma));
    int y = a.index_of(pair_spec.substr(comma + 1));
    if (x < 0 || y < 0) throw InputError("unknown element in --pair");
    Congruence theta = principal_congruence(a, x, y, Subject::Algebra);
    CompLattice q = quotient(a, theta);
    res.payload["status"] = "ok";
    res.payload["congruence"] = congruence_json(a, theta);
    res.payload["quotient"] = algebra_to_json(q);
    res.report = "quotient has " + std::to_string(q.size()) + " elements";
  });

  // ---- aut
  auto* aut = app.add_subcommand("aut", "automorphism group");
  add_algebra_opts(aut, s);
  add_common(aut, s);
  aut->callback([&] {
    CompLattice a = resolve_algebra(s.algebra, s.algebra_file);
    AutGroup g = automorphism_group(a);
    res.payload["status"] = "ok";
    res.payload["order"] = g.order;
    res.payload["cyclic"] = g.cyclic;
    ordered_json gens = ordered_json::array();
    for (const auto& iso : g.generators) gens.push_back(iso);
    res.payload["generators"] = gens;
    res.report = "automorphism group of order " + std::to_string(g.order) +
                 (g.cyclic ? ", cyclic" : "");
  });

  // ---- iso
  auto* iso = app.add_subcommand("iso", "isomorphism search between two algebras");
  add_algebra_opts(iso, s);
  iso->add_option("--other", s.other, "second algebra name");
  iso->add_option("--other-file", s.other_file, "second algebra JSON document");
  add_common(iso, s);
  iso->callback([&] {
    CompLattice a = resolve_algebra(s.algebra, s.algebra_file);
    CompLattice b = resolve_algebra(s.other, s.other_file);
    auto m = find_isomorphism(a, b);
    res.payload["status"] = "ok";
    res.payload["found"] = m.has_value();
    if (m) {
      res.payload["map"] = *m;
      res.report = "isomorphic";
    } else {
      res.report = "not isomorphic";
    }
  });

  // ---- subuniverses
  auto* subs = app.add_subcommand("subuniverses", "all subuniverses of an algebra");
  add_algebra_opts(subs, s);
  add_common(subs, s);
  subs->callback([&] {
    CompLattice a = resolve_algebra(s.algebra, s.algebra_file);
    auto family = all_subuniverses(a);
    res.payload["status"] = "ok";
    res.payload["count"] = family.size();
    ordered_json list = ordered_json::array();
    for (const auto& z : family) {
      ordered_json one = ordered_json::array();
      for (int x : z) one.push_back(a.label(x));
      list.push_back(one);
    }
    res.payload["subuniverses"] = list;
    res.report = std::to_string(family.size()) + " subuniverses";
  });

  // ---- enum-comp
  auto* ec = app.add_subcommand("enum-comp", "enumerate complementations on a lattice");
  EnumFilters filters;
  ec->add_option("--lattice", s.lattice, "built-in lattice name (m4, diamond, pg22, ...)");
  ec->add_option("--lattice-file", s.lattice_file, "lattice JSON document");
  ec->add_flag("--injective", filters.injective_only, "injective complementations only");
  ec->add_flag("--de-morgan", filters.de_morgan_only, "De Morgan complementations only");
  ec->add_flag("--in-w", filters.in_w_only, "complementations satisfying W only");
  ec->add_flag("--up-to-iso", filters.up_to_iso, "one representative per isomorphism class");
  add_common(ec, s);
  ec->callback([&] {
    Lattice l = resolve_lattice(s.lattice, s.lattice_file);
    filters.budget = s.budget;
    auto found = enumerate_complementations(l, filters);
    res.payload["status"] = "ok";
    res.payload["count"] = found.size();
    ordered_json tables = ordered_json::array();
    for (const auto& a : found) tables.push_back(a.comp_table());
    res.payload["complementations"] = tables;
    res.report = std::to_string(found.size()) + " complementations";
  });

  // ---- construct
  auto* construct = app.add_subcommand("construct", "build a named algebra");
  construct->require_subcommand(1);
  int n_arg = 0, k_arg = 0;
  std::string element;
  std::string base, base_file, action_file;

  auto* c_mn = construct->add_subcommand("mn", "width-n cyclic algebra");
  c_mn->add_option("--n", n_arg, "width")->required();
  add_common(c_mn, s);
  c_mn->callback([&] {
    CompLattice a = make_mn_prime(n_arg);
    res.payload = algebra_to_json(a);
    res.report = res.payload.dump(2);
  });

  auto* c_bool = construct->add_subcommand("bool", "Boolean algebra 2^k");
  c_bool->add_option("--k", k_arg, "number of atoms")->required();
  add_common(c_bool, s);
  c_bool->callback([&] {
    CompLattice a = boolean_algebra(k_arg);
    res.payload = algebra_to_json(a);
    res.report = res.payload.dump(2);
  });

  auto* c_prod = construct->add_subcommand("product", "direct product of two algebras");
  add_algebra_opts(c_prod, s);
  c_prod->add_option("--other", s.other, "second algebra name");
  c_prod->add_option("--other-file", s.other_file, "second algebra JSON document");
  add_common(c_prod, s);
  c_prod->callback([&] {
    CompLattice a = direct_product(resolve_algebra(s.algebra, s.algebra_file),
                                   resolve_algebra(s.other, s.other_file));
    res.payload = algebra_to_json(a);
    res.report = res.payload.dump(2);
  });

  auto* c_hsum = construct->add_subcommand("hsum", "horizontal sum of two algebras");
  add_algebra_opts(c_hsum, s);
  c_hsum->add_option("--other", s.other, "second algebra name");
  c_hsum->add_option("--other-file", s.other_file, "second algebra JSON document");
  add_common(c_hsum, s);
  c_hsum->callback([&] {
    CompLattice a = horizontal_sum(resolve_algebra(s.algebra, s.algebra_file),
                                   resolve_algebra(s.other, s.other_file));
    res.payload = algebra_to_json(a);
    res.report = res.payload.dump(2);
  });

  auto* c_action = construct->add_subcommand("action", "complemented product from an action");
  c_action->add_option("--base", base, "base lattice name");
  c_action->add_option("--base-file", base_file, "base lattice JSON document");
  c_action->add_option("--action-file", action_file, "action JSON document")->required();
  add_common(c_action, s);
  c_action->callback([&] {
    Lattice l = resolve_lattice(base, base_file);
    Action act = action_from_json(load_json_file(action_file));
    CompLattice a = action_extension(l, act);
    res.payload = algebra_to_json(a);
    res.report = res.payload.dump(2);
  });

  auto* c_interval = construct->add_subcommand("interval", "interval algebras at a neutral element");
  add_algebra_opts(c_interval, s);
  c_interval->add_option("--element", element, "neutral element label")->required();
  add_common(c_interval, s);
  c_interval->callback([&] {
    CompLattice a = resolve_algebra(s.algebra, s.algebra_file);
    int e = a.index_of(element);
    if (e < 0) throw InputError("unknown element '" + element + "'");
    auto [lower, upper] = interval_algebra(a, e);
    res.payload["status"] = "ok";
    res.payload["lower"] = algebra_to_json(lower);
    res.payload["upper"] = algebra_to_json(upper);
    res.report = "intervals of sizes " + std::to_string(lower.size()) + " and " +
                 std::to_string(upper.size());
  });

  // ---- free
  auto* free_cmd = app.add_subcommand("free", "free algebra of the width-n variety");
  bool verify_shape = false, full_closure = false;
  free_cmd->add_option("--n", n_arg, "width")->required();
  free_cmd->add_option("--k", k_arg, "number of free generators")->required();
  free_cmd->add_flag("--verify", verify_shape, "check the product shape explicitly");
  free_cmd->add_flag("--full-closure", full_closure, "run the full tuple closure when large");
  add_common(free_cmd, s);
  free_cmd->callback([&] {
    FreeAlgebraOptions fo;
    fo.full_closure = full_closure;
    FreeAlgebra f = free_algebra(n_arg, k_arg, fo);
    res.payload["status"] = "ok";
    res.payload["q"] = f.q;
    res.payload["r"] = f.r;
    res.payload["expected_size"] = f.expected_size;
    res.payload["materialized"] = f.algebra.has_value();
    res.payload["shape_verified"] = f.shape_verified;
    if (f.closure_ran) res.payload["closure_size"] = f.closure_size;
    std::string note = "q = " + std::to_string(f.q) + ", r = " + std::to_string(f.r) +
                       ", size " + std::to_string(f.expected_size);
    if (f.algebra && verify_shape) {
      CompLattice want = make_mn_prime(n_arg);
      for (long long i = 1; i < f.q; ++i) want = direct_product(want, make_mn_prime(n_arg));
      want = direct_product(want, boolean_algebra(f.r));
      bool iso = find_isomorphism(*f.algebra, want).has_value();
      res.payload["isomorphic_to_product"] = iso;
      if (!iso) {
        res.exit_code = 1;
        res.payload["status"] = "fail";
      }
      note += iso ? ", isomorphic to the product" : ", NOT isomorphic to the product";
    }
    if (f.closure_ran) note += ", closure size " + std::to_string(f.closure_size);
    res.report = note;
  });

  // ---- fixtures
  auto* fixtures_cmd = app.add_subcommand("fixtures", "list built-in algebras and lattices");
  add_common(fixtures_cmd, s);
  fixtures_cmd->callback([&] {
    res.payload["status"] = "ok";
    res.payload["algebras"] = fixture_names();
    res.payload["lattices"] = fixture_lattice_names();
    std::string txt = "algebras:";
    for (const auto& f : fixture_names()) txt += " " + f;
    txt += "\nlattices:";
    for (const auto& f : fixture_lattice_names()) txt += " " + f;
    txt += "\npatterns: m<n>p (cyclic algebra), b<k> (Boolean), m<n> (lattice)";
    res.report = txt;
  });

  // ---- verify-paper
  auto* vp = app.add_subcommand("verify-paper", "run the bundled verification suite");
  std::string scope = "all";
  bool heavy = false;
  vp->add_option("--scope", scope, "suite section (s1..s6, app, all)");
  vp->add_flag("--heavy", heavy, "include the opt-in large closure");
  add_common(vp, s);
  vp->callback([&] {
    {
      auto known = verify::scopes();
      if (scope != "all" && std::find(known.begin(), known.end(), scope) == known.end())
        throw CLI::ValidationError("--scope", "unknown scope '" + scope + "'");
    }
    verify::Options vo;
    vo.heavy = heavy;
    vo.jobs = s.jobs;
    auto results = verify::run(scope, vo);
    bool all_pass = true;
    std::ostringstream txt;
    ordered_json list = ordered_json::array();
    for (const auto& r : results) {
      all_pass = all_pass && r.pass;
      txt << (r.pass ? "PASS" : "FAIL") << " [" << r.scope << "] " << r.id << ": " << r.detail
          << "\n";
      ordered_json one;
      one["id"] = r.id;
      one["scope"] = r.scope;
      one["pass"] = r.pass;
      one["detail"] = r.detail;
      list.push_back(one);
    }
    txt << (all_pass ? "all criteria passed" : "SOME CRITERIA FAILED");
    res.payload["status"] = all_pass ? "ok" : "fail";
    res.payload["scope"] = scope;
    res.payload["criteria"] = list;
    res.report = txt.str();
    if (!all_pass) res.exit_code = 1;
  });

  // ---- parse and dispatch
  std::vector<const char*> argv;
  argv.push_back("latcomp");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (app.get_subcommands().empty()) {
      res.report = app.help();
      res.exit_code = 2;
    }
  } catch (const CLI::CallForHelp&) {
    res.report = app.help();
    res.exit_code = 0;
  } catch (const CLI::ParseError& e) {
    res.report = std::string("usage error: ") + e.what();
    res.exit_code = 2;
    res.payload["status"] = "error";
    res.payload["message"] = e.what();
  } catch (const BudgetExceeded& e) {
    res.report = std::string("budget exceeded: ") + e.what();
    res.exit_code = 4;
    res.payload["status"] = "error";
    res.payload["message"] = e.what();
  } catch (const Error& e) {
    res.report = std::string("input error: ") + e.what();
    res.exit_code = 3;
    res.payload["status"] = "error";
    res.payload["message"] = e.what();
  }
  res.json_mode = s.json;
  return res;
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CommandResult res = run(args);
  if (res.json_mode)
    std::cout << res.payload.dump(2) << "\n";
  else
    std::cout << res.report << "\n";
  return res.exit_code;
}

}  // namespace latcomp::cli
