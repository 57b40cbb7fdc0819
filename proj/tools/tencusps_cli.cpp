#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <string>

#include "tencusps/codes_table.hpp"
#include "tencusps/example72.hpp"
#include "tencusps/forms.hpp"
#include "tencusps/lattice.hpp"
#include "tencusps/planner.hpp"
#include "tencusps/separability.hpp"

using json = nlohmann::ordered_json;
using namespace tencusps;

namespace {

constexpr const char* kVersion = "1.0.0";

// Exit codes: 0 = all checks pass, 1 = computational disagreement, 2 = usage.
enum { kOk = 0, kMismatch = 1, kUsage = 2 };

struct Options {
  std::uint64_t seed = 0;
  bool seed_given = false;
  int threads = 0;
  bool text = false;
};

std::uint64_t effective_seed(const Options& opt) {
  if (opt.seed_given) return opt.seed;
  if (const char* env = std::getenv("TENCUSPS_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

Code load_code(const std::string& ref) {
  for (const std::string& name : builtin_names())
    if (name == ref) return builtin(name);
  std::ifstream in(ref);
  if (!in) throw CLI::ValidationError("--code", "not a builtin name or readable file: " + ref);
  std::ostringstream buf;
  buf << in.rdbuf();
  return rref(parse_matrix(buf.str()));
}

json code_json(const Code& c) {
  json rows = json::array();
  for (const Word& w : c.gens) {
    json row = json::array();
    for (int i = 0; i < c.width; ++i) row.push_back(static_cast<int>(w.v[i]));
    rows.push_back(row);
  }
  return json{{"width", c.width}, {"dim", c.dim()}, {"rows", rows}};
}

json gram_json(const IntegerLattice& l) {
  json rows = json::array();
  for (int r = 0; r < l.rank; ++r) {
    json row = json::array();
    for (int c = 0; c < l.rank; ++c) row.push_back(l.gram.at(r, c).str());
    rows.push_back(row);
  }
  return json{{"rank", l.rank}, {"rows", rows}};
}

void emit(const Options& opt, const std::string& command, std::uint64_t seed,
          const json& payload) {
  json doc = {
      {"command", command},
      {"version", kVersion},
      {"seed", seed},
      {"timestamp",
       std::chrono::duration_cast<std::chrono::seconds>(
           std::chrono::system_clock::now().time_since_epoch())
           .count()},
      {"payload", payload},
  };
  if (opt.text)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << doc.dump(2) << "\n";
}

int cmd_verify_tables(const Options& opt) {
  static const std::map<std::string, std::string> expected = {
      {"C1", "1+12z^3+18z^4+36z^5+108z^6+36z^7+18z^8+14z^9"},
      {"C2", "1+8z^3+10z^4+24z^5+86z^6+40z^7+30z^8+40z^9+4z^10"},
      {"C3", "1+4z^3+8z^4+24z^5+94z^6+44z^7+30z^8+36z^9+2z^10"},
      {"C4", "1+6z^3+6z^4+18z^5+102z^6+42z^7+36z^8+26z^9+6z^10"},
      {"C5", "1+30z^4+60z^6+120z^7+20z^9+12z^10"},
      {"C6", "1+18z^4+18z^5+96z^6+36z^7+36z^8+38z^9"},
      {"C7", "1+72z^5+60z^6+90z^8+20z^9"},
      {"K", "1+60z^6+20z^9"},
  };
  json checks = json::array();
  bool all_ok = true;
  for (const auto& [name, want] : expected) {
    Code c = builtin(name);
    std::string got = weight_enumerator(c).str();
    bool ok = got == want;
    if (name != "K")
      ok = ok && is_isotropic(Ambient::A10xU3, c) && is_admissible(c) &&
           has_claim52_property(c);
    else
      ok = ok && is_isotropic(Ambient::A10, c);
    checks.push_back({{"code", name}, {"enumerator", got}, {"expected", want}, {"ok", ok}});
    all_ok = all_ok && ok;
  }
  emit(opt, "verify-tables", effective_seed(opt), json{{"checks", checks}, {"ok", all_ok}});
  return all_ok ? kOk : kMismatch;
}

int cmd_search(const Options& opt, const std::string& ambient, int dim,
               const std::string& predicate, long budget, int target,
               const std::string& export_name) {
  if (!export_name.empty()) {
    std::cout << format_matrix(builtin(export_name).gens);
    return kOk;
  }
  Ambient spec = ambient == "u1" ? Ambient::A10 : Ambient::A10xU3;
  SearchPredicate pred =
      predicate == "minwt6" ? SearchPredicate::MinWt6 : SearchPredicate::Claim52;
  std::uint64_t seed = effective_seed(opt);
  auto classes = random_search(spec, dim, pred, SearchBudget{seed, budget, target});
  json jclasses = json::array();
  for (const Code& c : classes)
    jclasses.push_back({{"matrix", code_json(c)}, {"enumerator", weight_enumerator(c).str()}});
  emit(opt, "search-codes", seed,
       json{{"trials", budget}, {"classes", jclasses},
            {"class_count", static_cast<long>(classes.size())}});
  return kOk;
}

int cmd_plan(const Options& opt, long degree, int sigma, const std::string& s_type) {
  DegreeQuery q{degree, sigma, s_type == "u1" ? SType::U1 : SType::U3};
  auto plan = make_plan(q);
  if (!plan) {
    emit(opt, "plan", effective_seed(opt), json{{"admissible", false}});
    return kOk;
  }
  json divisors = json::array();
  for (const Int& d : plan->disc_divisors) divisors.push_back(d.str());
  emit(opt, "plan", effective_seed(opt),
       json{{"admissible", true},
            {"a", plan->a},
            {"b", plan->b},
            {"code_matrix", code_json(plan->code)},
            {"certs",
             {{"count_extra", plan->certs.count_extra},
              {"found_u", plan->certs.found_u},
              {"found_half", plan->certs.found_half},
              {"disc_divisors", divisors}}}});
  return kOk;
}

int cmd_degrees(const Options& opt, const std::string& s_type, long max) {
  auto degrees = degree_table(s_type == "u1" ? SType::U1 : SType::U3, max);
  emit(opt, "degrees", effective_seed(opt), json{{"degrees", degrees}});
  return kOk;
}

int cmd_separability(const Options& opt, const std::string& code_ref) {
  SepSystem sys = make_sep_system(load_code(code_ref));
  SepSolveStats stats;
  auto witness = solve(sys, &stats);
  json payload = {{"code", code_ref},
                  {"feasible", witness.has_value()},
                  {"nodes_explored", stats.nodes}};
  if (witness) {
    json comps = json::array();
    for (const SepComponent& c : witness->components) {
      json row = json::array();
      for (int i = 0; i < 10; ++i) row.push_back(static_cast<int>(c.x.v[i]));
      row.push_back(c.alpha);
      row.push_back(c.beta);
      comps.push_back(row);
    }
    payload["witness"] = {{"alpha_E", witness->alpha_E},
                          {"beta_F", witness->beta_F},
                          {"t", witness->t()},
                          {"components", comps}};
    payload["witness_verified"] = verify_witness(sys, *witness).ok;
  }
  payload["note"] =
      "feasibility of this arithmetic system does not decide the geometric "
      "separability question; infeasibility certifies inseparability";
  emit(opt, "separability", effective_seed(opt), payload);
  return kOk;
}

int cmd_lattice(const Options& opt, const std::string& code_ref, int m, bool show_gram) {
  Code c = load_code(code_ref);
  OverlatticeBasis n = overlattice(m, c);
  auto sig = signature(n.gram);
  json divisors = json::array();
  for (const Int& d : disc_group(n.gram)) divisors.push_back(d.str());
  json payload = {{"m", m},
                  {"det", n.gram.determinant().str()},
                  {"divisors", divisors},
                  {"signature", {sig.first, sig.second}},
                  {"even", n.gram.is_even()}};
  if (show_gram) payload["gram"] = gram_json(n.gram);
  emit(opt, "lattice", effective_seed(opt), payload);
  return kOk;
}

int cmd_example72(const Options& opt) {
  Example72Report rep = run_example72();
  json payload = {{"discriminant", rep.discriminant.str()},
                  {"induced_code", code_json(rep.induced)},
                  {"equivalent_to_C1", rep.equivalence.has_value()},
                  {"ok", rep.ok}};
  if (rep.equivalence) payload["equivalence_witness"] = rep.equivalence->str();
  emit(opt, "example72", effective_seed(opt), payload);
  return rep.ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for ternary codes, discriminant forms, and "
               "overlattices of Z[10A2](+)U(m)"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--seed", opt.seed, "PRNG seed (fallback: TENCUSPS_SEED, then 0)")
      ->each([&](const std::string&) { opt.seed_given = true; });
  app.add_option("--threads", opt.threads, "worker cap (results independent of N)");
  app.add_flag("--text", opt.text, "print only the payload");
  bool json_out = false;
  app.add_flag("--json", json_out, "full JSON report (default)");

  auto* verify = app.add_subcommand("verify-tables", "recompute the built-in code tables");

  auto* search = app.add_subcommand("search-codes", "randomized code rediscovery");
  std::string ambient = "u3", predicate = "claim52", export_name;
  int dim = 5, target = 0;
  long budget = 20000;
  search->add_option("--ambient", ambient, "u1 or u3")
      ->check(CLI::IsMember({"u1", "u3"}));
  search->add_option("--dim", dim, "target dimension")->check(CLI::Range(0, 5));
  search->add_option("--predicate", predicate, "claim52 or minwt6")
      ->check(CLI::IsMember({"claim52", "minwt6"}));
  search->add_option("--budget", budget, "max trials");
  search->add_option("--target-classes", target, "stop after this many classes");
  search->add_option("--export", export_name, "print a builtin code in matrix format");

  auto* plan = app.add_subcommand("plan", "certified polarization plan");
  long degree = 6;
  int sigma = 1;
  std::string s_type = "u3";
  plan->add_option("--degree", degree, "degree d")->required();
  plan->add_option("--sigma", sigma, "Artin invariant")->required();
  plan->add_option("--s-type", s_type, "u1 or u3")->check(CLI::IsMember({"u1", "u3"}));

  auto* degrees = app.add_subcommand("degrees", "admissible degree table");
  long d_max = 100;
  std::string dtype = "u3";
  degrees->add_option("--s-type", dtype, "u1 or u3")->check(CLI::IsMember({"u1", "u3"}));
  degrees->add_option("--max", d_max, "upper bound");

  auto* sep = app.add_subcommand("separability", "feasibility of the obstruction system");
  std::string sep_code = "C7";
  sep->add_option("--code", sep_code, "builtin name or matrix file");

  auto* lattice = app.add_subcommand("lattice", "overlattice invariants");
  std::string lat_code = "C1";
  int m = 3;
  bool show_gram = false;
  lattice->add_option("--overlattice", lat_code, "builtin name or matrix file");
  lattice->add_option("--m", m, "1 or 3")->check(CLI::IsMember({1, 3}));
  lattice->add_flag("--gram", show_gram, "include the Gram matrix");

  auto* ex72 = app.add_subcommand("example72", "the inseparable-cover example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;  // --help/--version exit 0
  }

  try {
    if (verify->parsed()) return cmd_verify_tables(opt);
    if (search->parsed())
      return cmd_search(opt, ambient, dim, predicate, budget, target, export_name);
    if (plan->parsed()) return cmd_plan(opt, degree, sigma, s_type);
    if (degrees->parsed()) return cmd_degrees(opt, dtype, d_max);
    if (sep->parsed()) return cmd_separability(opt, sep_code);
    if (lattice->parsed()) return cmd_lattice(opt, lat_code, m, show_gram);
    if (ex72->parsed()) return cmd_example72(opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
