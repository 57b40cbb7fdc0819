// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. All comparisons are exact.
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tencusps/codes_table.hpp"
#include "tencusps/example72.hpp"
#include "tencusps/lattice.hpp"
#include "tencusps/planner.hpp"
#include "tencusps/separability.hpp"

using namespace tencusps;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& note = "") {
  std::printf("[%2d] %-28s %s%s%s\n", index, name.c_str(), pass ? "PASS" : "FAIL",
              note.empty() ? "" : "  ", note.c_str());
  if (!pass) ++failures;
}

Int pow3(int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

const std::map<std::string, std::string>& table2() {
  static const std::map<std::string, std::string> t = {
      {"C1", "1+12z^3+18z^4+36z^5+108z^6+36z^7+18z^8+14z^9"},
      {"C2", "1+8z^3+10z^4+24z^5+86z^6+40z^7+30z^8+40z^9+4z^10"},
      {"C3", "1+4z^3+8z^4+24z^5+94z^6+44z^7+30z^8+36z^9+2z^10"},
      {"C4", "1+6z^3+6z^4+18z^5+102z^6+42z^7+36z^8+26z^9+6z^10"},
      {"C5", "1+30z^4+60z^6+120z^7+20z^9+12z^10"},
      {"C6", "1+18z^4+18z^5+96z^6+36z^7+36z^8+38z^9"},
      {"C7", "1+72z^5+60z^6+90z^8+20z^9"},
  };
  return t;
}

void criterion_1_table2() {
  bool ok = true;
  for (const auto& [name, we] : table2())
    if (weight_enumerator(builtin(name)).str() != we) ok = false;
  report(1, "table-2 enumerators", ok);
}

void criterion_2_predicates() {
  bool ok = true;
  for (const auto& [name, we] : table2()) {
    const Code c = builtin(name);
    if (!is_isotropic(Ambient::A10xU3, c) || !is_admissible(c) ||
        !has_claim52_property(c))
      ok = false;
  }
  const Code k = builtin("K");
  if (!is_isotropic(Ambient::A10, k)) ok = false;
  if (weight_enumerator(k).str() != "1+60z^6+20z^9") ok = false;
  for (const Word& w : enumerate_codewords(k))
    if (!w.is_zero() && weight(w) < 6) ok = false;
  report(2, "predicate suite", ok);
}

void criterion_3_overlattices() {
  bool ok = true;
  for (int m : {1, 3}) {
    const Code full = builtin(m == 3 ? "C7" : "K");
    const int sigma_max = m == 3 ? 6 : 5;
    for (int sigma = 1; sigma <= sigma_max; ++sigma) {
      OverlatticeBasis n = overlattice(m, subcode_for_sigma(full, m, sigma));
      if (!n.gram.is_even()) ok = false;
      if (signature(n.gram) != std::make_pair(1, 21)) ok = false;
      if (n.gram.determinant() != -pow3(2 * sigma)) ok = false;
      auto div = disc_group(n.gram);
      if (static_cast<int>(div.size()) != 2 * sigma) ok = false;
      for (const Int& d : div)
        if (d != 3) ok = false;
    }
  }
  report(3, "overlattice invariants", ok);
}

void criterion_4_criteria_vs_oracle() {
  std::vector<std::pair<int, Code>> cases;
  for (const auto& [name, we] : table2()) cases.emplace_back(3, builtin(name));
  cases.emplace_back(1, builtin("K"));
  for (int sigma = 1; sigma <= 6; ++sigma)
    cases.emplace_back(3, subcode_for_sigma(builtin("C7"), 3, sigma));
  for (int sigma = 1; sigma <= 5; ++sigma)
    cases.emplace_back(1, subcode_for_sigma(builtin("K"), 1, sigma));
  long mismatches = 0;
  for (const auto& [m, code] : cases)
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b) {
        RootReport rep = brute_force_report(m, code, a, b);
        if (criterion_u_exists(m, code, a, b) != rep.found_u) ++mismatches;
        if (criterion_extra_roots(m, code, a, b) != (rep.count_extra > 0)) ++mismatches;
        // h = 2b' with b'^2 = 2 forces b' = (a/2)e + (b/2)f and abm = 4
        if ((m == 1 && a == 2 && b == 2) != rep.found_half) ++mismatches;
      }
  report(4, "criterion/oracle agreement", mismatches == 0);
}

void criterion_5_degrees() {
  // independent divisor-scan oracle, run before the classifier
  std::vector<long> u1_oracle;
  for (long d = 1; d <= 1000; ++d) {
    bool adm = false;
    if (d % 2 == 0)
      for (long a = 3; a <= d / 2 && !adm; ++a)
        for (long b = 3; b <= d / 2; ++b)
          if (a != b && 2 * a * b == d) {
            adm = true;
            break;
          }
    if (adm) u1_oracle.push_back(d);
  }
  std::vector<long> u3_expected;
  for (long d = 6; d <= 1000; d += 6) u3_expected.push_back(d);

  bool ok = degree_table(SType::U3, 1000) == u3_expected;
  auto u1 = degree_table(SType::U1, 1000);
  if (u1 != u1_oracle) ok = false;
  if (u1.empty() || u1.front() != 24) ok = false;
  report(5, "degree classifiers", ok);
}

void criterion_6_certified_plans() {
  long plans = 0;
  bool ok = true;
  try {
    for (SType st : {SType::U3, SType::U1}) {
      const int sigma_max = st == SType::U3 ? 6 : 5;
      for (long d = 1; d <= 200; ++d) {
        if (!degree_admissible(d, st)) continue;
        for (int sigma = 1; sigma <= sigma_max; ++sigma) {
          auto p = make_plan(DegreeQuery{d, sigma, st});  // throws if certification fails
          if (!p || p->certs != RootReport{0, false, false}) ok = false;
          ++plans;
        }
      }
    }
  } catch (const std::exception&) {
    ok = false;
  }
  report(6, "certified plans", ok && plans > 0,
         "(" + std::to_string(plans) + " plans)");
}

const char* kC1Witness =
    "0 0 0 0 0 0 0 0 0 0 3 0\n"
    "0 0 0 0 0 0 0 0 0 0 0 3\n"
    "1 0 0 0 0 0 0 0 1 1 0 1\n"
    "0 2 0 0 0 0 0 2 0 2 1 0\n"
    "0 0 2 0 0 0 2 0 2 0 1 0\n"
    "0 0 0 1 0 0 1 1 0 0 0 1\n"
    "2 1 1 2 0 0 0 0 0 0 1 1\n";

void criterion_7_separability() {
  bool ok = true;
  for (const std::string& name : {"C3", "C4", "C5", "C6", "C7"})
    if (solve(make_sep_system(builtin(name))).has_value()) ok = false;

  SepSystem c1 = make_sep_system(builtin("C1"));
  auto w1 = solve(c1);
  if (!w1 || !verify_witness(c1, *w1).ok) ok = false;

  // printed witness accepted, master inequality tight (2 >= 2)
  SepVerifyReport printed = verify_witness(c1, parse_witness(kC1Witness));
  if (!printed.ok) ok = false;
  bool tight = false;
  for (const SepCheck& c : printed.checks)
    if (c.name == "master inequality" && c.pass && c.detail == "3*(LHS - RHS) = 0")
      tight = true;
  if (!tight) ok = false;

  // C2 feasibility is an inference from the prose, not printed data
  bool c2_feasible = solve(make_sep_system(builtin("C2"))).has_value();
  if (!c2_feasible) ok = false;
  report(7, "separability solver", ok,
         std::string("(C2 feasible: ") + (c2_feasible ? "yes" : "no") +
             ", expected-by-inference yes)");
}

void criterion_8_example72() {
  Example72Report rep = run_example72();
  bool ok = rep.ok && rep.discriminant == -9 && rep.induced.dim() == 5 &&
            rep.equivalence.has_value() &&
            apply_g(*rep.equivalence, rep.induced) == builtin("C1");
  report(8, "inseparable-cover example", ok);
}

void criterion_9_rediscovery() {
  // documented defaults: seed 1, 8000 trials
  auto found = random_search(Ambient::A10xU3, 5, SearchPredicate::Claim52, {1, 8000, 0});
  std::set<std::string> enums;
  for (const Code& c : found) enums.insert(weight_enumerator(c).str());
  bool ok = found.size() >= 7;
  for (const auto& [name, we] : table2())
    if (!enums.count(we)) ok = false;
  for (std::size_t i = 0; i < found.size() && ok; ++i)
    for (std::size_t j = i + 1; j < found.size(); ++j)
      if (codes_equivalent(found[i], found[j]).has_value()) ok = false;

  auto k = random_search(Ambient::A10, 4, SearchPredicate::MinWt6, {1, 200, 1});
  if (k.empty() || !codes_equivalent(k[0], builtin("K")).has_value()) ok = false;
  report(9, "randomized rediscovery", ok,
         "(" + std::to_string(found.size()) + " classes)");
}

void criterion_10_u9_exclusion() {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> coord(0, 2);
  int built = 0;
  bool ok = true;
  while (built < 1000) {
    int r = 1 + static_cast<int>(rng() % 4);
    std::vector<U9Word> gens;
    std::vector<Word> xparts;
    int guard = 0;
    while (static_cast<int>(gens.size()) < r && ++guard < 20000) {
      Word x(10);
      for (int i = 0; i < 10; ++i) x.v[i] = static_cast<std::uint8_t>(coord(rng));
      if (weight(x) % 3 != 0 || x.is_zero()) continue;
      bool ortho = true;
      for (const U9Word& g : gens) {
        int dot = 0;
        for (int i = 0; i < 10; ++i) dot += g.x[i] * x.v[i];
        if (dot % 3 != 0) ortho = false;
      }
      if (!ortho) continue;
      if (membership(rref(xparts), x)) continue;
      U9Word g;
      for (int i = 0; i < 10; ++i) g.x[i] = x.v[i];
      g.y1 = 3 * static_cast<int>(rng() % 3);
      g.y2 = 3 * static_cast<int>(rng() % 3);
      gens.push_back(g);
      xparts.push_back(x);
    }
    if (static_cast<int>(gens.size()) != r) continue;
    if (u9_quotient_3elementary(gens)) ok = false;
    ++built;
  }
  report(10, "U(9) exclusion (1000 trials)", ok);
}

}  // namespace

int main() {
  criterion_1_table2();
  criterion_2_predicates();
  criterion_3_overlattices();
  criterion_4_criteria_vs_oracle();
  criterion_5_degrees();
  criterion_6_certified_plans();
  criterion_7_separability();
  criterion_8_example72();
  criterion_9_rediscovery();
  criterion_10_u9_exclusion();
  std::printf("%s\n", failures ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS");
  return failures ? 1 : 0;
}
