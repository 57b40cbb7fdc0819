#include "tencusps/separability.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tencusps/forms.hpp"

namespace tencusps {

SepSystem make_sep_system(const Code& code, int t_max) {
  if (code.width != 12) throw std::invalid_argument("sep_system: width-12 code required");
  if (!is_isotropic(Ambient::A10xU3, code) || !is_admissible(code) ||
      !has_claim52_property(code))
    throw std::invalid_argument("sep_system: isotropic admissible claim52 code required");
  if (t_max < 0) throw std::invalid_argument("sep_system: t_max >= 0 required");
  return SepSystem{code, t_max};
}

namespace {

int union_support(const std::vector<SepComponent>& comps) {
  std::set<int> s;
  for (const SepComponent& c : comps)
    for (int i = 0; i < kXWidth; ++i)
      if (c.x.v[i]) s.insert(i);
  return static_cast<int>(s.size());
}

// 3*(LHS - RHS) of the master inequality; feasible iff >= 0.
long master_slack(int alpha_E, int beta_F, const std::vector<SepComponent>& comps) {
  long t = static_cast<long>(comps.size());
  long sum = 0;
  for (const SepComponent& c : comps)
    sum += static_cast<long>(c.alpha) * c.beta - weight(c.x);
  long lhs3 = 3 * (t + 2) + 3 * alpha_E + 3 * beta_F + sum;  // beta_E = alpha_F = 3
  long rhs3 = 3 * (10 - union_support(comps));
  return lhs3 - rhs3;
}

}  // namespace

SepVerifyReport verify_witness(const SepSystem& system, const SepWitness& w) {
  SepVerifyReport rep;
  auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back({name, pass, detail});
    if (!pass) rep.ok = false;
  };

  check("alpha_E in {0,3}", w.alpha_E == 0 || w.alpha_E == 3);
  check("beta_F in {0,3}", w.beta_F == 0 || w.beta_F == 3);
  {
    Word we(12), wf(12);
    we.v[10] = static_cast<std::uint8_t>(((w.alpha_E % 3) + 3) % 3);
    wf.v[11] = static_cast<std::uint8_t>(((w.beta_F % 3) + 3) % 3);
    check("E word (0, alpha_E mod 3, 0) in code", membership(system.code, we));
    check("F word (0, 0, beta_F mod 3) in code", membership(system.code, wf));
  }
  check("t <= t_max", w.t() <= system.t_max);

  long sum_a = 0, sum_b = 0;
  Word xsum(12);
  bool members = true, residues = true, nonneg = true, positive = true, effective = true;
  for (const SepComponent& c : w.components) {
    if (c.x.width != 12 || !membership(system.code, c.x)) members = false;
    if (c.alpha < 0 || c.beta < 0) nonneg = false;
    if (c.alpha % 3 != c.x.y1() || c.beta % 3 != c.x.y2()) residues = false;
    if (c.alpha + c.beta < 1) positive = false;
    if (-weight(c.x) + c.alpha * c.beta < -3) effective = false;
    sum_a += c.alpha;
    sum_b += c.beta;
    xsum = xsum + c.x;
  }
  check("components lie in the code", members);
  check("alpha_nu, beta_nu >= 0", nonneg);
  check("alpha_nu = tail y1, beta_nu = tail y2 (mod 3)", residues);
  check("alpha_nu > 0 or beta_nu > 0", positive);
  check("-wt(x_nu) + alpha_nu*beta_nu >= -3", effective);
  {
    std::ostringstream os;
    os << "alpha_E + sum = " << w.alpha_E + sum_a << ", beta_F + sum = " << w.beta_F + sum_b;
    check("alpha_E + sum(alpha_nu) = 3 and beta_F + sum(beta_nu) = 3",
          w.alpha_E + sum_a == 3 && w.beta_F + sum_b == 3, os.str());
  }
  {
    bool closed = true;
    for (int i = 0; i < kXWidth; ++i)
      if (xsum.v[i]) closed = false;
    check("x_1 + ... + x_t = 0", closed);
  }
  {
    long slack3 = master_slack(w.alpha_E, w.beta_F, w.components);
    std::ostringstream os;
    os << "3*(LHS - RHS) = " << slack3;
    check("master inequality", slack3 >= 0, os.str());
  }
  return rep;
}

namespace {

struct Candidate {
  Word x;
  int alpha;
  int beta;
};

// All (word, alpha, beta) with alpha = y1, beta = y2 mod 3, 0 <= alpha,
// beta <= 3, alpha + beta >= 1, and the per-component effectivity bound.
std::vector<Candidate> candidates(const Code& code) {
  std::vector<Candidate> out;
  for (const Word& w : enumerate_codewords(code)) {
    int wt = weight(w);
    auto options = [](int residue) {
      return residue == 0 ? std::vector<int>{0, 3} : std::vector<int>{residue};
    };
    for (int a : options(w.y1()))
      for (int b : options(w.y2())) {
        if (a + b < 1) continue;
        if (-wt + a * b < -3) continue;
        out.push_back({w, a, b});
      }
  }
  return out;
}

struct SepSearch {
  const SepSystem& sys;
  std::vector<Candidate> cand;
  int t_cap;
  bool stop_at_first;
  SepSolveStats stats;
  std::optional<SepWitness> found;
  std::vector<SepComponent> cur;
  int alpha_E = 0, beta_F = 0;

  // canonical: components in non-decreasing candidate index
  bool dfs(std::size_t from, int rem_a, int rem_b, const Word& xsum) {
    ++stats.nodes;
    if (rem_a == 0 && rem_b == 0) {
      bool closed = true;
      for (int i = 0; i < kXWidth; ++i)
        if (xsum.v[i]) closed = false;
      if (closed && master_slack(alpha_E, beta_F, cur) >= 0) {
        ++stats.witnesses;
        stats.max_t = std::max(stats.max_t, static_cast<int>(cur.size()));
        if (!found) found = SepWitness{alpha_E, beta_F, cur};
        if (stop_at_first) return true;
      }
    }
    if (static_cast<int>(cur.size()) >= t_cap) return false;
    for (std::size_t i = from; i < cand.size(); ++i) {
      const Candidate& c = cand[i];
      if (c.alpha > rem_a || c.beta > rem_b) continue;
      cur.push_back({c.x, c.alpha, c.beta});
      bool done = dfs(i, rem_a - c.alpha, rem_b - c.beta, xsum + c.x);
      cur.pop_back();
      if (done) return true;
    }
    return false;
  }

  void run() {
    for (int ae : {0, 3})
      for (int bf : {0, 3}) {
        alpha_E = ae;
        beta_F = bf;
        if (dfs(0, 3 - ae, 3 - bf, Word(12)) && stop_at_first) return;
      }
  }
};

}  // namespace

std::optional<SepWitness> solve(const SepSystem& system, SepSolveStats* stats) {
  SepSearch s{system, candidates(system.code), system.t_max, /*stop_at_first=*/true};
  s.run();
  if (stats) *stats = s.stats;
  return s.found;
}

int t_bound_audit(const SepSystem& system) {
  SepSearch s{system, candidates(system.code), 8, /*stop_at_first=*/false};
  s.run();
  if (s.stats.max_t > 6) throw std::logic_error("t_bound_audit: witness with t > 6 found");
  return s.stats.max_t;
}

SepWitness parse_witness(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<int> row;
    int v;
    while (ls >> v) row.push_back(v);
    if (row.empty()) continue;
    if (row.size() != 12) throw std::invalid_argument("parse_witness: 12 entries per row");
    rows.push_back(row);
  }
  SepWitness w;
  bool have_e = false, have_f = false;
  for (const auto& row : rows) {
    bool zero_x = std::all_of(row.begin(), row.begin() + 10, [](int v) { return v == 0; });
    if (zero_x && !have_e && row[11] == 3) {
      w.alpha_E = row[10];
      have_e = true;
      continue;
    }
    if (zero_x && !have_f && row[10] == 3) {
      w.beta_F = row[11];
      have_f = true;
      continue;
    }
    SepComponent c;
    c.x = Word(12);
    for (int i = 0; i < 10; ++i) {
      if (row[i] < 0 || row[i] > 2)
        throw std::invalid_argument("parse_witness: x coordinates must be in {0,1,2}");
      c.x.v[i] = static_cast<std::uint8_t>(row[i]);
    }
    c.alpha = row[10];
    c.beta = row[11];
    c.x.v[10] = static_cast<std::uint8_t>(((c.alpha % 3) + 3) % 3);
    c.x.v[11] = static_cast<std::uint8_t>(((c.beta % 3) + 3) % 3);
    w.components.push_back(c);
  }
  if (!have_e || !have_f)
    throw std::invalid_argument("parse_witness: missing the C_E / C_F rows");
  return w;
}

}  // namespace tencusps
