#include "tencusps/codes_table.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace tencusps {

namespace {

Code make_code(int width, std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Word> v;
  for (const auto& r : rows) v.push_back(Word(width, r));
  return rref(v);
}

const std::map<std::string, Code>& table() {
  static const std::map<std::string, Code> t = {
      {"C1", make_code(12, {{1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1},
                            {0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 2, 0},
                            {0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 2, 0},
                            {0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1},
                            {0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 2}})},
      {"C2", make_code(12, {{1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1},
                            {0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 2, 0},
                            {0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 2, 0},
                            {0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1},
                            {0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0, 0}})},
      {"C3", make_code(12, {{1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1},
                            {0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1},
                            {0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 2, 2},
                            {0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 2, 2},
                            {0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0, 1}})},
      {"C4", make_code(12, {{1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1},
                            {0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1},
                            {0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 2, 2},
                            {0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 2, 2},
                            {0, 0, 0, 0, 1, 1, 2, 2, 2, 2, 2, 0}})},
      {"C5", make_code(12, {{1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
                            {0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 2, 2},
                            {0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 2, 2},
                            {0, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 1},
                            {0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0}})},
      {"C6", make_code(12, {{1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
                            {0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 2, 2},
                            {0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 2, 2},
                            {0, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 1},
                            {0, 0, 0, 0, 1, 1, 2, 2, 1, 0, 1, 2}})},
      {"C7", make_code(12, {{1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 2},
                            {0, 1, 0, 0, 0, 1, 0, 1, 1, 2, 2, 1},
                            {0, 0, 1, 0, 0, 1, 1, 0, 2, 1, 2, 1},
                            {0, 0, 0, 1, 0, 1, 1, 2, 0, 2, 1, 2},
                            {0, 0, 0, 0, 1, 1, 2, 1, 2, 0, 1, 2}})},
      {"K", make_code(10, {{1, 0, 0, 0, 0, 1, 1, 1, 1, 1},
                           {0, 1, 0, 0, 1, 0, 1, 1, 2, 2},
                           {0, 0, 1, 0, 1, 1, 0, 2, 1, 2},
                           {0, 0, 0, 1, 1, 1, 2, 0, 2, 1}})},
  };
  return t;
}

}  // namespace

Code builtin(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw std::invalid_argument("builtin: unknown code " + name);
  return it->second;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"C1", "C2", "C3", "C4",
                                                 "C5", "C6", "C7", "K"};
  return names;
}

bool predicate_holds(SearchPredicate p, const Code& c) {
  switch (p) {
    case SearchPredicate::Claim52:
      return c.width == 12 && is_isotropic(Ambient::A10xU3, c) && is_admissible(c) &&
             has_claim52_property(c);
    case SearchPredicate::MinWt6: {
      if (c.width != 10 || !is_isotropic(Ambient::A10, c)) return false;
      for (const Word& w : enumerate_codewords(c))
        if (!w.is_zero() && weight(w) < 6) return false;
      return true;
    }
  }
  throw std::invalid_argument("predicate_holds: unknown predicate");
}

std::vector<Code> random_search(Ambient spec, int dim, SearchPredicate predicate,
                                const SearchBudget& budget) {
  if (dim < 0 || dim > 5) throw std::invalid_argument("random_search: dim must be 0..5");
  if (budget.max_trials < 1)
    throw std::invalid_argument("random_search: max_trials must be >= 1");
  const int width = ambient_width(spec);
  if (dim == 0) return {Code{width, {}}};

  std::mt19937_64 rng(budget.seed);
  std::uniform_int_distribution<int> coord(0, 2);
  std::vector<Code> classes;
  std::vector<WeightEnumerator> enums;

  for (long trial = 0; trial < budget.max_trials; ++trial) {
    Code cur{width, {}};
    // greedy extension with a bounded number of rejected candidates
    for (int stale = 0; cur.dim() < dim && stale < 400; ++stale) {
      Word w(width);
      for (int i = 0; i < width; ++i) w.v[i] = static_cast<std::uint8_t>(coord(rng));
      if (membership(cur, w)) continue;
      std::vector<Word> rows = cur.gens;
      rows.push_back(w);
      Code ext = rref(rows);
      if (!predicate_holds(predicate, ext)) continue;
      cur = ext;
      stale = -1;
    }
    if (cur.dim() != dim) continue;
    WeightEnumerator we = weight_enumerator(cur);
    bool fresh = true;
    for (std::size_t i = 0; i < classes.size() && fresh; ++i)
      if (enums[i] == we && codes_equivalent(classes[i], cur)) fresh = false;
    if (fresh) {
      classes.push_back(cur);
      enums.push_back(we);
      if (budget.target_classes > 0 &&
          static_cast<int>(classes.size()) >= budget.target_classes)
        break;
    }
  }
  return classes;
}

Code subcode_for_sigma(const Code& code, int m, int sigma) {
  int full = m == 3 ? 6 : 5;
  if (m != 1 && m != 3) throw std::invalid_argument("subcode_for_sigma: m must be 1 or 3");
  if (sigma < 1 || sigma > full)
    throw std::invalid_argument("subcode_for_sigma: sigma out of range");
  int d = full - sigma;
  if (code.dim() < d) throw std::invalid_argument("subcode_for_sigma: code dimension too small");
  if (code.width != (m == 3 ? 12 : 10))
    throw std::invalid_argument("subcode_for_sigma: code width does not match m");
  Code sub{code.width, std::vector<Word>(code.gens.begin(), code.gens.begin() + d)};
  // leading RREF rows stay in RREF; hereditary properties must survive
  Ambient spec = m == 3 ? Ambient::A10xU3 : Ambient::A10;
  if (!is_isotropic(spec, sub))
    throw std::logic_error("subcode_for_sigma: isotropy not inherited");
  if (m == 3 && !is_admissible(sub))
    throw std::logic_error("subcode_for_sigma: admissibility not inherited");
  return sub;
}

}  // namespace tencusps
