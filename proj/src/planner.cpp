#include "tencusps/planner.hpp"

#include <stdexcept>

#include "tencusps/codes_table.hpp"

namespace tencusps {

namespace {

// smallest lexicographic (a, b) with d = 2ab, a,b >= 3, a != b
std::optional<std::pair<int, int>> u1_factorization(long d) {
  if (d <= 0 || d % 2 != 0) return std::nullopt;
  long ab = d / 2;
  for (long a = 3; a * a <= ab; ++a) {
    if (ab % a != 0) continue;
    long b = ab / a;
    if (b >= 3 && b != a) return std::make_pair(static_cast<int>(a), static_cast<int>(b));
  }
  return std::nullopt;
}

}  // namespace

bool degree_admissible(long d, SType s_type) {
  if (d < 1) throw std::invalid_argument("degree_admissible: d >= 1 required");
  if (s_type == SType::U3) return d % 6 == 0;
  return u1_factorization(d).has_value();
}

std::optional<PolarizationPlan> make_plan(const DegreeQuery& query,
                                          std::optional<std::pair<int, int>> ab_override) {
  const int m = query.s_type == SType::U3 ? 3 : 1;
  const int sigma_max = m == 3 ? 6 : 5;
  if (query.sigma < 1 || query.sigma > sigma_max)
    throw std::invalid_argument("make_plan: sigma out of range");
  if (!degree_admissible(query.d, query.s_type)) return std::nullopt;

  PolarizationPlan plan;
  if (query.s_type == SType::U3) {
    if (ab_override) {
      plan.a = ab_override->first;
      plan.b = ab_override->second;
      if (plan.a < 1 || plan.b < 1 || 6L * plan.a * plan.b != query.d)
        throw std::invalid_argument("make_plan: override (a,b) has wrong degree");
    } else {
      plan.a = 1;
      plan.b = static_cast<int>(query.d / 6);
    }
    plan.code = subcode_for_sigma(builtin("C7"), 3, query.sigma);
  } else {
    if (ab_override) throw std::invalid_argument("make_plan: override only supported for U3");
    auto ab = u1_factorization(query.d);
    plan.a = ab->first;
    plan.b = ab->second;
    plan.code = subcode_for_sigma(builtin("K"), 1, query.sigma);
  }

  // certification: recompute everything and require a clean report
  plan.certs = brute_force_report(m, plan.code, plan.a, plan.b);
  if (plan.certs.found_u || plan.certs.found_half || plan.certs.count_extra != 0)
    throw std::logic_error("make_plan: certification failed on the root report");
  if (criterion_u_exists(m, plan.code, plan.a, plan.b) ||
      criterion_extra_roots(m, plan.code, plan.a, plan.b))
    throw std::logic_error("make_plan: certification failed on the criteria");
  OverlatticeBasis n = overlattice(m, plan.code);
  plan.disc_divisors = disc_group(n.gram);
  Int expect = 1;
  for (int i = 0; i < 2 * query.sigma; ++i) expect *= 3;
  Int got = 1;
  for (const Int& dv : plan.disc_divisors) {
    if (dv != 3) throw std::logic_error("make_plan: discriminant group not 3-elementary");
    got *= 3;
  }
  if (got != expect || n.gram.determinant() != -expect)
    throw std::logic_error("make_plan: overlattice discriminant != -3^(2 sigma)");
  auto sig = signature(n.gram);
  if (sig != std::make_pair(1, 21))
    throw std::logic_error("make_plan: overlattice not hyperbolic of rank 22");
  return plan;
}

std::vector<long> degree_table(SType s_type, long d_max) {
  if (d_max > 1000000) throw std::invalid_argument("degree_table: d_max too large");
  std::vector<long> out;
  for (long d = s_type == SType::U3 ? 6 : 2; d <= d_max; d += s_type == SType::U3 ? 6 : 2)
    if (degree_admissible(d, s_type)) out.push_back(d);
  return out;
}

}  // namespace tencusps
