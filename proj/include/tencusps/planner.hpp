// Decision procedures for polarizations of degree d with orthogonal
// complement U(1) or U(3): admissible degrees and certified plans
// (code, h = a e + b f).
#pragma once

#include <optional>
#include <vector>

#include "tencusps/gf3.hpp"
#include "tencusps/lattice.hpp"

namespace tencusps {

enum class SType { U1, U3 };

struct DegreeQuery {
  long d = 0;
  int sigma = 1;  // 1..5 for U1, 1..6 for U3
  SType s_type = SType::U3;
};

struct PolarizationPlan {
  int a = 1, b = 1;  // h = a e + b f, h^2 = 2 a b m
  Code code;         // the sigma-subcode
  RootReport certs;
  std::vector<Int> disc_divisors;  // of the overlattice, [3]^(2 sigma)
};

// U3: d = 0 mod 6; U1: d = 2ab with a, b >= 3, a != b (divisor scan).
bool degree_admissible(long d, SType s_type);

// Certified plan, or nullopt when the degree is inadmissible. Optional
// explicit (a, b) override (U3 only); a plan failing certification throws.
std::optional<PolarizationPlan> make_plan(const DegreeQuery& query,
                                          std::optional<std::pair<int, int>> ab_override = {});

// Sorted admissible degrees <= d_max.
std::vector<long> degree_table(SType s_type, long d_max);

}  // namespace tencusps
