// Feasibility of the separability obstruction system attached to a dim-5
// code: witness verification with a per-constraint ledger, exhaustive
// deterministic search, and the t-bound audit.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tencusps/gf3.hpp"

namespace tencusps {

struct SepSystem {
  Code code;  // width 12, dim 5; isotropic, admissible, claim52 property
  int t_max = 6;
};

// Validates the code invariants; throws on violation.
SepSystem make_sep_system(const Code& code, int t_max = 6);

struct SepComponent {
  Word x;  // width 12; tail = (alpha mod 3, beta mod 3)
  int alpha = 0;
  int beta = 0;

  bool operator==(const SepComponent&) const = default;
};

struct SepWitness {
  int alpha_E = 0;  // in {0,3}; beta_E = 3 implicitly
  int beta_F = 0;   // in {0,3}; alpha_F = 3 implicitly
  std::vector<SepComponent> components;

  int t() const { return static_cast<int>(components.size()); }
  bool operator==(const SepWitness&) const = default;
};

struct SepCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SepVerifyReport {
  std::vector<SepCheck> checks;
  bool ok = true;
};

SepVerifyReport verify_witness(const SepSystem& system, const SepWitness& witness);

// Exhaustive DFS in canonical order; first witness found, or absence.
struct SepSolveStats {
  long nodes = 0;
  long witnesses = 0;  // complete assignments satisfying every constraint
  int max_t = 0;       // over all witnesses encountered
};

std::optional<SepWitness> solve(const SepSystem& system, SepSolveStats* stats = nullptr);

// Re-runs the search exhaustively with t_max = 8; returns the maximal t of
// any witness (0 if infeasible) and throws if some witness needs t > 6.
int t_bound_audit(const SepSystem& system);

// Parses the (t+2)-row integer list format: one row per line, 12 integers;
// the zero-x row with last slot 3 is the C_E row (alpha_E = slot 11), the
// zero-x row with slot 11 = 3 is the C_F row (beta_F = last slot); the
// remaining rows are components with (alpha, beta) in the last two slots.
SepWitness parse_witness(const std::string& text);

}  // namespace tencusps
