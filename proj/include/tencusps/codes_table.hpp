// Built-in code tables (C1..C7 and the width-10 code K), randomized
// rediscovery of isotropic admissible codes, and sigma-indexed subcodes.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tencusps/forms.hpp"
#include "tencusps/gf3.hpp"

namespace tencusps {

// Canonical RREF of the printed generator matrix; name in {C1..C7, K}.
Code builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

enum class SearchPredicate {
  Claim52,  // isotropic + admissible + minimum-weight property, width 12
  MinWt6,   // isotropic with minimum x-weight >= 6, width 10
};

bool predicate_holds(SearchPredicate p, const Code& c);

struct SearchBudget {
  std::uint64_t seed = 0;
  long max_trials = 1;
  int target_classes = 0;  // 0 = exhaust the budget
};

// Seeded greedy random construction of dim-`dim` codes satisfying the
// predicate; results deduplicated by weight enumerator, then by
// codes_equivalent. Deterministic for a fixed seed.
std::vector<Code> random_search(Ambient spec, int dim, SearchPredicate predicate,
                                const SearchBudget& budget);

// Span of the first (6 - sigma) RREF generators for m=3, (5 - sigma) for
// m=1. Inherited isotropy/admissibility/predicates are asserted.
Code subcode_for_sigma(const Code& code, int m, int sigma);

}  // namespace tencusps
