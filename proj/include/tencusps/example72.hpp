// The inseparable-cover example W^3 = (x^3-x)(y^3-y): span discriminant of
// the printed 28-generator set, the induced 6-word code, and its
// equivalence class.
#pragma once

#include <optional>

#include "tencusps/forms.hpp"
#include "tencusps/lattice.hpp"

namespace tencusps {

struct Example72Report {
  Int discriminant = 0;          // expected -9
  Code induced;                  // span of the 6 induced words, expected dim 5
  std::optional<SignedPermutation> equivalence;  // witness of induced ~ C1
  bool ok = false;
};

// The 28 generators (e, f, the twenty exceptional classes, and the six
// printed rational classes), as rows scaled by 3 in the base-lattice basis.
IMat example72_generators_times_3();

Example72Report run_example72();

}  // namespace tencusps
