#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tencusps/codes_table.hpp"
#include "tencusps/example72.hpp"

using namespace tencusps;

namespace {

Int pow3(int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

}  // namespace

TEST_CASE("generator matrix shape and scaling") {
  IMat g = example72_generators_times_3();
  CHECK(g.rows == 28);
  CHECK(g.cols == 22);
  // rows 0..21 are 3e, 3f and the twenty scaled exceptional classes
  CHECK(g.at(0, 20) == 3);
  CHECK(g.at(1, 21) == 3);
  for (int i = 0; i < 20; ++i) CHECK(g.at(2 + i, i) == 3);
  // each rational row carries exactly one tail coefficient equal to 1
  for (int row = 22; row < 28; ++row) {
    Int tail = g.at(row, 20) + g.at(row, 21);
    CHECK(tail == 1);
    // x-part coefficients stay in {-3, ..., 0}
    for (int j = 0; j < 20; ++j) {
      CHECK(g.at(row, j) <= 0);
      CHECK(g.at(row, j) >= -3);
    }
  }
}

TEST_CASE("base rows alone span the base lattice") {
  IMat g = example72_generators_times_3();
  IMat head(22, 22);  // rows 0..21 only
  for (int i = 0; i < 22; ++i)
    for (int j = 0; j < 22; ++j) head.at(i, j) = g.at(i, j);
  CHECK(span_discriminant(head, 3, gram_base(3)) == -pow3(12));
}

TEST_CASE("report: discriminant, induced code, equivalence") {
  Example72Report rep = run_example72();
  CHECK(rep.discriminant == -9);
  CHECK(rep.induced.dim() == 5);
  REQUIRE(rep.equivalence.has_value());
  // the witness really maps the induced code onto C1
  CHECK(apply_g(*rep.equivalence, rep.induced) == builtin("C1"));
  CHECK(rep.ok);
}

TEST_CASE("induced code matches the printed class invariants") {
  Example72Report rep = run_example72();
  CHECK(is_isotropic(Ambient::A10xU3, rep.induced));
  CHECK(is_admissible(rep.induced));
  CHECK(has_claim52_property(rep.induced));
  CHECK(weight_enumerator(rep.induced).str() ==
        weight_enumerator(builtin("C1")).str());
}
