// Exact integer matrix algebra: Hermite/Smith normal forms, determinants,
// and signatures of symmetric matrices, all over arbitrary-precision ints.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

namespace tencusps {

using Int = boost::multiprecision::cpp_int;

struct IMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static IMat identity(int n);
  IMat transposed() const;
  IMat operator*(const IMat& o) const;
  bool operator==(const IMat& o) const = default;
};

// Row-style Hermite normal form: returns the echelon basis (rank rows,
// positive pivots, entries above each pivot reduced) of the row module.
IMat hnf(const IMat& m);

// Nontrivial invariant factors d1 | d2 | ... of the cokernel Z^n / rowspan.
std::vector<Int> smith_invariants(const IMat& m);

// Exact determinant (fraction-free Bareiss). Requires a square matrix.
Int det(const IMat& m);

// Inertia (n_plus, n_minus) of a nondegenerate symmetric integer matrix,
// by exact symmetric elimination over rationals.
std::pair<int, int> signature_of_symmetric(const IMat& m);

}  // namespace tencusps
