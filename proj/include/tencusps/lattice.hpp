// Integer lattices and overlattices of Z[10A2](+)U(m): Gram matrices,
// the code -> overlattice correspondence, discriminant groups, signatures,
// root/isotropic-vector oracles and the a,b-criteria, span discriminants,
// and the U(9)-exclusion test.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tencusps/exact.hpp"
#include "tencusps/gf3.hpp"

namespace tencusps {

struct IntegerLattice {
  int rank = 0;
  IMat gram;

  bool is_even() const;
  Int determinant() const { return det(gram); }
};

// Rank-22 Gram of Z[10A2](+)U(m): ten A2 blocks [[-2,1],[1,-2]] followed by
// one U(m) block [[0,m],[m,0]]. m in {1,3,9}.
IntegerLattice gram_base(int m);

// Overlattice N_C of Z[10A2](+)U(m) attached to an isotropic code.
// Basis rows are rational with denominator 3, stored scaled by 3.
struct OverlatticeBasis {
  int m = 3;
  IMat basis_times_3;  // 22x22, rows * 3 in the (c1,d1,...,c10,d10,e,f) basis
  IntegerLattice gram; // induced Gram, integral and even
};

OverlatticeBasis overlattice(int m, const Code& code);

// Nontrivial elementary divisors of Disc(lattice) via Smith normal form.
std::vector<Int> disc_group(const IntegerLattice& lattice);

// Exact inertia (n_plus, n_minus).
std::pair<int, int> signature(const IntegerLattice& lattice);

// Existence criteria for h = a e + b f:
// m=3: a vector u with hu in {1,2}, u^2=0 exists iff a=b=1 and the code has
// a weight-1 word; m=1: iff a<=2 or b<=2.
bool criterion_u_exists(int m, const Code& code, int a, int b);

// m=3: Roots(h^perp) exceeds Roots(Z[10A2]) iff (a) a wt-3 word with zero
// tail exists, (b) a=b and a wt-2 word exists, or (c) a=2b or b=2a and a
// wt-1 word exists; m=1: iff a wt-3 word exists or a=b.
bool criterion_extra_roots(int m, const Code& code, int a, int b);

struct RootReport {
  long count_extra = 0;  // roots of h^perp outside Roots(Z[10A2])
  bool found_u = false;  // some u with hu in {1,2}, u^2 = 0
  bool found_half = false;  // some b' with h = 2b', b'^2 = 2

  bool operator==(const RootReport&) const = default;
};

// Exhaustive enumeration over per-A2-component short-vector tables and
// bounded tail pairs (eta1, eta2); the independent oracle for the criteria.
RootReport brute_force_report(int m, const Code& code, int a, int b);

// Per-A2-component dual-vector tables (built once by brute force over the
// box {-2..2}^2 in the c,d basis). Exposed for the dual-bound tests.
struct A2DualVector {
  int s = 0, t = 0;       // vector (s*c + t*d)/3, s+t = 0 mod 3
  int cls = 0;            // class in Disc A2 = F3
  int norm_times_3 = 0;   // 3 * v^2, in {0, -2, -6}
};
const std::vector<A2DualVector>& a2_dual_table();

// Gram determinant of the lattice spanned by rational generators given as
// rows scaled by `den` in the base-lattice basis. Throws on rank deficiency
// or a non-integral induced Gram.
Int span_discriminant(const IMat& generators_times_den, const Int& den,
                      const IntegerLattice& base_form);

// Element of F3^10 (+) (Z/9)^2, the discriminant group for U(9).
struct U9Word {
  std::array<std::uint8_t, 10> x{};
  int y1 = 0, y2 = 0;  // mod 9
};

// Decides whether H^perp/H is 3-elementary for an isotropic subgroup H of
// Disc(Z[10A2](+)U(9)) with tails in Ker m3 and trivial tail intersection.
// Throws on precondition violations.
bool u9_quotient_3elementary(const std::vector<U9Word>& subgroup_generators);

}  // namespace tencusps
