// Finite quadratic forms on the discriminant groups of Z[10A2](+)U(m),
// the isotropy/admissibility predicates, and code equivalence under the
// signed-permutation group G.
#pragma once

#include <optional>
#include <string>

#include "tencusps/gf3.hpp"

namespace tencusps {

enum class Ambient {
  A10,     // F3^10, discriminant group of Z[10A2](+)U(1)
  A10xU3,  // F3^10 (+) F3^2, of Z[10A2](+)U(3)
};

inline int ambient_width(Ambient a) { return a == Ambient::A10 ? 10 : 12; }

// Class of Q/2Z as a reduced fraction with canonical representative in [0,2).
struct Q2 {
  long num = 0;
  long den = 1;
  bool operator==(const Q2&) const = default;
  bool is_zero() const { return num == 0; }
  std::string str() const;
};

// q(x1..x10, y1, y2) = -2(x1^2+...+x10^2)/3 + 2 y1 y2 / 3  (mod 2Z);
// the tail term is absent for Ambient::A10.
Q2 q_value(Ambient spec, const Word& w);

// Induced bilinear form b(u,v) = (q(u+v)-q(u)-q(v))/2 in Q/Z, returned as a
// reduced fraction in [0,1).
Q2 b_value(Ambient spec, const Word& u, const Word& v);

// True iff q vanishes on every codeword. Agrees with the congruence
// wt(x) = y1*y2 (mod 3), resp. wt(x) = 0 (mod 3) for Ambient::A10.
bool is_isotropic(Ambient spec, const Code& c);

// True iff no nonzero codeword has zero x-part (width-12 ambient).
bool is_admissible(const Code& c);

// True iff every nonzero word has wt(x) >= 3 and, when wt(x) = 3,
// a nonzero tail.
bool has_claim52_property(const Code& c);

// Element of the group G: a signed permutation of the ten x-coordinates,
// an optional tail swap, and a global tail sign.
struct SignedPermutation {
  std::array<int, 10> sigma{};      // coordinate i maps to slot sigma[i]
  std::array<std::int8_t, 10> sign{};  // +1 or -1 per x-coordinate
  bool tail_swap = false;
  std::int8_t tail_sign = 1;

  static SignedPermutation identity();
  SignedPermutation inverse() const;
  SignedPermutation compose(const SignedPermutation& then) const;  // then(this(w))
  std::string str() const;
};

Word apply_g(const SignedPermutation& g, const Word& w);
Code apply_g(const SignedPermutation& g, const Code& c);

// Exact backtracking search for g in G with g(codeA) = codeB (as row
// spaces). Deterministic: first witness in canonical branch order, or
// nullopt after exhausting the space.
std::optional<SignedPermutation> codes_equivalent(const Code& a, const Code& b);

}  // namespace tencusps
