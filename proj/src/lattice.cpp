#include "tencusps/lattice.hpp"

#include <stdexcept>

#include "tencusps/forms.hpp"

namespace tencusps {

bool IntegerLattice::is_even() const {
  for (int i = 0; i < rank; ++i)
    if (gram.at(i, i) % 2 != 0) return false;
  return true;
}

IntegerLattice gram_base(int m) {
  if (m != 1 && m != 3 && m != 9) throw std::invalid_argument("gram_base: m must be 1, 3 or 9");
  IntegerLattice l;
  l.rank = 22;
  l.gram = IMat(22, 22);
  for (int i = 0; i < 10; ++i) {
    int c = 2 * i, d = 2 * i + 1;
    l.gram.at(c, c) = -2;
    l.gram.at(d, d) = -2;
    l.gram.at(c, d) = 1;
    l.gram.at(d, c) = 1;
  }
  l.gram.at(20, 21) = m;
  l.gram.at(21, 20) = m;
  return l;
}

OverlatticeBasis overlattice(int m, const Code& code) {
  if (m != 1 && m != 3) throw std::invalid_argument("overlattice: m must be 1 or 3");
  Ambient spec = m == 3 ? Ambient::A10xU3 : Ambient::A10;
  if (code.width != ambient_width(spec))
    throw std::invalid_argument("overlattice: code width does not match m");
  if (!is_isotropic(spec, code))
    throw std::invalid_argument("overlattice: code is not isotropic");

  IntegerLattice base = gram_base(m);
  // Rows scaled by 3: the base basis plus one lift per code generator.
  // The lift of (x1..x10, y1, y2) is sum x_i (c_i + 2 d_i)/3 + y1 f/m + y2 e/m.
  IMat rows(22 + code.dim(), 22);
  for (int i = 0; i < 22; ++i) rows.at(i, i) = 3;
  for (int g = 0; g < code.dim(); ++g) {
    const Word& w = code.gens[g];
    int r = 22 + g;
    for (int i = 0; i < 10; ++i) {
      rows.at(r, 2 * i) = w.v[i];
      rows.at(r, 2 * i + 1) = 2 * w.v[i] % 3;
    }
    if (m == 3) {
      rows.at(r, 21) = w.y1();  // y1 * f/3, scaled by 3
      rows.at(r, 20) = w.y2();  // y2 * e/3
    }
  }
  IMat h = hnf(rows);
  if (h.rows != 22) throw std::logic_error("overlattice: basis rank != 22");

  IMat gram9 = h * base.gram * h.transposed();
  OverlatticeBasis ob;
  ob.m = m;
  ob.basis_times_3 = h;
  ob.gram.rank = 22;
  ob.gram.gram = IMat(22, 22);
  for (int r = 0; r < 22; ++r)
    for (int c = 0; c < 22; ++c) {
      if (gram9.at(r, c) % 9 != 0)
        throw std::invalid_argument("overlattice: induced Gram is not integral");
      ob.gram.gram.at(r, c) = gram9.at(r, c) / 9;
    }
  if (!ob.gram.is_even())
    throw std::invalid_argument("overlattice: induced Gram is not even");
  return ob;
}

std::vector<Int> disc_group(const IntegerLattice& lattice) {
  if (lattice.determinant() == 0) throw std::invalid_argument("disc_group: singular Gram");
  return smith_invariants(lattice.gram);
}

std::pair<int, int> signature(const IntegerLattice& lattice) {
  return signature_of_symmetric(lattice.gram);
}

namespace {

bool has_word(const Code& code, int wt, bool zero_tail_only = false) {
  for (const Word& w : enumerate_codewords(code)) {
    if (weight(w) != wt) continue;
    if (zero_tail_only && (w.y1() || w.y2())) continue;
    return true;
  }
  return false;
}

void check_criterion_pre(int m, const Code& code) {
  if (m == 3) {
    if (!is_isotropic(Ambient::A10xU3, code) || !is_admissible(code))
      throw std::invalid_argument("criterion: admissible isotropic code required for m=3");
  } else if (m == 1) {
    if (!is_isotropic(Ambient::A10, code))
      throw std::invalid_argument("criterion: isotropic code required for m=1");
  } else {
    throw std::invalid_argument("criterion: m must be 1 or 3");
  }
}

}  // namespace

bool criterion_u_exists(int m, const Code& code, int a, int b) {
  check_criterion_pre(m, code);
  if (a < 1 || b < 1) throw std::invalid_argument("criterion_u_exists: a,b >= 1 required");
  if (m == 3) return a == 1 && b == 1 && has_word(code, 1);
  return a <= 2 || b <= 2;
}

bool criterion_extra_roots(int m, const Code& code, int a, int b) {
  check_criterion_pre(m, code);
  if (a < 1 || b < 1) throw std::invalid_argument("criterion_extra_roots: a,b >= 1 required");
  if (m == 3) {
    if (has_word(code, 3, /*zero_tail_only=*/true)) return true;
    if (a == b && has_word(code, 2)) return true;
    if ((a == 2 * b || b == 2 * a) && has_word(code, 1)) return true;
    return false;
  }
  return has_word(code, 3) || a == b;
}

const std::vector<A2DualVector>& a2_dual_table() {
  static const std::vector<A2DualVector> table = [] {
    std::vector<A2DualVector> t;
    // box {-2..2}^2 in the c,d basis; v = (s c + t d)/3 with s+t = 0 mod 3
    for (int s = -6; s <= 6; ++s)
      for (int u = -6; u <= 6; ++u) {
        if (((s + u) % 3 + 3) % 3 != 0) continue;
        int norm9 = -2 * s * s + 2 * s * u - 2 * u * u;  // 9 * v^2
        if (norm9 % 3 != 0) throw std::logic_error("a2_dual_table: norm not in (1/3)Z");
        int norm3 = norm9 / 3;
        if (norm3 < -6) continue;  // only norms 0, -2/3, -2 are ever combined
        t.push_back({s, u, ((s % 3) + 3) % 3, norm3});
      }
    // sanity counts: the zero vector, 3 minimal vectors per nonzero coset,
    // and the 6 roots of the zero coset
    int zero = 0, min1 = 0, min2 = 0, roots = 0;
    for (const auto& v : t) {
      if (v.norm_times_3 == 0) ++zero;
      if (v.norm_times_3 == -2 && v.cls == 1) ++min1;
      if (v.norm_times_3 == -2 && v.cls == 2) ++min2;
      if (v.norm_times_3 == -6 && v.cls == 0) ++roots;
    }
    if (zero != 1 || min1 != 3 || min2 != 3 || roots != 6)
      throw std::logic_error("a2_dual_table: unexpected short-vector counts");
    return t;
  }();
  return table;
}

namespace {

// Vectors per (class, 3*norm) from the memoized table.
long a2_count(int cls, int norm3) {
  long n = 0;
  for (const auto& v : a2_dual_table())
    if (v.cls == cls && v.norm_times_3 == norm3) ++n;
  return n;
}

// Number of lifts r of a word with the given x-weight such that 3*r^2 = T.
// With T >= -6 each nonzero component must sit at norm -2/3 and at most one
// zero component may be a root.
long count_lifts(int wt, long T) {
  if (T < -6 || T > 0) return 0;
  static const long per_nonzero = a2_count(1, -2);   // 3
  static const long per_root = a2_count(0, -6);      // 6
  long rem = T + 2 * wt;
  long base = 1;
  for (int i = 0; i < wt; ++i) base *= per_nonzero;
  if (rem == 0) return base;
  if (rem == -6 && wt <= 9) return base * per_root * (10 - wt);
  return 0;
}

}  // namespace

RootReport brute_force_report(int m, const Code& code, int a, int b) {
  check_criterion_pre(m, code);
  if (a < 1 || b < 1) throw std::invalid_argument("brute_force_report: a,b >= 1 required");
  RootReport rep;
  long total_roots = 0;
  const auto words = enumerate_codewords(code);
  for (const Word& w : words) {
    int wt = weight(w);
    for (int e1 = -4; e1 <= 4; ++e1)
      for (int e2 = -4; e2 <= 4; ++e2) {
        if (m == 3 && ((((e1 % 3) + 3) % 3 != w.y1()) || (((e2 % 3) + 3) % 3 != w.y2())))
          continue;
        long p = static_cast<long>(e1) * e2;
        long dot = static_cast<long>(a) * e1 + static_cast<long>(b) * e2;
        if (dot == 0) {
          // u^2 = -2: 3*r^2 = -6 - 6*p/m
          long T = -6 - 6 * p / m;
          long c = count_lifts(wt, T);
          if (std::abs(p) == 4 && c != 0)
            throw std::logic_error("brute_force_report: eta-bound violated at |eta1*eta2| = 4");
          total_roots += c;
        } else if (dot == 1 || dot == 2) {
          if (p < 0) continue;  // u^2 = 0 needs r^2 = -2p/m <= 0
          long T = -6 * p / m;
          if (T < -6)
            throw std::logic_error("brute_force_report: unexpected large eta pair for u^2 = 0");
          if (count_lifts(wt, T) > 0) rep.found_u = true;
        }
      }
  }
  if (total_roots < 60)
    throw std::logic_error("brute_force_report: Roots(Z[10A2]) not fully enumerated");
  rep.count_extra = total_roots - 60;
  // h = 2b' forces b' = h/2 in U(m); b'^2 = a*b*m/2
  rep.found_half = a % 2 == 0 && b % 2 == 0 && static_cast<long>(a) * b * m == 4;
  return rep;
}

Int span_discriminant(const IMat& generators_times_den, const Int& den,
                      const IntegerLattice& base_form) {
  if (generators_times_den.cols != base_form.rank)
    throw std::invalid_argument("span_discriminant: generator width != base rank");
  if (den <= 0) throw std::invalid_argument("span_discriminant: positive denominator required");
  IMat h = hnf(generators_times_den);
  if (h.rows != base_form.rank)
    throw std::invalid_argument("span_discriminant: generators are rank deficient");
  IMat g = h * base_form.gram * h.transposed();
  Int d2 = den * den;
  IMat gram(h.rows, h.rows);
  for (int r = 0; r < h.rows; ++r)
    for (int c = 0; c < h.rows; ++c) {
      if (g.at(r, c) % d2 != 0)
        throw std::invalid_argument("span_discriminant: induced Gram is not integral");
      gram.at(r, c) = g.at(r, c) / d2;
    }
  return det(gram);
}

bool u9_quotient_3elementary(const std::vector<U9Word>& subgroup_generators) {
  // Preconditions: tails in Ker m3, the span isotropic, trivial tail
  // intersection (no combination with zero x-part and nonzero tail).
  for (const U9Word& g : subgroup_generators) {
    if (g.y1 % 3 != 0 || g.y2 % 3 != 0)
      throw std::invalid_argument("u9: generator tail not in Ker m3");
    int wt = 0;
    for (int i = 0; i < 10; ++i) {
      if (g.x[i] > 2) throw std::invalid_argument("u9: x coordinate out of range");
      if (g.x[i]) ++wt;
    }
    if (wt % 3 != 0) throw std::invalid_argument("u9: generator not isotropic");
  }
  for (std::size_t i = 0; i < subgroup_generators.size(); ++i)
    for (std::size_t j = i + 1; j < subgroup_generators.size(); ++j) {
      int dot = 0;
      for (int k = 0; k < 10; ++k) dot += subgroup_generators[i].x[k] * subgroup_generators[j].x[k];
      if (dot % 3 != 0) throw std::invalid_argument("u9: generator pair not orthogonal under b");
    }

  // Orthogonality matrix over F3: an element (x, y1, y2) of the ambient lies
  // in H^perp iff M (x, y1, y2)^T = 0, with columns (x-part | eta2 | eta1).
  std::vector<Word> m_full, m_x;
  for (const U9Word& g : subgroup_generators) {
    Word full(12), xonly(10);
    for (int i = 0; i < 10; ++i) {
      full.v[i] = g.x[i];
      xonly.v[i] = g.x[i];
    }
    full.v[10] = static_cast<std::uint8_t>(((g.y2 / 3) % 3 + 3) % 3);
    full.v[11] = static_cast<std::uint8_t>(((g.y1 / 3) % 3 + 3) % 3);
    m_full.push_back(full);
    m_x.push_back(xonly);
  }
  int rank_full = rref(m_full).dim();
  int rank_x = m_x.empty() ? 0 : rref(m_x).dim();
  if (rank_full != rank_x)
    throw std::invalid_argument("u9: subgroup meets 0 (+) Disc S nontrivially");
  // H^perp/H is 3-elementary iff every solution has y1 = y2 = 0, i.e. the
  // tail columns add two to the rank.
  return rank_full == rank_x + 2;
}

}  // namespace tencusps
