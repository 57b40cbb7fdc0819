#include "tencusps/forms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tencusps {

namespace {

void check_width(Ambient spec, const Word& w, const char* who) {
  if (w.width != ambient_width(spec))
    throw std::invalid_argument(std::string(who) + ": word width does not match ambient");
}

// q(w) as an integer n with q = n/3 mod 2Z, normalized to n in [0,6).
int q_num3(Ambient spec, const Word& w) {
  int s = 0;
  for (int i = 0; i < kXWidth; ++i) s += w.v[i] * w.v[i];
  int n = -2 * s;
  if (spec == Ambient::A10xU3) n += 2 * w.y1() * w.y2();
  return ((n % 6) + 6) % 6;
}

}  // namespace

std::string Q2::str() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << "/" << den;
  return os.str();
}

Q2 q_value(Ambient spec, const Word& w) {
  check_width(spec, w, "q_value");
  int n = q_num3(spec, w);
  int g = std::gcd(n, 3);
  return Q2{n / g, 3 / g};
}

Q2 b_value(Ambient spec, const Word& u, const Word& v) {
  check_width(spec, u, "b_value");
  check_width(spec, v, "b_value");
  // b = (q(u+v)-q(u)-q(v))/2 in Q/Z; q values are n/3 mod 2, so b = m/6 mod 1.
  int m = q_num3(spec, u + v) - q_num3(spec, u) - q_num3(spec, v);
  m = ((m % 6) + 6) % 6;
  int g = std::gcd(m, 6);
  return Q2{m / g, 6 / g};
}

bool is_isotropic(Ambient spec, const Code& c) {
  if (c.width != ambient_width(spec))
    throw std::invalid_argument("is_isotropic: code width does not match ambient");
  bool direct = true, shortcut = true;
  for (const Word& w : enumerate_codewords(c)) {
    if (!q_value(spec, w).is_zero()) direct = false;
    int rhs = spec == Ambient::A10xU3 ? w.y1() * w.y2() : 0;
    if ((weight(w) - rhs) % 3 != 0) shortcut = false;
  }
  if (direct != shortcut)
    throw std::logic_error("is_isotropic: congruence shortcut disagrees with q-vanishing");
  return direct;
}

bool is_admissible(const Code& c) {
  if (c.width != 12) throw std::invalid_argument("is_admissible: width-12 ambient required");
  for (const Word& w : enumerate_codewords(c))
    if (!w.is_zero() && weight(w) == 0) return false;
  return true;
}

bool has_claim52_property(const Code& c) {
  if (c.width != 12)
    throw std::invalid_argument("has_claim52_property: width-12 ambient required");
  for (const Word& w : enumerate_codewords(c)) {
    if (w.is_zero()) continue;
    int wt = weight(w);
    if (wt < 3) return false;
    if (wt == 3 && w.y1() == 0 && w.y2() == 0) return false;
  }
  return true;
}

SignedPermutation SignedPermutation::identity() {
  SignedPermutation g;
  for (int i = 0; i < 10; ++i) {
    g.sigma[i] = i;
    g.sign[i] = 1;
  }
  return g;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation r = identity();
  for (int i = 0; i < 10; ++i) {
    r.sigma[sigma[i]] = i;
    r.sign[sigma[i]] = sign[i];
  }
  r.tail_swap = tail_swap;
  r.tail_sign = tail_sign;
  return r;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& then) const {
  SignedPermutation r;
  for (int i = 0; i < 10; ++i) {
    r.sigma[i] = then.sigma[sigma[i]];
    r.sign[i] = static_cast<std::int8_t>(sign[i] * then.sign[sigma[i]]);
  }
  r.tail_swap = tail_swap != then.tail_swap;
  r.tail_sign = static_cast<std::int8_t>(tail_sign * then.tail_sign);
  return r;
}

std::string SignedPermutation::str() const {
  std::ostringstream os;
  os << "sigma=[";
  for (int i = 0; i < 10; ++i) os << (i ? "," : "") << sigma[i] + 1;
  os << "] signs=[";
  for (int i = 0; i < 10; ++i) os << (i ? "," : "") << (sign[i] > 0 ? "+" : "-");
  os << "] tail_swap=" << (tail_swap ? "yes" : "no")
     << " tail_sign=" << (tail_sign > 0 ? "+" : "-");
  return os.str();
}

Word apply_g(const SignedPermutation& g, const Word& w) {
  Word r(w.width);
  for (int i = 0; i < 10; ++i) {
    int val = w.v[i];
    if (g.sign[i] < 0) val = (3 - val) % 3;
    r.v[g.sigma[i]] = static_cast<std::uint8_t>(val);
  }
  if (w.width == 12) {
    int t1 = w.v[10], t2 = w.v[11];
    if (g.tail_swap) std::swap(t1, t2);
    if (g.tail_sign < 0) {
      t1 = (3 - t1) % 3;
      t2 = (3 - t2) % 3;
    }
    r.v[10] = static_cast<std::uint8_t>(t1);
    r.v[11] = static_cast<std::uint8_t>(t2);
  }
  return r;
}

Code apply_g(const SignedPermutation& g, const Code& c) {
  std::vector<Word> rows;
  rows.reserve(c.gens.size());
  for (const Word& w : c.gens) rows.push_back(apply_g(g, w));
  return rref(rows);
}

namespace {

// Per-coordinate invariant: counts of (wt, coordinate nonzero) over all
// codewords. Coordinates may only map to coordinates with equal invariants.
using ColumnInvariant = std::array<int, 2 * (kXWidth + 1)>;

ColumnInvariant column_invariant(const std::vector<Word>& words, int col) {
  ColumnInvariant inv{};
  for (const Word& w : words) ++inv[2 * weight(w) + (w.v[col] ? 1 : 0)];
  return inv;
}

struct EquivSearch {
  const std::vector<Word>& wa;
  const std::vector<Word>& wb;
  const Code& a;
  const Code& b;
  bool swap_tail = false;
  int tail_sign = 1;
  std::array<int, 10> image{};   // A column -> B column
  std::array<int, 10> sgn{};     // +1 / -1
  std::array<bool, 10> used{};
  std::array<ColumnInvariant, 10> inv_a, inv_b;

  int tail_key(const Word& w, bool mapped) const {
    if (w.width != 12) return 0;
    int t1 = w.v[10], t2 = w.v[11];
    if (mapped) {
      if (swap_tail) std::swap(t1, t2);
      if (tail_sign < 0) {
        t1 = (3 - t1) % 3;
        t2 = (3 - t2) % 3;
      }
    }
    return t1 * 3 + t2;
  }

  // Multiset over codewords of (wt, tail, mapped values on the first
  // `depth` assigned coordinates) must agree between the two codes.
  bool partial_consistent(int depth) const {
    std::vector<std::uint64_t> ka, kb;
    ka.reserve(wa.size());
    kb.reserve(wb.size());
    for (const Word& w : wa) {
      std::uint64_t k = static_cast<std::uint64_t>(weight(w)) << 4 | tail_key(w, true);
      for (int i = 0; i < depth; ++i) {
        int val = w.v[i];
        if (sgn[i] < 0) val = (3 - val) % 3;
        k = k << 2 | static_cast<std::uint64_t>(val);
      }
      ka.push_back(k);
    }
    for (const Word& w : wb) {
      std::uint64_t k = static_cast<std::uint64_t>(weight(w)) << 4 | tail_key(w, false);
      for (int i = 0; i < depth; ++i)
        k = k << 2 | static_cast<std::uint64_t>(w.v[image[i]]);
      kb.push_back(k);
    }
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
  }

  std::optional<SignedPermutation> dfs(int depth) {
    if (depth == 10) {
      SignedPermutation g;
      for (int i = 0; i < 10; ++i) {
        g.sigma[i] = image[i];
        g.sign[i] = static_cast<std::int8_t>(sgn[i]);
      }
      g.tail_swap = swap_tail;
      g.tail_sign = static_cast<std::int8_t>(tail_sign);
      if (apply_g(g, a) == b) return g;
      return std::nullopt;
    }
    for (int j = 0; j < 10; ++j) {
      if (used[j] || inv_a[depth] != inv_b[j]) continue;
      used[j] = true;
      image[depth] = j;
      for (int s : {1, -1}) {
        sgn[depth] = s;
        if (partial_consistent(depth + 1))
          if (auto g = dfs(depth + 1)) {
            used[j] = false;
            return g;
          }
      }
      used[j] = false;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<SignedPermutation> codes_equivalent(const Code& a, const Code& b) {
  if (a.width != b.width) throw std::invalid_argument("codes_equivalent: ambient mismatch");
  if (a.dim() != b.dim()) return std::nullopt;
  if (weight_enumerator(a) != weight_enumerator(b)) return std::nullopt;  // G-invariant
  std::vector<Word> wa = enumerate_codewords(a);
  std::vector<Word> wb = enumerate_codewords(b);
  EquivSearch s{wa, wb, a, b};
  for (int i = 0; i < 10; ++i) {
    s.inv_a[i] = column_invariant(wa, i);
    s.inv_b[i] = column_invariant(wb, i);
  }
  const bool tails = a.width == 12;
  for (bool sw : tails ? std::vector<bool>{false, true} : std::vector<bool>{false})
    for (int ts : tails ? std::vector<int>{1, -1} : std::vector<int>{1}) {
      s.swap_tail = sw;
      s.tail_sign = ts;
      if (!s.partial_consistent(0)) continue;
      if (auto g = s.dfs(0)) return g;
    }
  return std::nullopt;
}

}  // namespace tencusps
