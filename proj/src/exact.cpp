#include "tencusps/exact.hpp"

#include <boost/rational.hpp>
#include <numeric>
#include <stdexcept>

namespace tencusps {

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::transposed() const {
  IMat t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

IMat IMat::operator*(const IMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("IMat*: shape mismatch");
  IMat p(rows, o.cols);
  for (int r = 0; r < rows; ++r)
    for (int k = 0; k < cols; ++k) {
      if (at(r, k) == 0) continue;
      for (int c = 0; c < o.cols; ++c) p.at(r, c) += at(r, k) * o.at(k, c);
    }
  return p;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IMat hnf(const IMat& m) {
  IMat w = m;
  int r = 0;
  for (int col = 0; col < w.cols && r < w.rows; ++col) {
    // gcd elimination below row r in this column
    for (;;) {
      int best = -1;
      for (int i = r; i < w.rows; ++i)
        if (w.at(i, col) != 0 && (best < 0 || abs(w.at(i, col)) < abs(w.at(best, col))))
          best = i;
      if (best < 0) break;
      if (best != r)
        for (int c = 0; c < w.cols; ++c) std::swap(w.at(r, c), w.at(best, c));
      bool clean = true;
      for (int i = r + 1; i < w.rows; ++i) {
        if (w.at(i, col) == 0) continue;
        Int q = floor_div(w.at(i, col), w.at(r, col));
        for (int c = col; c < w.cols; ++c) w.at(i, c) -= q * w.at(r, c);
        if (w.at(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (w.at(r, col) == 0) continue;
    if (w.at(r, col) < 0)
      for (int c = 0; c < w.cols; ++c) w.at(r, c) = -w.at(r, c);
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(w.at(i, col), w.at(r, col));
      if (q != 0)
        for (int c = 0; c < w.cols; ++c) w.at(i, c) -= q * w.at(r, c);
    }
    ++r;
  }
  IMat out(r, w.cols);
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < w.cols; ++c) out.at(i, c) = w.at(i, c);
  return out;
}

std::vector<Int> smith_invariants(const IMat& m) {
  IMat w = m;
  int n = std::min(w.rows, w.cols);
  std::vector<Int> diag;
  for (int t = 0; t < n; ++t) {
    bool cleared = false;
    while (!cleared) {
      // move the minimal-|entry| of the trailing submatrix to (t, t);
      // each round either clears row+column t or strictly shrinks the pivot
      int pr = -1, pc = -1;
      for (int i = t; i < w.rows; ++i)
        for (int j = t; j < w.cols; ++j)
          if (w.at(i, j) != 0 &&
              (pr < 0 || abs(w.at(i, j)) < abs(w.at(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) break;
      for (int c = 0; c < w.cols; ++c) std::swap(w.at(t, c), w.at(pr, c));
      for (int r = 0; r < w.rows; ++r) std::swap(w.at(r, t), w.at(r, pc));
      if (w.at(t, t) < 0)
        for (int c = 0; c < w.cols; ++c) w.at(t, c) = -w.at(t, c);
      cleared = true;
      for (int i = t + 1; i < w.rows; ++i) {
        if (w.at(i, t) == 0) continue;
        Int q = floor_div(w.at(i, t), w.at(t, t));
        for (int c = t; c < w.cols; ++c) w.at(i, c) -= q * w.at(t, c);
        if (w.at(i, t) != 0) cleared = false;
      }
      for (int j = t + 1; j < w.cols; ++j) {
        if (w.at(t, j) == 0) continue;
        Int q = floor_div(w.at(t, j), w.at(t, t));
        for (int r = t; r < w.rows; ++r) w.at(r, j) -= q * w.at(r, t);
        if (w.at(t, j) != 0) cleared = false;
      }
    }
    if (w.at(t, t) == 0) break;
    diag.push_back(abs(w.at(t, t)));
  }
  // enforce the divisibility chain
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Int g = gcd(diag[i], diag[j]);
      if (g != diag[i]) {
        Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
  std::vector<Int> out;
  for (const Int& d : diag)
    if (d > 1) out.push_back(d);
  return out;
}

Int det(const IMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: square matrix required");
  int n = m.rows;
  if (n == 0) return 1;
  IMat w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(piv, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

std::pair<int, int> signature_of_symmetric(const IMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("signature: square matrix required");
  using Rat = boost::rational<Int>;
  int n = m.rows;
  std::vector<Rat> w(static_cast<std::size_t>(n) * n);
  auto at = [&](int r, int c) -> Rat& { return w[static_cast<std::size_t>(r) * n + c]; };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) at(r, c) = Rat(m.at(r, c));
  // compare via numerators: mixed rational/int comparisons recurse with cpp_int
  auto is_zero = [](const Rat& r) { return r.numerator().is_zero(); };
  int pos = 0, neg = 0;
  for (int k = 0; k < n; ++k) {
    if (is_zero(at(k, k))) {
      // symmetric congruence repair: swap in a nonzero diagonal entry, or,
      // if the whole trailing diagonal vanishes, add row/col j with
      // at(j,k) != 0 (the new pivot is then 2*at(j,k) != 0)
      int j = -1;
      for (int i = k + 1; i < n; ++i)
        if (!is_zero(at(i, i))) { j = i; break; }
      if (j >= 0) {
        for (int c = 0; c < n; ++c) std::swap(at(k, c), at(j, c));
        for (int r = 0; r < n; ++r) std::swap(at(r, k), at(r, j));
      } else {
        for (int i = k + 1; i < n; ++i)
          if (!is_zero(at(i, k))) { j = i; break; }
        if (j < 0) throw std::invalid_argument("signature: degenerate form");
        for (int c = k; c < n; ++c) at(k, c) += at(j, c);
        for (int r = k; r < n; ++r) at(r, k) += at(r, j);
      }
    }
    Rat piv = at(k, k);
    (piv.numerator() > 0 ? pos : neg)++;
    for (int i = k + 1; i < n; ++i) {
      Rat f = at(i, k) / piv;
      if (is_zero(f)) continue;
      for (int c = k; c < n; ++c) at(i, c) -= f * at(k, c);
    }
    for (int c = k + 1; c < n; ++c) at(k, c) = 0;
    // re-symmetrize the trailing block from the row operations
    for (int i = k + 1; i < n; ++i) at(i, k) = 0;
  }
  return {pos, neg};
}

}  // namespace tencusps
