#include "tencusps/gf3.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace tencusps {

Word::Word(int n, std::initializer_list<int> coords) : width(n) {
  if (static_cast<int>(coords.size()) != n)
    throw std::invalid_argument("Word: coordinate count != width");
  int i = 0;
  for (int c : coords) {
    if (c < 0 || c > 2) throw std::invalid_argument("Word: coordinate not in {0,1,2}");
    v[i++] = static_cast<std::uint8_t>(c);
  }
}

bool Word::is_zero() const {
  for (int i = 0; i < width; ++i)
    if (v[i]) return false;
  return true;
}

Word Word::operator+(const Word& o) const {
  if (width != o.width) throw std::invalid_argument("Word+: width mismatch");
  Word r(width);
  for (int i = 0; i < width; ++i) r.v[i] = static_cast<std::uint8_t>((v[i] + o.v[i]) % 3);
  return r;
}

Word Word::operator*(int scalar) const {
  int s = ((scalar % 3) + 3) % 3;
  Word r(width);
  for (int i = 0; i < width; ++i) r.v[i] = static_cast<std::uint8_t>((v[i] * s) % 3);
  return r;
}

std::string Word::str() const {
  std::string s;
  for (int i = 0; i < width; ++i) {
    if (i) s += ' ';
    s += static_cast<char>('0' + v[i]);
  }
  return s;
}

int weight(const Word& w, int x_width) {
  if (x_width > w.width) throw std::invalid_argument("weight: x_width > width");
  int n = 0;
  for (int i = 0; i < x_width; ++i)
    if (w.v[i]) ++n;
  return n;
}

namespace {

// inverse in F3: 1->1, 2->2
inline int inv3(int a) { return a; }

}  // namespace

Code rref(const std::vector<Word>& rows) {
  int width = rows.empty() ? kXWidth : rows.front().width;
  std::vector<Word> m;
  for (const Word& r : rows) {
    if (r.width != width) throw std::invalid_argument("rref: width mismatch");
    m.push_back(r);
  }
  int rank = 0;
  for (int col = 0; col < width && rank < static_cast<int>(m.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r].v[col]) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    m[rank] = m[rank] * inv3(m[rank].v[col]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r != rank && m[r].v[col])
        m[r] = m[r] + m[rank] * (3 - m[r].v[col]);
    }
    ++rank;
  }
  m.resize(rank, Word(width));
  Code c;
  c.width = width;
  c.gens = std::move(m);
  return c;
}

std::vector<Word> enumerate_codewords(const Code& c) {
  if (c.dim() > 12) throw std::invalid_argument("enumerate_codewords: dim too large");
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(1) << c.dim());  // >= 3^k not needed; grows
  Word zero(c.width);
  out.push_back(zero);
  for (const Word& g : c.gens) {
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(out[i] + g);
      out.push_back(out[i] + g * 2);
    }
  }
  return out;
}

bool membership(const Code& c, const Word& w) {
  if (w.width != c.width) throw std::invalid_argument("membership: width mismatch");
  Word r = w;
  for (const Word& g : c.gens) {
    int piv = 0;
    while (piv < c.width && !g.v[piv]) ++piv;
    if (piv < c.width && r.v[piv])
      r = r + g * (3 - r.v[piv]);
  }
  return r.is_zero();
}

long WeightEnumerator::total() const {
  long s = 0;
  for (long c : coeff) s += c;
  return s;
}

std::string WeightEnumerator::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= kXWidth; ++i) {
    if (!coeff[i]) continue;
    if (!first) os << "+";
    if (i == 0) os << coeff[i];
    else {
      if (coeff[i] != 1) os << coeff[i];
      os << "z^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

WeightEnumerator weight_enumerator(const Code& c) {
  WeightEnumerator we;
  for (const Word& w : enumerate_codewords(c)) ++we.coeff[weight(w)];
  return we;
}

std::vector<Word> parse_matrix(const std::string& text) {
  std::vector<Word> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::vector<int> digits;
    int d;
    while (ls >> d) digits.push_back(d);
    if (digits.empty()) continue;
    if (digits.size() != 10 && digits.size() != 12)
      throw std::invalid_argument("parse_matrix: row width must be 10 or 12");
    Word w(static_cast<int>(digits.size()));
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i] < 0 || digits[i] > 2)
        throw std::invalid_argument("parse_matrix: entry not in {0,1,2}");
      w.v[i] = static_cast<std::uint8_t>(digits[i]);
    }
    rows.push_back(w);
  }
  if (!rows.empty())
    for (const Word& w : rows)
      if (w.width != rows.front().width)
        throw std::invalid_argument("parse_matrix: inconsistent row widths");
  return rows;
}

std::string format_matrix(const std::vector<Word>& rows) {
  std::string out;
  for (const Word& w : rows) {
    out += w.str();
    out += '\n';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

}  // namespace tencusps
