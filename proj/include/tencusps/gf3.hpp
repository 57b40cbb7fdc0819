// Exact linear algebra over F3: words, codes in canonical RREF,
// codeword enumeration, weight enumerators.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace tencusps {

constexpr int kMaxWidth = 12;
constexpr int kXWidth = 10;  // weight counts only these leading coordinates

// Element of F3^n, n in {10, 12}. Coordinates 0..9 are the x-part; for
// width 12 the last two slots carry the U(3) tail (y1, y2).
struct Word {
  int width = kXWidth;
  std::array<std::uint8_t, kMaxWidth> v{};

  Word() = default;
  Word(int n, std::initializer_list<int> coords);
  explicit Word(int n) : width(n) {}

  std::uint8_t operator[](int i) const { return v[i]; }
  std::uint8_t& operator[](int i) { return v[i]; }

  bool is_zero() const;
  Word operator+(const Word& o) const;
  Word operator*(int scalar) const;  // scalar mod 3
  Word operator-() const { return *this * 2; }
  bool operator==(const Word& o) const = default;
  auto operator<=>(const Word& o) const = default;

  int y1() const { return width == 12 ? v[10] : 0; }
  int y2() const { return width == 12 ? v[11] : 0; }

  std::string str() const;
};

// Hamming weight of the first x_width coordinates (tail excluded).
int weight(const Word& w, int x_width = kXWidth);

// Linear subspace of F3^n held as the unique reduced-row-echelon basis,
// pivot columns strictly increasing, pivots normalized to 1.
struct Code {
  int width = kXWidth;
  std::vector<Word> gens;  // RREF rows; empty for the zero code

  int dim() const { return static_cast<int>(gens.size()); }
  bool operator==(const Code& o) const = default;
  auto operator<=>(const Code& o) const = default;
};

// Canonical RREF basis of the row span. Throws on width mismatch.
Code rref(const std::vector<Word>& rows);

// All 3^dim codewords in a deterministic order (lexicographic in the
// coefficient vector over the RREF generators).
std::vector<Word> enumerate_codewords(const Code& c);

// Reduce against the RREF basis; true iff the word lies in the row span.
bool membership(const Code& c, const Word& w);

// Coefficients of sum z^wt(x) over codewords, wt over the x-part only.
struct WeightEnumerator {
  std::array<long, kXWidth + 1> coeff{};
  bool operator==(const WeightEnumerator& o) const = default;
  long total() const;
  std::string str() const;  // e.g. "1+72z^5+60z^6+90z^8+20z^9"
};

WeightEnumerator weight_enumerator(const Code& c);

// Text matrix format: one row per line, single digits in {0,1,2}
// separated by spaces; blank lines and '#' comments ignored.
std::vector<Word> parse_matrix(const std::string& text);
std::string format_matrix(const std::vector<Word>& rows);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace tencusps
