#include "tencusps/example72.hpp"

#include <stdexcept>

#include "tencusps/codes_table.hpp"

namespace tencusps {

namespace {

constexpr int kE = 20, kF = 21;

// A_i = -(c_i + 2 d_i)/3, A'_i = -(2 c_i + d_i)/3; rows scaled by 3.
void add_A(IMat& m, int row, int i) {
  m.at(row, 2 * (i - 1)) += -1;
  m.at(row, 2 * (i - 1) + 1) += -2;
}

void add_Aprime(IMat& m, int row, int i) {
  m.at(row, 2 * (i - 1)) += -2;
  m.at(row, 2 * (i - 1) + 1) += -1;
}

// Word of a rational class given as a row scaled by 3: x_i from
// (s_i, t_i) mod 3, tail residues from the e and f coefficients.
Word induced_word(const IMat& m, int row) {
  Word w(12);
  for (int i = 0; i < 10; ++i) {
    int s = static_cast<int>(((m.at(row, 2 * i) % 3) + 3) % 3);
    int t = static_cast<int>(((m.at(row, 2 * i + 1) % 3) + 3) % 3);
    if (s == 0 && t == 0)
      w.v[i] = 0;
    else if (s == 1 && t == 2)
      w.v[i] = 1;
    else if (s == 2 && t == 1)
      w.v[i] = 2;
    else
      throw std::logic_error("example72: class not in the discriminant group");
  }
  w.v[10] = static_cast<std::uint8_t>(((m.at(row, kE) % 3) + 3) % 3);  // alpha bar
  w.v[11] = static_cast<std::uint8_t>(((m.at(row, kF) % 3) + 3) % 3);  // beta bar
  return w;
}

}  // namespace

IMat example72_generators_times_3() {
  IMat m(28, 22);
  m.at(0, kE) = 3;  // e
  m.at(1, kF) = 3;  // f
  for (int i = 0; i < 20; ++i) m.at(2 + i, i) = 3;  // the twenty exceptional classes

  // l~_alpha = A_{3a+1} + A_{3a+2} + A_{3a+3} + e/3
  for (int a = 0; a < 3; ++a) {
    int row = 22 + a;
    for (int j = 1; j <= 3; ++j) add_A(m, row, 3 * a + j);
    m.at(row, kE) = 1;
  }
  // m~_alpha = A'_{1+a} + A'_{4+a} + A'_{7+a} + f/3
  for (int a = 0; a < 3; ++a) {
    int row = 25 + a;
    for (int j : {1, 4, 7}) add_Aprime(m, row, j + a);
    m.at(row, kF) = 1;
  }
  return m;
}

Example72Report run_example72() {
  Example72Report rep;
  IMat gens = example72_generators_times_3();
  rep.discriminant = span_discriminant(gens, 3, gram_base(3));

  std::vector<Word> words;
  for (int row = 22; row < 28; ++row) words.push_back(induced_word(gens, row));
  rep.induced = rref(words);
  rep.equivalence = codes_equivalent(rep.induced, builtin("C1"));

  rep.ok = rep.discriminant == -9 && rep.induced.dim() == 5 && rep.equivalence.has_value();
  return rep;
}

}  // namespace tencusps
