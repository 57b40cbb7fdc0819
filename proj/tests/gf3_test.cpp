#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tencusps/gf3.hpp"

using namespace tencusps;

TEST_CASE("word arithmetic") {
  Word a(12, {1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2});
  Word b(12, {2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0});
  Word s = a + b;
  CHECK(s == Word(12, {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2}));
  CHECK(a * 2 == Word(12, {2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1}));
  CHECK(a * 3 == Word(12));
  CHECK((-a) + a == Word(12));
  CHECK(a.y1() == 1);
  CHECK(a.y2() == 2);
  CHECK(Word(10, {1, 1, 1, 0, 0, 0, 0, 0, 0, 0}).y1() == 0);
}

TEST_CASE("weight counts only the x-part") {
  CHECK(weight(Word(12, {1, 2, 0, 1, 0, 0, 0, 0, 0, 0, 1, 2})) == 3);
  CHECK(weight(Word(12)) == 0);
  CHECK(weight(Word(10, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1})) == 10);
}

TEST_CASE("rref is canonical and idempotent") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(0, 2);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Word> rows;
    for (int r = 0; r < 4; ++r) {
      Word w(12);
      for (int i = 0; i < 12; ++i) w.v[i] = static_cast<std::uint8_t>(coord(rng));
      rows.push_back(w);
    }
    Code c = rref(rows);
    CHECK(rref(c.gens) == c);
    // pivots normalized and strictly increasing
    int last_pivot = -1;
    for (const Word& g : c.gens) {
      int p = 0;
      while (p < 12 && g.v[p] == 0) ++p;
      CHECK(p < 12);
      CHECK(p > last_pivot);
      CHECK(g.v[p] == 1);
      last_pivot = p;
    }
    // shuffled generating sets give the same canonical basis
    std::vector<Word> shuffled = enumerate_codewords(c);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(rref(shuffled) == c);
  }
}

TEST_CASE("enumerate_codewords is the full span") {
  std::vector<Word> gens = {Word(10, {1, 0, 0, 0, 0, 1, 1, 1, 1, 1}),
                            Word(10, {0, 1, 0, 0, 1, 0, 1, 1, 2, 2})};
  Code c = rref(gens);
  auto words = enumerate_codewords(c);
  CHECK(words.size() == 9);
  CHECK(words[0] == Word(10));
  std::set<Word> distinct(words.begin(), words.end());
  CHECK(distinct.size() == 9);
  for (const Word& w : words) CHECK(membership(c, w));
  Word outside(10, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK_FALSE(membership(c, outside));
}

TEST_CASE("zero code") {
  Code z{12, {}};
  CHECK(z.dim() == 0);
  CHECK(enumerate_codewords(z).size() == 1);
  CHECK(membership(z, Word(12)));
  CHECK_FALSE(membership(z, Word(12, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})));
}

TEST_CASE("weight enumerator") {
  Code z{10, {}};
  WeightEnumerator we = weight_enumerator(z);
  CHECK(we.coeff[0] == 1);
  CHECK(we.total() == 1);
  CHECK(we.str() == "1");

  Code c = rref({Word(10, {1, 1, 1, 0, 0, 0, 0, 0, 0, 0})});
  we = weight_enumerator(c);
  CHECK(we.coeff[0] == 1);
  CHECK(we.coeff[3] == 2);
  CHECK(we.total() == 3);
  CHECK(we.str() == "1+2z^3");
}

TEST_CASE("matrix text format round trip") {
  std::string text =
      "# comment line\n"
      "1 0 0 0 0 1 1 1 1 1\n"
      "\n"
      "0 1 0 0 1 0 1 1 2 2  # trailing comment\n";
  auto rows = parse_matrix(text);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == Word(10, {1, 0, 0, 0, 0, 1, 1, 1, 1, 1}));
  CHECK(rows[1] == Word(10, {0, 1, 0, 0, 1, 0, 1, 1, 2, 2}));
  CHECK(parse_matrix(format_matrix(rows)) == rows);
}

TEST_CASE("parse_matrix rejects bad input") {
  CHECK_THROWS_AS(parse_matrix("1 0 3 0 0 0 0 0 0 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix("1 0 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(
      parse_matrix("1 0 0 0 0 0 0 0 0 0\n1 0 0 0 0 0 0 0 0 0 1 1\n"),
      std::invalid_argument);
}
