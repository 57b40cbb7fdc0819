#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "tencusps/codes_table.hpp"

using namespace tencusps;

namespace {

const std::map<std::string, std::string>& table2() {
  static const std::map<std::string, std::string> t = {
      {"C1", "1+12z^3+18z^4+36z^5+108z^6+36z^7+18z^8+14z^9"},
      {"C2", "1+8z^3+10z^4+24z^5+86z^6+40z^7+30z^8+40z^9+4z^10"},
      {"C3", "1+4z^3+8z^4+24z^5+94z^6+44z^7+30z^8+36z^9+2z^10"},
      {"C4", "1+6z^3+6z^4+18z^5+102z^6+42z^7+36z^8+26z^9+6z^10"},
      {"C5", "1+30z^4+60z^6+120z^7+20z^9+12z^10"},
      {"C6", "1+18z^4+18z^5+96z^6+36z^7+36z^8+38z^9"},
      {"C7", "1+72z^5+60z^6+90z^8+20z^9"},
  };
  return t;
}

// all subcodes of c of the given dimension, via RREF dedup
std::set<Code> subcodes_of_dim(const Code& c, int dim) {
  std::set<Code> out;
  auto words = enumerate_codewords(c);
  if (dim == 1) {
    for (const Word& w : words)
      if (!w.is_zero()) out.insert(rref({w}));
  } else if (dim == 2) {
    for (std::size_t i = 1; i < words.size(); ++i)
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        Code s = rref({words[i], words[j]});
        if (s.dim() == 2) out.insert(s);
      }
  }
  return out;
}

}  // namespace

TEST_CASE("builtin codes reproduce the printed tables") {
  for (const auto& [name, we] : table2()) {
    Code c = builtin(name);
    CHECK(c.width == 12);
    CHECK(c.dim() == 5);
    CHECK(weight_enumerator(c).str() == we);
    CHECK(weight_enumerator(c).total() == 243);
  }
  // the seven enumerators are pairwise distinct
  std::set<std::string> distinct;
  for (const auto& [name, we] : table2()) distinct.insert(we);
  CHECK(distinct.size() == 7);

  Code k = builtin("K");
  CHECK(k.width == 10);
  CHECK(k.dim() == 4);
  CHECK(weight_enumerator(k).str() == "1+60z^6+20z^9");
  for (const Word& w : enumerate_codewords(k))
    if (!w.is_zero()) CHECK(weight(w) >= 6);

  CHECK_THROWS_AS(builtin("C8"), std::invalid_argument);
}

TEST_CASE("builtin row spaces match the printed generator rows") {
  // spot-check: the printed first rows reduce into the canonical codes
  CHECK(membership(builtin("C1"), Word(12, {1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1})));
  CHECK(membership(builtin("C7"), Word(12, {0, 0, 0, 0, 1, 1, 2, 1, 2, 0, 1, 2})));
  CHECK(membership(builtin("K"), Word(10, {0, 0, 0, 1, 1, 1, 2, 0, 2, 1})));
  CHECK_FALSE(membership(builtin("C1"), Word(12, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0})));
}

TEST_CASE("predicates on builtins") {
  for (const auto& [name, we] : table2())
    CHECK(predicate_holds(SearchPredicate::Claim52, builtin(name)));
  CHECK(predicate_holds(SearchPredicate::MinWt6, builtin("K")));
  CHECK_FALSE(predicate_holds(SearchPredicate::Claim52, builtin("K")));  // width mismatch
}

TEST_CASE("hereditariness on small subcodes") {
  for (const std::string& name : {"C1", "C4", "C7"}) {
    Code c = builtin(name);
    for (int dim : {1, 2})
      for (const Code& s : subcodes_of_dim(c, dim)) {
        CHECK(is_isotropic(Ambient::A10xU3, s));
        CHECK(is_admissible(s));
        CHECK(has_claim52_property(s));
      }
  }
  for (int dim : {1, 2})
    for (const Code& s : subcodes_of_dim(builtin("K"), dim))
      CHECK(predicate_holds(SearchPredicate::MinWt6, s));
}

TEST_CASE("subcode_for_sigma") {
  Code c7 = builtin("C7");
  CHECK(subcode_for_sigma(c7, 3, 6) == Code{12, {}});
  CHECK(subcode_for_sigma(c7, 3, 1) == c7);
  for (int sigma = 1; sigma <= 6; ++sigma) {
    Code s = subcode_for_sigma(c7, 3, sigma);
    CHECK(s.dim() == 6 - sigma);
    CHECK(predicate_holds(SearchPredicate::Claim52, s));
    // nested: each selection contains the next-smaller one
    if (sigma > 1)
      for (const Word& g : s.gens)
        CHECK(membership(subcode_for_sigma(c7, 3, sigma - 1), g));
  }
  Code k = builtin("K");
  Code k3 = subcode_for_sigma(k, 1, 3);
  CHECK(k3.dim() == 2);
  for (const Word& w : enumerate_codewords(k3))
    if (!w.is_zero()) CHECK(weight(w) >= 6);
  CHECK_THROWS_AS(subcode_for_sigma(c7, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(subcode_for_sigma(c7, 3, 7), std::invalid_argument);
  CHECK_THROWS_AS(subcode_for_sigma(k, 1, 6), std::invalid_argument);
  CHECK_THROWS_AS(subcode_for_sigma(k, 2, 1), std::invalid_argument);
}

TEST_CASE("random_search basics") {
  CHECK(random_search(Ambient::A10xU3, 0, SearchPredicate::Claim52, {0, 1, 0}) ==
        std::vector<Code>{Code{12, {}}});

  SearchBudget b{42, 300, 0};
  auto found = random_search(Ambient::A10xU3, 5, SearchPredicate::Claim52, b);
  CHECK_FALSE(found.empty());
  for (const Code& c : found) {
    CHECK(c.dim() == 5);
    CHECK(predicate_holds(SearchPredicate::Claim52, c));
  }
  // pairwise inequivalent
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = i + 1; j < found.size(); ++j)
      CHECK_FALSE(codes_equivalent(found[i], found[j]).has_value());
  // deterministic for a fixed seed
  CHECK(random_search(Ambient::A10xU3, 5, SearchPredicate::Claim52, b) == found);

  auto k = random_search(Ambient::A10, 4, SearchPredicate::MinWt6, {1, 200, 1});
  REQUIRE(k.size() == 1);
  CHECK(weight_enumerator(k[0]).str() == "1+60z^6+20z^9");
  CHECK(codes_equivalent(k[0], builtin("K")).has_value());
}
