#include <doctest.h>

#include "ncprob/rng.hpp"
#include "ncprob/words.hpp"

using namespace ncprob;

TEST_CASE("word classification") {
  CHECK(classify_word(Word("1*1*")) == WordClass::AlternatingOneStar);
  CHECK(classify_word(Word("*1*1")) == WordClass::AlternatingStarOne);
  CHECK(classify_word(Word("1**1")) == WordClass::MixedAlternating);
  CHECK(classify_word(Word("11")) == WordClass::Other);
  CHECK(classify_word(Word("1*1")) == WordClass::Other);
  CHECK(classify_word(Word("1")) == WordClass::Other);
  CHECK_THROWS_WITH_AS(classify_word(Word("")), "empty word has no class", std::invalid_argument);
  CHECK_THROWS_AS(Word("1x"), std::invalid_argument);
}

TEST_CASE("canonical factorization") {
  // the worked 16-letter example
  auto f = canonical_factorization(Word("1*1*1**1*11**1*1"));
  REQUIRE(f.size() == 4);
  CHECK(f[0] == Word("1*1*1*"));
  CHECK(f[1] == Word("*1*1"));
  CHECK(f[2] == Word("1*"));
  CHECK(f[3] == Word("*1*1"));

  CHECK(canonical_factorization(Word("1*")) == std::vector<Word>{Word("1*")});
  auto g = canonical_factorization(Word("*11*"));
  REQUIRE(g.size() == 2);
  CHECK(g[0] == Word("*1"));
  CHECK(g[1] == Word("1*"));

  CHECK_THROWS_AS(canonical_factorization(Word("11")), std::invalid_argument);
  CHECK_THROWS_AS(canonical_factorization(Word("1*1")), std::invalid_argument);
}

TEST_CASE("canonical factorization properties on random words") {
  RandomSource rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = rng.mixed_alternating_word(rng.integer(1, 10));  // length up to 20
    auto factors = canonical_factorization(w);
    Word joined;
    for (const auto& f : factors) {
      CHECK(is_alternating(f));
      joined = joined.concat(f);
    }
    CHECK(joined == w);
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      CHECK(factors[i].at(0) != factors[i + 1].at(0));
    }
  }
}

TEST_CASE("closure of alternating words under compatible concatenation") {
  Word v = Word::alternating(Letter::One, 2);  // ends with *
  Word w = Word::alternating(Letter::One, 3);  // starts with 1
  CHECK(classify_word(v.concat(w)) == WordClass::AlternatingOneStar);
}

TEST_CASE("word restriction") {
  CHECK(restrict_word(Word("1**1*"), {1, 4, 5}) == Word("11*"));
  CHECK(restrict_word(Word("1*"), {1, 2}) == Word("1*"));
  CHECK(restrict_word(Word("1*1"), {2}) == Word("*"));
  CHECK_THROWS_AS(restrict_word(Word("1*"), {3}), std::invalid_argument);
  CHECK_THROWS_AS(restrict_word(Word("1*"), {}), std::invalid_argument);

  RandomSource rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Word w = rng.word(rng.integer(1, 12));
    std::vector<int> all;
    for (int i = 1; i <= static_cast<int>(w.size()); ++i) all.push_back(i);
    CHECK(restrict_word(w, all) == w);
  }
}

TEST_CASE("word enumeration and ordering") {
  auto words = all_words(2);
  REQUIRE(words.size() == 4);
  CHECK(words[0] == Word("11"));
  CHECK(words[3] == Word("**"));
  CHECK(Word("1") < Word("11"));  // graded order
  CHECK(Word("*1") < Word("1*"));  // within a grade: byte order, '*' < '1'
}
