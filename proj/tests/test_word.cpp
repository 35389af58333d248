#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "circsq/corpus.hpp"
#include "circsq/word.hpp"
#include "test_util.hpp"

using namespace circsq;
using testutil::for_all_words;
using testutil::for_all_words_upto;

namespace {

// quadratic reference: least p with w[i] == w[i+p] for all i
std::size_t period_reference(const Word& w) {
  for (std::size_t p = 1; p < w.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < w.size(); ++i)
      if (w[i] != w[i + p]) {
        ok = false;
        break;
      }
    if (ok) return p;
  }
  return w.size();
}

// definition-level primitivity: no divisor d < n with w = (w[0..d))^{n/d}
bool primitive_reference(const Word& w) {
  for (std::size_t d = 1; d < w.size(); ++d) {
    if (w.size() % d) continue;
    bool power = true;
    for (std::size_t i = d; i < w.size() && power; ++i)
      if (w[i] != w[i % d]) power = false;
    if (power) return false;
  }
  return true;
}

Word min_rotation_reference(const Word& w) {
  Word best = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word r = rotate(w, i);
    if (r < best) best = r;
  }
  return best;
}

}  // namespace

TEST_CASE("make_word basics") {
  CHECK(Word::from_text("abab").size() == 4);
  CHECK(Word::from_text("").size() == 0);
  const char* f1 = "ababaabababaababaabababa";
  CHECK(Word::from_text(f1).size() == 24);
  CHECK(Word::from_text(f1).text() == f1);
  CHECK(Word::from_text("abc").alphabet_size() == 3);
  CHECK_THROWS_AS(Word::from_text("aBc"), std::invalid_argument);
  CHECK_THROWS_AS(Word::from_text("ab1"), std::invalid_argument);
  CHECK_THROWS_AS(Word::from_text("abc", 2), std::invalid_argument);
  CHECK(Word::from_text("ab", 4).alphabet_size() == 4);
}

TEST_CASE("word ordering and equality") {
  CHECK(Word::from_text("aa") < Word::from_text("aaaa"));
  CHECK(Word::from_text("ab") < Word::from_text("b"));
  CHECK(Word::from_text("ab", 2) == Word::from_text("ab", 3));  // element-wise
}

TEST_CASE("rotate") {
  Word abc = Word::from_text("abc");
  CHECK(rotate(abc, 0) == abc);
  CHECK(rotate(abc, 1).text() == "bca");
  Word f1 = Word::from_text("ababaabababaababaabababa");
  CHECK(rotate(f1, 12) == f1);  // f_1 = x_1 x_1
  CHECK_THROWS_AS(rotate(abc, 3), std::out_of_range);
  CHECK_THROWS_AS(rotate(Word::from_text(""), 0), std::out_of_range);

  std::mt19937_64 rng(1);
  for (int it = 0; it < 200; ++it) {
    Word w = random_word(rng, 1 + uniform_below(rng, 30), 3);
    std::size_t i = uniform_below(rng, w.size());
    std::size_t j = uniform_below(rng, w.size());
    CHECK(rotate(rotate(w, i), j) == rotate(w, (i + j) % w.size()));
  }
}

TEST_CASE("period") {
  CHECK(period(Word::from_text("ababab")) == 2);
  CHECK(period(Word::from_text("abaab")) == 3);
  CHECK(period(Word::from_text("abc")) == 3);
  CHECK_THROWS_AS(period(Word::from_text("")), std::invalid_argument);

  for_all_words_upto(12, 2, [](const Word& w) {
    REQUIRE(period(w) == period_reference(w));
  });
  for_all_words_upto(10, 3, [](const Word& w) {
    REQUIRE(period(w) == period_reference(w));
  });
}

TEST_CASE("is_aperiodic") {
  CHECK_FALSE(is_aperiodic(Word::from_text("ababab")));
  CHECK(is_aperiodic(Word::from_text("abaab")));  // 3 > 5/2
  CHECK_FALSE(is_aperiodic(Word::from_text("aa")));
  CHECK(is_aperiodic(Word::from_text("a")));
}

TEST_CASE("is_primitive") {
  CHECK_FALSE(is_primitive(Word::from_text("abab")));
  CHECK(is_primitive(Word::from_text("aba")));
  CHECK(is_primitive(Word::from_text("ababaabababa")));  // x_1
  CHECK_THROWS_AS(is_primitive(Word::from_text("")), std::invalid_argument);

  for_all_words_upto(12, 2, [](const Word& w) {
    REQUIRE(is_primitive(w) == primitive_reference(w));
  });
  for_all_words_upto(12, 3, [](const Word& w) {
    REQUIRE(is_primitive(w) == primitive_reference(w));
  });
}

TEST_CASE("canonical_rotation") {
  CHECK(canonical_rotation(Word::from_text("bab")).text() == "abb");
  CHECK(canonical_rotation(Word::from_text("aaaa")).text() == "aaaa");
  CHECK_THROWS_AS(canonical_rotation(Word::from_text("")), std::invalid_argument);

  auto check_word = [](const Word& w) {
    Word c = canonical_rotation(w);
    REQUIRE(c == min_rotation_reference(w));
    REQUIRE(canonical_rotation(c) == c);  // idempotent
    // constant on the conjugacy class
    for (std::size_t i = 1; i < w.size(); ++i)
      REQUIRE(canonical_rotation(rotate(w, i)) == c);
  };
  for_all_words_upto(12, 2, check_word);
  for_all_words_upto(8, 3, check_word);
  std::mt19937_64 rng(2);
  for (int it = 0; it < 100; ++it)
    check_word(random_word(rng, 1 + uniform_below(rng, 60), 4));
}

TEST_CASE("fine_wilf examples and errors") {
  CHECK(fine_wilf_holds(Word::from_text("ababab"), 2, 4));
  CHECK(fine_wilf_holds(Word::from_text("aaaa"), 2, 3));
  // 2 is not a period of "abab"... it is; 3 is not a period of "abcabc"
  CHECK_THROWS_AS(fine_wilf_holds(Word::from_text("abcabc"), 3, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(fine_wilf_holds(Word::from_text("ab"), 0, 1),
                  std::invalid_argument);
}

TEST_CASE("fine_wilf exhaustive, binary length <= 14") {
  for_all_words_upto(14, 2, [](const Word& w) {
    std::vector<std::size_t> periods;
    for (std::size_t p = 1; p <= w.size(); ++p)
      if (is_period_of(w, p)) periods.push_back(p);
    for (std::size_t p : periods)
      for (std::size_t q : periods)
        if (p + q <= w.size() + std::gcd(p, q))
          REQUIRE(fine_wilf_holds(w, p, q));
  });
}

TEST_CASE("circular word representative and equality") {
  CircularWord a(Word::from_text("bab"));
  CHECK(a.representative().text() == "abb");
  CHECK(a.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(CircularWord(rotate(Word::from_text("bab"), i)) == a);
  CHECK_FALSE(CircularWord(Word::from_text("aab")) == a);
  CHECK_THROWS_AS(CircularWord(Word::from_text("")), std::invalid_argument);
}

TEST_CASE("reversed and relabeled") {
  Word w = Word::from_text("aabc");
  CHECK(w.reversed().text() == "cbaa");
  std::vector<Symbol> perm{2, 1, 0};
  CHECK(w.relabeled(perm).text() == "ccba");
}
