#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circsq/bounds.hpp"
#include "circsq/corpus.hpp"
#include "circsq/family.hpp"
#include "test_util.hpp"

using namespace circsq;
using testutil::for_all_words;
using testutil::for_all_words_upto;

TEST_CASE("rational arithmetic") {
  CHECK(Rational::of(50, 48) == Rational{25, 24});
  CHECK(Rational::of(-2, -4) == Rational{1, 2});
  CHECK(Rational::of(2, -4) == Rational{-1, 2});
  CHECK(Rational::of(0, 7) == Rational{0, 1});
  CHECK(Rational::of(5, 6) - Rational::of(1, 3) == Rational{1, 2});
  CHECK(Rational{1, 3} < Rational{1, 2});
  CHECK(Rational{7, 2} > Rational{10, 3});
  CHECK(Rational{25, 24}.str() == "25/24");
  CHECK_THROWS_AS(Rational::of(1, 0), std::invalid_argument);
}

TEST_CASE("two-rightmost check") {
  CHECK(check_two_rightmost(Word::from_text("aaaa")));
  CHECK(check_two_rightmost(Word::from_text("abc")));
  for_all_words_upto(13, 2,
                     [](const Word& w) { REQUIRE(check_two_rightmost(w)); });
}

TEST_CASE("quarter lemma report fields") {
  // periodic s branch is vacuous
  Word w = Word::from_text("abababab");
  auto rep = check_quarter_lemma(w);
  CHECK(rep.s_begin == 1);
  CHECK(rep.s_end == 3);
  CHECK(rep.s.text() == "bab");
  CHECK(rep.quarter_starts_end == 2);
  CHECK(rep.holds());

  auto rep_f1 = check_quarter_lemma(family_word(1));
  CHECK(rep_f1.s.size() == 12 - 5);  // slice [5..11] of a 24-long word
  CHECK(rep_f1.holds());

  CHECK_THROWS_AS(check_quarter_lemma(Word::from_text("abcd")),
                  std::invalid_argument);
}

TEST_CASE("quarter lemma holds exhaustively, binary 8..13") {
  for (std::size_t len = 8; len <= 13; ++len)
    for_all_words(len, 2, [](const Word& w) {
      auto rep = check_quarter_lemma(w);
      REQUIRE(rep.uniform == (rep.first_quarter_lengths.size() <= 1));
      REQUIRE(rep.holds());
    });
}

TEST_CASE("period extension check") {
  CHECK(check_extend_period(Word::from_text("aaa"), 0, 0));
  CHECK(check_extend_period(Word::from_text("ab"), 1, 0));  // both aperiodic
  for_all_words_upto(12, 2, [](const Word& w) {
    for (Symbol a = 0; a < 2; ++a)
      for (Symbol b = 0; b < 2; ++b) REQUIRE(check_extend_period(w, a, b));
  });
}

TEST_CASE("FS bound on hand inputs") {
  CHECK_THROWS_AS(check_fs_bound(Word::from_text("abcabcabc")),
                  std::invalid_argument);  // |x| = 9

  // square-free ternary word: vacuous
  Word sf = Word::from_text("abacabcacbab");
  REQUIRE(distinct_squares_oracle(sf).empty());
  auto rep = check_fs_bound(sf);
  CHECK(rep.fs_count == 0);
  CHECK_FALSE(rep.leftmost_u_len.has_value());
  CHECK(rep.holds);

  // golden FS-double-square word, |x| = 12 >= 10
  auto rep2 = check_fs_bound(Word::from_text("aaabaababaab"));
  CHECK(rep2.fs_count == 1);
  REQUIRE(rep2.leftmost_u_len.has_value());
  CHECK(*rep2.leftmost_u_len == 3);
  CHECK(rep2.bound == Rational{9, 1});  // 5/6*12 - 1/3*3
  CHECK(rep2.holds);
}

TEST_CASE("FS bound holds exhaustively, binary 10..13") {
  for (std::size_t len = 10; len <= 13; ++len)
    for_all_words(len, 2,
                  [](const Word& w) { REQUIRE(check_fs_bound(w).holds); });
}

TEST_CASE("density report") {
  auto rep = density_report(CircularWord(family_word(1)));
  CHECK(rep.n == 24);
  CHECK(rep.count == 25);
  CHECK(rep.density == Rational{25, 24});
  CHECK(rep.below_314);
  CHECK_FALSE(rep.meets_125);

  auto rep2 = density_report(CircularWord(Word::from_text("ab")));
  CHECK(rep2.count == 0);
  CHECK(rep2.density == Rational{0, 1});
  CHECK(rep2.below_314);

  auto rep3 = density_report(CircularWord(family_word(5)));
  CHECK(rep3.count == 65);
  CHECK(rep3.density == Rational{65, 56});
  CHECK(rep3.below_314);
}

TEST_CASE("lemma checks on random corpora") {
  auto corpus = random_corpus({.count = 400,
                               .len_min = 8,
                               .len_max = 300,
                               .sigma_min = 2,
                               .sigma_max = 4,
                               .seed = 3});
  std::mt19937_64 rng(4);
  for (const auto& w : corpus) {
    REQUIRE(check_two_rightmost(w));
    REQUIRE(check_quarter_lemma(w).holds());
    if (w.size() >= 10) REQUIRE(check_fs_bound(w).holds);
    Symbol a = Symbol(uniform_below(rng, w.alphabet_size()));
    Symbol b = Symbol(uniform_below(rng, w.alphabet_size()));
    REQUIRE(check_extend_period(w, a, b));
    auto dens = density_report(CircularWord(w));
    REQUIRE(dens.below_314);
  }
}
