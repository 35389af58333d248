#include "circsq/family.hpp"

#include <stdexcept>
#include <string>

#include "circsq/squares.hpp"

namespace circsq {

namespace {

constexpr Symbol A = 0, B = 1;

void append_a_ba_pow(std::vector<Symbol>& out, unsigned reps) {
  out.push_back(A);
  for (unsigned i = 0; i < reps; ++i) {
    out.push_back(B);
    out.push_back(A);
  }
}

std::size_t count_aa_inside(const Word& text) {
  std::size_t c = 0;
  for (std::size_t i = 0; i + 1 < text.size(); ++i)
    if (text[i] == A && text[i + 1] == A) ++c;
  return c;
}

}  // namespace

Word family_half(unsigned k) {
  std::vector<Symbol> syms;
  syms.reserve(4 * std::size_t(k) + 8);
  append_a_ba_pow(syms, k + 1);
  append_a_ba_pow(syms, k + 2);
  return Word::from_symbols(std::move(syms), 2);
}

Word family_word(unsigned k) {
  std::vector<Symbol> syms;
  syms.reserve(8 * std::size_t(k) + 16);
  for (int rep = 0; rep < 2; ++rep) {
    append_a_ba_pow(syms, k + 1);
    append_a_ba_pow(syms, k + 2);
  }
  return Word::from_symbols(std::move(syms), 2);
}

std::size_t predicted_count(unsigned k) {
  return 10 * std::size_t(k) + 16 - (k % 2);
}

FamilyCensus census(unsigned k) {
  FamilyCensus c;
  c.k = k;
  const std::size_t n = 8 * std::size_t(k) + 16;
  for (const auto& sq : distinct_circular_squares(CircularWord(family_word(k)))) {
    const std::size_t aa = count_aa_inside(sq.text);
    const std::size_t root_len = sq.root.size();
    if (aa == 0) {
      ++c.no_aa;
    } else if (aa == 1) {
      ++c.one_aa;
    } else if (aa == 2 && root_len == 2 * std::size_t(k) + 3) {
      ++c.two_aa_len_2k3;
    } else if (aa == 2 && root_len == 2 * std::size_t(k) + 5) {
      ++c.two_aa_len_2k5;
    } else if (aa >= 3 && sq.text.size() == n) {
      ++c.full_length;
    } else {
      throw std::logic_error("census: square fits no category at k=" +
                             std::to_string(k) + ": " + sq.text.text());
    }
    ++c.total;
  }
  return c;
}

}  // namespace circsq
