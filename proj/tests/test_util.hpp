#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "circsq/word.hpp"

namespace circsq::testutil {

// Visit all sigma^len words of one length, lexicographic order.
template <class F>
void for_all_words(std::size_t len, int sigma, F&& f) {
  if (len == 0) return;
  std::vector<Symbol> syms(len, 0);
  while (true) {
    f(Word::from_symbols(std::vector<Symbol>(syms), sigma));
    auto it = std::find_if(syms.rbegin(), syms.rend(),
                           [&](Symbol c) { return c != Symbol(sigma - 1); });
    if (it == syms.rend()) return;
    ++*it;
    std::fill(syms.rbegin(), it, Symbol(0));
  }
}

// Lengths 1..max_len.
template <class F>
void for_all_words_upto(std::size_t max_len, int sigma, F&& f) {
  for (std::size_t len = 1; len <= max_len; ++len)
    for_all_words(len, sigma, f);
}

}  // namespace circsq::testutil
