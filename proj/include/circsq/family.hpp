#pragma once

#include <cstddef>

#include "circsq/word.hpp"

namespace circsq {

/// Census of the distinct circular squares of (f_k), partitioned by the
/// number of "aa" occurrences inside the square text (and, for exactly two,
/// by root length).
struct FamilyCensus {
  unsigned k = 0;
  std::size_t no_aa = 0;
  std::size_t one_aa = 0;
  std::size_t two_aa_len_2k3 = 0;  // root length 2k+3
  std::size_t two_aa_len_2k5 = 0;  // root length 2k+5
  std::size_t full_length = 0;     // |uu| = 8k+16
  std::size_t total = 0;
};

/// x_k = a(ba)^{k+1} a(ba)^{k+2}; f_k = x_k x_k, |f_k| = 8k+16.
Word family_half(unsigned k);
Word family_word(unsigned k);

/// 10k + 16 - (k mod 2).
std::size_t predicted_count(unsigned k);

/// Classify every distinct circular square of (f_k). A square fitting no
/// category throws std::logic_error: it would falsify the census
/// decomposition.
FamilyCensus census(unsigned k);

}  // namespace circsq
