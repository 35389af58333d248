#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "circsq/word.hpp"

namespace circsq {

/// Uniform integer in [0, n) by rejection sampling. std::mt19937_64 is fully
/// specified by the standard; the library's distributions are not, so seeded
/// corpora go through this to stay reproducible across toolchains.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

Word random_word(std::mt19937_64& rng, std::size_t len, int sigma);

struct CorpusSpec {
  std::size_t count = 0;
  std::size_t len_min = 1;
  std::size_t len_max = 1;
  int sigma_min = 2;
  int sigma_max = 2;
  std::uint64_t seed = 0;
};

/// Deterministic corpus: lengths and alphabet sizes uniform over the given
/// ranges, symbols uniform, one sequential mt19937_64 stream.
std::vector<Word> random_corpus(const CorpusSpec& spec);

}  // namespace circsq
