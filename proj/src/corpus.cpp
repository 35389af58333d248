#include "circsq/corpus.hpp"

#include <stdexcept>

namespace circsq {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below(0)");
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

Word random_word(std::mt19937_64& rng, std::size_t len, int sigma) {
  std::vector<Symbol> syms(len);
  for (auto& s : syms) s = static_cast<Symbol>(uniform_below(rng, sigma));
  return Word::from_symbols(std::move(syms), sigma);
}

std::vector<Word> random_corpus(const CorpusSpec& spec) {
  if (spec.len_min < 1 || spec.len_min > spec.len_max ||
      spec.sigma_min < 1 || spec.sigma_min > spec.sigma_max ||
      spec.sigma_max > kMaxAlphabet)
    throw std::invalid_argument("bad corpus spec");
  std::mt19937_64 rng(spec.seed);
  std::vector<Word> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    std::size_t len =
        spec.len_min + uniform_below(rng, spec.len_max - spec.len_min + 1);
    int sigma =
        spec.sigma_min +
        int(uniform_below(rng, std::uint64_t(spec.sigma_max - spec.sigma_min + 1)));
    out.push_back(random_word(rng, len, sigma));
  }
  return out;
}

}  // namespace circsq
