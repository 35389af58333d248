#include "circsq/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace circsq {

namespace {

int infer_sigma(std::span<const Symbol> syms) {
  int hi = 0;
  for (Symbol s : syms) hi = std::max(hi, int(s) + 1);
  return std::max(hi, 1);
}

// Border (KMP failure) array of s: b[i] = length of the longest proper
// border of s[0..i].
std::vector<std::size_t> border_array(std::span<const Symbol> s) {
  std::vector<std::size_t> b(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = b[i - 1];
    while (k > 0 && s[i] != s[k]) k = b[k - 1];
    if (s[i] == s[k]) ++k;
    b[i] = k;
  }
  return b;
}

}  // namespace

Word Word::from_text(std::string_view text, int sigma) {
  std::vector<Symbol> syms;
  syms.reserve(text.size());
  for (char c : text) {
    if (c < 'a' || c > 'z')
      throw std::invalid_argument("word characters must be 'a'..'z'");
    syms.push_back(static_cast<Symbol>(c - 'a'));
  }
  return from_symbols(std::move(syms), sigma);
}

Word Word::from_symbols(std::vector<Symbol> symbols, int sigma) {
  if (sigma == 0) sigma = infer_sigma(symbols);
  if (sigma < 1 || sigma > kMaxAlphabet)
    throw std::invalid_argument("alphabet size must be in 1..26");
  for (Symbol s : symbols)
    if (int(s) >= sigma)
      throw std::invalid_argument("symbol outside the declared alphabet");
  Word w;
  w.symbols_ = std::move(symbols);
  w.sigma_ = sigma;
  return w;
}

std::string Word::text() const {
  std::string out(symbols_.size(), 'a');
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    out[i] = static_cast<char>('a' + symbols_[i]);
  return out;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos)
    throw std::out_of_range("slice out of range");
  return from_symbols(
      std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len),
      sigma_);
}

Word Word::reversed() const {
  std::vector<Symbol> syms(symbols_.rbegin(), symbols_.rend());
  return from_symbols(std::move(syms), sigma_);
}

Word Word::relabeled(std::span<const Symbol> perm) const {
  if (perm.size() < static_cast<std::size_t>(sigma_))
    throw std::invalid_argument("permutation does not cover the alphabet");
  std::vector<Symbol> syms(symbols_.size());
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    syms[i] = perm[symbols_[i]];
  return from_symbols(std::move(syms), sigma_);
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  return std::lexicographical_compare_three_way(
      a.symbols_.begin(), a.symbols_.end(), b.symbols_.begin(),
      b.symbols_.end());
}

Word rotate(const Word& w, std::size_t i) {
  if (i >= w.size()) throw std::out_of_range("rotation index out of range");
  std::vector<Symbol> syms;
  syms.reserve(w.size());
  auto s = w.symbols();
  syms.insert(syms.end(), s.begin() + i, s.end());
  syms.insert(syms.end(), s.begin(), s.begin() + i);
  return Word::from_symbols(std::move(syms), w.alphabet_size());
}

std::size_t period(const Word& w) {
  if (w.empty()) throw std::invalid_argument("period of the empty word");
  auto b = border_array(w.symbols());
  return w.size() - b.back();
}

bool is_period_of(const Word& w, std::size_t p) {
  if (p < 1 || p > w.size()) return false;
  auto s = w.symbols();
  for (std::size_t i = 0; i + p < s.size(); ++i)
    if (s[i] != s[i + p]) return false;
  return true;
}

bool is_aperiodic(const Word& w) {
  return 2 * period(w) > w.size();
}

bool is_primitive(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitivity of the empty word");
  std::size_t p = period(w);
  return !(p < w.size() && w.size() % p == 0);
}

namespace detail {

// Two-pointer least-rotation scan, O(n).
std::size_t least_rotation_index(std::span<const Symbol> s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Symbol a = s[(i + k) % n], b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i = std::max(i + k + 1, j);
    else
      j = std::max(j + k + 1, i);
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

}  // namespace detail

Word canonical_rotation(const Word& w) {
  if (w.empty())
    throw std::invalid_argument("canonical rotation of the empty word");
  return rotate(w, detail::least_rotation_index(w.symbols()));
}

bool fine_wilf_holds(const Word& w, std::size_t p, std::size_t q) {
  if (w.empty()) throw std::invalid_argument("empty word");
  if (!is_period_of(w, p) || !is_period_of(w, q))
    throw std::invalid_argument("p and q must both be periods of w");
  return is_period_of(w, std::gcd(p, q));
}

CircularWord::CircularWord(const Word& any_rotation)
    : rep_(canonical_rotation(any_rotation)) {}

}  // namespace circsq
