#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circsq {

using Symbol = std::uint8_t;

inline constexpr int kMaxAlphabet = 26;

/// Finite word over a small alphabet. Letters 'a'..'z' at the boundary are
/// stored as integers 0..sigma-1. Indexing is 0-based everywhere. Immutable
/// value type; equality is element-wise, ordering is lexicographic.
class Word {
public:
  Word() = default;

  /// Parse lowercase letters; sigma = 0 infers (max letter index + 1).
  /// Throws std::invalid_argument on characters outside 'a'..'z' or on an
  /// explicit sigma that does not cover every letter.
  static Word from_text(std::string_view text, int sigma = 0);
  static Word from_symbols(std::vector<Symbol> symbols, int sigma = 0);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  int alphabet_size() const noexcept { return sigma_; }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept {
    return {symbols_.data(), symbols_.size()};
  }

  std::string text() const;
  Word slice(std::size_t pos, std::size_t len) const;
  Word reversed() const;
  /// Apply an alphabet permutation (perm.size() >= sigma).
  Word relabeled(std::span<const Symbol> perm) const;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.symbols_ == b.symbols_;
  }
  friend std::strong_ordering operator<=>(const Word& a,
                                          const Word& b) noexcept;

private:
  std::vector<Symbol> symbols_;
  int sigma_ = 1;
};

/// Cyclic left shift by i: w[i..] w[..i). Requires 0 <= i < |w|.
Word rotate(const Word& w, std::size_t i);

/// Least p >= 1 with w[j] = w[j+p] for all valid j. Nonempty words only.
std::size_t period(const Word& w);

/// True iff p is a (not necessarily smallest) period, 1 <= p <= |w|.
bool is_period_of(const Word& w, std::size_t p);

/// Periodic means period <= |w|/2; aperiodic otherwise.
bool is_aperiodic(const Word& w);

/// True iff w is not y^p for any p >= 2.
bool is_primitive(const Word& w);

/// Lexicographically least rotation (necklace representative). Linear time.
Word canonical_rotation(const Word& w);

/// p and q must both be periods of w (throws std::invalid_argument if not).
/// Returns whether gcd(p, q) is also a period. Whenever
/// p + q <= |w| + gcd(p, q) the periodicity lemma forces a true result;
/// verifiers assert exactly that.
bool fine_wilf_holds(const Word& w, std::size_t p, std::size_t q);

namespace detail {
/// Index of the lexicographically least rotation of a nonempty sequence.
std::size_t least_rotation_index(std::span<const Symbol> s);
}  // namespace detail

/// Conjugacy class of a nonempty word, stored via its canonical rotation.
class CircularWord {
public:
  explicit CircularWord(const Word& any_rotation);

  const Word& representative() const noexcept { return rep_; }
  std::size_t size() const noexcept { return rep_.size(); }

  friend bool operator==(const CircularWord& a, const CircularWord& b) {
    return a.rep_ == b.rep_;
  }

private:
  Word rep_;
};

}  // namespace circsq
