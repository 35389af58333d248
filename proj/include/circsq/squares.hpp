#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "circsq/word.hpp"

namespace circsq {

/// A square uu, identified by its text.
struct Square {
  Word root;  // u
  Word text;  // uu

  static Square from_root(const Word& u);

  friend bool operator==(const Square& a, const Square& b) {
    return a.text == b.text;
  }
  friend std::strong_ordering operator<=>(const Square& a, const Square& b) {
    return a.text <=> b.text;
  }
};

/// A distinct square of a host word together with its rightmost occurrence.
struct OccurrenceRecord {
  Square square;
  std::size_t rightmost_start;

  friend bool operator==(const OccurrenceRecord& a,
                         const OccurrenceRecord& b) = default;
};

/// Two rightmost square occurrences sharing a start (paper-style (u, U),
/// |u| < |U|).
struct DoubleSquare {
  std::size_t position;
  Word short_root;
  Word long_root;

  friend bool operator==(const DoubleSquare& a, const DoubleSquare& b) = default;
};

/// Reference enumeration: every start, every even length, direct substring
/// comparison. No fingerprints. Intentionally naive; tests compare the
/// efficient counter against this.
std::set<Square> distinct_squares_oracle(const Word& w);

/// All distinct squares of w (suffix-structure enumeration, exact dedup).
std::set<Square> distinct_squares(const Word& w);

/// |distinct_squares(w)| without materializing texts. O(n^2 log n) worst case.
std::size_t count_distinct_squares(const Word& w);

/// Distinct squares of length <= n occurring in rep.rep, rep the canonical
/// rotation: exactly the squares occurring in some rotation.
std::set<Square> distinct_circular_squares(const CircularWord& cw);

std::size_t count_distinct_circular_squares(const CircularWord& cw);

/// One record per distinct square of w, start position maximal.
/// Sorted by (rightmost_start, text).
std::vector<OccurrenceRecord> rightmost_occurrences(const Word& w);

/// Position -> number of rightmost occurrences starting there (zeros omitted).
std::map<std::size_t, std::size_t> rightmost_start_multiplicities(const Word& w);

/// Positions carrying exactly two rightmost occurrences, ascending.
std::vector<DoubleSquare> fs_double_squares(const Word& w);

std::optional<DoubleSquare> leftmost_fs_double_square(const Word& w);

namespace detail {

/// One distinct square of a symbol sequence: text length, leftmost and
/// rightmost occurrence starts.
struct SquareOffsets {
  std::size_t length;
  std::size_t first;
  std::size_t rightmost;
};

/// Core enumerator over an arbitrary symbol sequence with a length cap.
/// Suffix-array based; dedup is exact (suffix comparisons, no hashing).
std::vector<SquareOffsets> distinct_square_offsets(std::span<const Symbol> s,
                                                   std::size_t max_len);

/// Count-only fast path for short sequences (|s| <= 62, sigma <= 4): packs
/// each square text into 128 bits losslessly and sort-uniques.
std::size_t count_distinct_squares_small(std::span<const Symbol> s,
                                         std::size_t max_len);

}  // namespace detail

}  // namespace circsq
