#include "circsq/squares.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace circsq {

namespace {

// Suffix array (prefix-doubling), LCP (Kasai) and an O(1) LCE oracle via a
// sparse table. Sequences here are at most a few thousand symbols.
class SuffixStructure {
 public:
  explicit SuffixStructure(std::span<const Symbol> s) : n_(s.size()) {
    sa_.resize(n_);
    rank_.resize(n_);
    std::iota(sa_.begin(), sa_.end(), 0);
    for (std::size_t i = 0; i < n_; ++i) rank_[i] = s[i];
    std::vector<int> next(n_);
    for (std::size_t k = 1; k < n_; k *= 2) {
      auto key = [&](int i) {
        int second = (i + int(k) < int(n_)) ? rank_[i + k] : -1;
        return std::pair<int, int>(rank_[i], second);
      };
      std::sort(sa_.begin(), sa_.end(),
                [&](int a, int b) { return key(a) < key(b); });
      next[sa_[0]] = 0;
      for (std::size_t i = 1; i < n_; ++i)
        next[sa_[i]] =
            next[sa_[i - 1]] + (key(sa_[i - 1]) < key(sa_[i]) ? 1 : 0);
      rank_.swap(next);
      if (rank_[sa_[n_ - 1]] == int(n_) - 1) break;
    }
    // Kasai
    lcp_.assign(n_, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (rank_[i] == 0) {
        h = 0;
        continue;
      }
      std::size_t j = sa_[rank_[i] - 1];
      if (h > 0) --h;
      while (i + h < n_ && j + h < n_ && s[i + h] == s[j + h]) ++h;
      lcp_[rank_[i]] = h;  // lcp between rank-1 and rank
    }
    build_rmq();
  }

  // Longest common extension of the suffixes starting at i and j.
  std::size_t lce(std::size_t i, std::size_t j) const {
    if (i == j) return n_ - i;
    int a = rank_[i], b = rank_[j];
    if (a > b) std::swap(a, b);
    return rmq(a + 1, b);
  }

  int rank_of(std::size_t i) const { return rank_[i]; }

 private:
  void build_rmq() {
    int levels = 1;
    while ((std::size_t(1) << levels) <= n_) ++levels;
    table_.assign(levels, std::vector<std::size_t>(n_));
    table_[0] = lcp_;
    for (int l = 1; l < levels; ++l) {
      std::size_t span = std::size_t(1) << l;
      for (std::size_t i = 0; i + span <= n_; ++i)
        table_[l][i] =
            std::min(table_[l - 1][i], table_[l - 1][i + span / 2]);
    }
  }

  // min lcp_[lo..hi] inclusive, lo <= hi
  std::size_t rmq(int lo, int hi) const {
    int len = hi - lo + 1;
    int l = std::bit_width(unsigned(len)) - 1;
    return std::min(table_[l][lo], table_[l][hi - (1 << l) + 1]);
  }

  std::size_t n_;
  std::vector<int> sa_, rank_;
  std::vector<std::size_t> lcp_;
  std::vector<std::vector<std::size_t>> table_;
};

Word word_from_span(std::span<const Symbol> s, int sigma) {
  return Word::from_symbols(std::vector<Symbol>(s.begin(), s.end()), sigma);
}

void require_nonempty(const Word& w) {
  if (w.empty()) throw std::invalid_argument("operation requires |w| >= 1");
}

// Distinct squares of rep.rep capped at |rep|, as offset records plus the
// host buffer they index into.
struct CircularEnumeration {
  std::vector<Symbol> host;
  std::vector<detail::SquareOffsets> records;
};

CircularEnumeration enumerate_circular(const CircularWord& cw) {
  const auto rep = cw.representative().symbols();
  CircularEnumeration out;
  out.host.reserve(2 * rep.size());
  out.host.insert(out.host.end(), rep.begin(), rep.end());
  out.host.insert(out.host.end(), rep.begin(), rep.end());
  out.records = detail::distinct_square_offsets(out.host, cw.size());
  return out;
}

}  // namespace

namespace detail {

std::vector<SquareOffsets> distinct_square_offsets(std::span<const Symbol> s,
                                                   std::size_t max_len) {
  const std::size_t n = s.size();
  std::vector<SquareOffsets> out;
  if (n < 2) return out;
  SuffixStructure sx(s);
  std::vector<std::size_t> starts;
  for (std::size_t q = 1; 2 * q <= std::min(max_len, n); ++q) {
    starts.clear();
    for (std::size_t i = 0; i + 2 * q <= n; ++i)
      if (sx.lce(i, i + q) >= q) starts.push_back(i);
    if (starts.empty()) continue;
    // Occurrences of equal texts are contiguous in suffix-array order.
    std::sort(starts.begin(), starts.end(), [&](std::size_t a, std::size_t b) {
      return sx.rank_of(a) < sx.rank_of(b);
    });
    SquareOffsets cur{2 * q, starts[0], starts[0]};
    for (std::size_t t = 1; t < starts.size(); ++t) {
      if (sx.lce(starts[t - 1], starts[t]) >= 2 * q) {
        cur.first = std::min(cur.first, starts[t]);
        cur.rightmost = std::max(cur.rightmost, starts[t]);
      } else {
        out.push_back(cur);
        cur = SquareOffsets{2 * q, starts[t], starts[t]};
      }
    }
    out.push_back(cur);
  }
  return out;
}

std::size_t count_distinct_squares_small(std::span<const Symbol> s,
                                         std::size_t max_len) {
  const std::size_t n = s.size();
  std::vector<unsigned __int128> seen;
  for (std::size_t q = 1; 2 * q <= std::min(max_len, n); ++q) {
    for (std::size_t i = 0; i + 2 * q <= n; ++i) {
      bool sq = true;
      for (std::size_t t = 0; t < q; ++t)
        if (s[i + t] != s[i + q + t]) {
          sq = false;
          break;
        }
      if (!sq) continue;
      // 2 bits per symbol, sentinel bit above the text keeps lengths apart
      unsigned __int128 key = 0;
      for (std::size_t t = 0; t < 2 * q; ++t)
        key |= static_cast<unsigned __int128>(s[i + t]) << (2 * t);
      key |= static_cast<unsigned __int128>(1) << (4 * q);
      seen.push_back(key);
    }
  }
  std::sort(seen.begin(), seen.end());
  return std::unique(seen.begin(), seen.end()) - seen.begin();
}

}  // namespace detail

Square Square::from_root(const Word& u) {
  std::vector<Symbol> t;
  t.reserve(2 * u.size());
  auto s = u.symbols();
  t.insert(t.end(), s.begin(), s.end());
  t.insert(t.end(), s.begin(), s.end());
  return Square{u, Word::from_symbols(std::move(t), u.alphabet_size())};
}

std::set<Square> distinct_squares_oracle(const Word& w) {
  require_nonempty(w);
  auto s = w.symbols();
  std::set<Square> out;
  for (std::size_t q = 1; 2 * q <= s.size(); ++q)
    for (std::size_t i = 0; i + 2 * q <= s.size(); ++i)
      if (std::equal(s.begin() + i, s.begin() + i + q, s.begin() + i + q))
        out.insert(Square::from_root(w.slice(i, q)));
  return out;
}

std::set<Square> distinct_squares(const Word& w) {
  require_nonempty(w);
  std::set<Square> out;
  for (const auto& r : detail::distinct_square_offsets(w.symbols(), w.size()))
    out.insert(Square::from_root(w.slice(r.first, r.length / 2)));
  return out;
}

std::size_t count_distinct_squares(const Word& w) {
  require_nonempty(w);
  auto s = w.symbols();
  if (s.size() <= 62 && w.alphabet_size() <= 4)
    return detail::count_distinct_squares_small(s, s.size());
  return detail::distinct_square_offsets(s, s.size()).size();
}

std::set<Square> distinct_circular_squares(const CircularWord& cw) {
  auto en = enumerate_circular(cw);
  const int sigma = cw.representative().alphabet_size();
  std::set<Square> out;
  for (const auto& r : en.records) {
    std::span<const Symbol> root(en.host.data() + r.first, r.length / 2);
    out.insert(Square::from_root(word_from_span(root, sigma)));
  }
  return out;
}

std::size_t count_distinct_circular_squares(const CircularWord& cw) {
  const auto rep = cw.representative().symbols();
  const std::size_t n = rep.size();
  if (2 * n <= 62 && cw.representative().alphabet_size() <= 4) {
    std::vector<Symbol> host(rep.begin(), rep.end());
    host.insert(host.end(), rep.begin(), rep.end());
    return detail::count_distinct_squares_small(host, n);
  }
  return enumerate_circular(cw).records.size();
}

std::vector<OccurrenceRecord> rightmost_occurrences(const Word& w) {
  require_nonempty(w);
  std::vector<OccurrenceRecord> out;
  for (const auto& r : detail::distinct_square_offsets(w.symbols(), w.size()))
    out.push_back(OccurrenceRecord{
        Square::from_root(w.slice(r.first, r.length / 2)), r.rightmost});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.rightmost_start != b.rightmost_start)
      return a.rightmost_start < b.rightmost_start;
    return a.square < b.square;
  });
  return out;
}

std::map<std::size_t, std::size_t> rightmost_start_multiplicities(
    const Word& w) {
  require_nonempty(w);
  std::map<std::size_t, std::size_t> out;
  for (const auto& r : detail::distinct_square_offsets(w.symbols(), w.size()))
    ++out[r.rightmost];
  return out;
}

std::vector<DoubleSquare> fs_double_squares(const Word& w) {
  require_nonempty(w);
  auto records = detail::distinct_square_offsets(w.symbols(), w.size());
  // group record lengths by rightmost start
  std::map<std::size_t, std::vector<std::size_t>> lengths_at;
  for (const auto& r : records) lengths_at[r.rightmost].push_back(r.length);
  std::vector<DoubleSquare> out;
  for (auto& [pos, lens] : lengths_at) {
    if (lens.size() != 2) continue;
    std::sort(lens.begin(), lens.end());
    out.push_back(DoubleSquare{pos, w.slice(pos, lens[0] / 2),
                               w.slice(pos, lens[1] / 2)});
  }
  return out;  // map iteration is position-ascending already
}

std::optional<DoubleSquare> leftmost_fs_double_square(const Word& w) {
  auto all = fs_double_squares(w);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace circsq
