#include "circsq/bounds.hpp"

#include <stdexcept>

namespace circsq {

bool check_two_rightmost(const Word& w) {
  for (const auto& [pos, count] : rightmost_start_multiplicities(w)) {
    (void)pos;
    if (count > 2) return false;
  }
  return true;
}

QuarterReport check_quarter_lemma(const Word& w) {
  const std::size_t n = w.size();
  if (n < 8) throw std::invalid_argument("quarter lemma needs |w| >= 8");
  QuarterReport rep;
  rep.host = w;
  rep.s_begin = (n + 3) / 4 - 1;
  rep.s_end = (n + 1) / 2 - 1;
  rep.quarter_starts_end = (n + 3) / 4;
  rep.s = w.slice(rep.s_begin, rep.s_end - rep.s_begin + 1);
  rep.s_aperiodic = is_aperiodic(rep.s);

  std::vector<Symbol> host(w.symbols().begin(), w.symbols().end());
  host.insert(host.end(), w.symbols().begin(), w.symbols().end());
  for (const auto& r : detail::distinct_square_offsets(host, n))
    if (r.rightmost < rep.quarter_starts_end)
      rep.first_quarter_lengths.insert(r.length);
  rep.uniform = rep.first_quarter_lengths.size() <= 1;
  return rep;
}

bool check_extend_period(const Word& w, Symbol a, Symbol b) {
  if (w.empty()) throw std::invalid_argument("empty word");
  std::vector<Symbol> aw{a};
  aw.insert(aw.end(), w.symbols().begin(), w.symbols().end());
  std::vector<Symbol> wb(w.symbols().begin(), w.symbols().end());
  wb.push_back(b);
  int sigma = std::max({w.alphabet_size(), int(a) + 1, int(b) + 1});
  Word left = Word::from_symbols(std::move(aw), sigma);
  Word right = Word::from_symbols(std::move(wb), sigma);
  std::size_t p = period(left), q = period(right);
  if (2 * p > left.size() || 2 * q > right.size()) return true;  // vacuous
  return p == q;
}

FsBoundReport check_fs_bound(const Word& x) {
  if (x.size() < 10) throw std::invalid_argument("FS bound needs |x| >= 10");
  FsBoundReport rep;
  rep.host = x;
  auto doubles = fs_double_squares(x);
  rep.fs_count = doubles.size();
  rep.bound = Rational::of(5 * std::int64_t(x.size()), 6);
  if (!doubles.empty()) {
    rep.leftmost_u_len = doubles.front().short_root.size();
    rep.bound =
        rep.bound - Rational::of(std::int64_t(*rep.leftmost_u_len), 3);
  }
  rep.holds = rep.fs_count == 0 ||
              Rational::of(std::int64_t(rep.fs_count), 1) <= rep.bound;
  return rep;
}

DensityReport density_report(const CircularWord& cw) {
  DensityReport rep;
  rep.n = cw.size();
  rep.count = count_distinct_circular_squares(cw);
  rep.density = Rational::of(std::int64_t(rep.count), std::int64_t(rep.n));
  rep.below_314 = rep.count * 100 <= 314 * rep.n;
  rep.meets_125 = rep.count * 4 >= 5 * rep.n;
  return rep;
}

}  // namespace circsq
