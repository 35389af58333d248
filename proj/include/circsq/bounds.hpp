#pragma once

#include <optional>
#include <set>

#include "circsq/rational.hpp"
#include "circsq/squares.hpp"
#include "circsq/word.hpp"

namespace circsq {

/// Report of one quarter-lemma evaluation. The rounding rule is fixed and
/// recorded in the slice bounds so a counterexample would be auditable:
/// s = w[ceil(n/4)-1 .. ceil(n/2)-1] (0-based, inclusive), first-quarter
/// starts are 0..ceil(n/4)-1 in ww.
struct QuarterReport {
  Word host;
  Word s;
  std::size_t s_begin = 0;  // inclusive
  std::size_t s_end = 0;    // inclusive
  std::size_t quarter_starts_end = 0;  // starts checked: 0..quarter_starts_end-1
  bool s_aperiodic = false;
  std::set<std::size_t> first_quarter_lengths;  // |uu| values
  bool uniform = false;  // |first_quarter_lengths| <= 1

  bool holds() const { return !s_aperiodic || uniform; }
};

/// FS-double-square bound report: fs_count <= 5/6 |x| - 1/3 |u| whenever a
/// leftmost FS-double square exists; vacuous when fs_count = 0.
struct FsBoundReport {
  Word host;
  std::size_t fs_count = 0;
  std::optional<std::size_t> leftmost_u_len;
  Rational bound;  // 5/6 |x| minus the |u| term when one exists
  bool holds = false;
};

struct DensityReport {
  std::size_t n = 0;
  std::size_t count = 0;
  Rational density;
  bool below_314 = false;  // count * 100 <= 314 * n
  bool meets_125 = false;  // count * 4 >= 5 * n
};

/// Max rightmost-occurrence multiplicity <= 2 (Fraenkel-Simpson).
/// A false return is a falsification report, not an error.
bool check_two_rightmost(const Word& w);

/// Evaluate the quarter lemma on ww with the length-<=n cap. Requires |w| >= 8.
QuarterReport check_quarter_lemma(const Word& w);

/// If aw and wb are both periodic their periods must coincide; vacuously true
/// otherwise.
bool check_extend_period(const Word& w, Symbol a, Symbol b);

/// Requires |x| >= 10. Exact rational arithmetic throughout.
FsBoundReport check_fs_bound(const Word& x);

DensityReport density_report(const CircularWord& cw);

}  // namespace circsq
