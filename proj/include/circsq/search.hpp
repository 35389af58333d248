#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "circsq/rational.hpp"
#include "circsq/word.hpp"

namespace circsq {

inline constexpr std::size_t kWitnessCap = 16;
inline constexpr std::size_t kMaxSearchLength = 31;  // 2-bit packing limit
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 32;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CampaignError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuotientFlags {
  bool relabel = false;
  bool reversal = false;
};

std::string quotient_label(const QuotientFlags& qf);

/// Non-exhaustive probe: `samples` words drawn uniformly (over words, not
/// necklaces), canonicalized and deduplicated before counting.
struct SampleMode {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct SearchOptions {
  int sigma = 2;
  QuotientFlags quotient;
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultBudget;
  bool budget_override = false;
  std::optional<SampleMode> sample;
};

/// Extremal result for one (n, sigma) cell.
struct SearchRecord {
  std::size_t n = 0;
  int sigma = 0;
  std::string quotient;  // label; carries a sample tag for probe rows
  std::size_t max_count = 0;
  Rational density;                      // max_count / n, reduced
  std::uint64_t num_maximizers = 0;      // total, not capped
  std::vector<Word> witnesses;           // lexicographically least, <= 16
  std::uint64_t words_examined = 0;      // words whose count was computed
  std::uint64_t elapsed_ms = 0;
};

/// (1/n) sum_{d|n} phi(d) sigma^{n/d}.
std::uint64_t necklace_count(std::size_t n, int sigma);

/// Visit the canonical representative of every necklace of length n over
/// sigma symbols, in lexicographic order (FKM). Verifies the visit count
/// against the necklace formula and throws std::logic_error on mismatch.
void enumerate_necklaces(std::size_t n, int sigma,
                         const std::function<void(const Word&)>& visit);

/// Exhaustive (or sampled) maximum of the circular distinct-square count
/// over necklaces of length n. Deterministic for fixed options regardless
/// of jobs.
SearchRecord max_square_density(std::size_t n, const SearchOptions& opt);

struct CampaignOptions {
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  SearchOptions search;
  std::string out_path;
};

/// One record per n, streamed to CSV ascending. Completed rows in an
/// existing file are validated and skipped; a row that fails validation
/// aborts the resume (CampaignError).
std::vector<SearchRecord> search_campaign(const CampaignOptions& opt,
                                          std::ostream* log = nullptr);

// CSV schema helpers (used by tests and resume validation).
std::string csv_header();
std::string csv_row(const SearchRecord& rec);
SearchRecord parse_csv_row(const std::string& line);

}  // namespace circsq
