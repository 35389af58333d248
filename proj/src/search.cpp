#include "circsq/search.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "circsq/corpus.hpp"
#include "circsq/squares.hpp"

namespace circsq {

namespace {

constexpr std::size_t kBlockWords = 4096;

std::uint64_t euler_phi(std::uint64_t d) {
  std::uint64_t result = d;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

unsigned __int128 ipow128(std::uint64_t base, std::uint64_t exp) {
  unsigned __int128 r = 1;
  while (exp--) r *= base;
  return r;
}

void check_sigma(int sigma) {
  if (sigma < 2 || sigma > 4)
    throw std::invalid_argument("alphabet size must be in 2..4");
}

// MSB-first 2-bit packing: numeric order on packed values equals
// lexicographic order on words of the same length.
std::uint64_t pack_word(std::span<const Symbol> s) {
  std::uint64_t p = 0;
  for (Symbol c : s) p = (p << 2) | c;
  return p;
}

void unpack_word(std::uint64_t p, std::size_t n, Symbol* out) {
  for (std::size_t t = n; t-- > 0;) {
    out[t] = Symbol(p & 3);
    p >>= 2;
  }
}

std::size_t circular_count_packed(std::uint64_t p, std::size_t n) {
  Symbol buf[2 * kMaxSearchLength];
  unpack_word(p, n, buf);
  std::copy(buf, buf + n, buf + n);
  return detail::count_distinct_squares_small({buf, 2 * n}, n);
}

// Fredricksen-Kempner-Maiorana necklace generation, lexicographic order of
// canonical representatives.
template <class Visit>
void fkm(std::size_t n, int sigma, Visit&& visit) {
  std::vector<Symbol> a(n + 1, 0);
  auto rec = [&](auto&& self, std::size_t t, std::size_t p) -> void {
    if (t > n) {
      if (n % p == 0) visit(std::span<const Symbol>(a.data() + 1, n));
      return;
    }
    a[t] = a[t - p];
    self(self, t + 1, p);
    for (int s = a[t - p] + 1; s < sigma; ++s) {
      a[t] = Symbol(s);
      self(self, t + 1, t);
    }
  };
  rec(rec, 1, 1);
}

struct QuotientContext {
  std::vector<std::vector<Symbol>> perms;  // perms[0] is the identity
  bool reversal = false;
  bool active() const { return reversal || perms.size() > 1; }
};

QuotientContext make_quotient_context(const QuotientFlags& qf, int sigma) {
  QuotientContext ctx;
  ctx.reversal = qf.reversal;
  std::vector<Symbol> p(sigma);
  std::iota(p.begin(), p.end(), Symbol(0));
  ctx.perms.push_back(p);
  if (qf.relabel)
    while (std::next_permutation(p.begin(), p.end())) ctx.perms.push_back(p);
  return ctx;
}

// w (a canonical necklace) survives iff no image under the quotient group
// has a strictly smaller canonical rotation.
bool orbit_minimal(std::span<const Symbol> w, const QuotientContext& ctx) {
  const std::size_t n = w.size();
  Symbol buf[kMaxSearchLength];
  for (std::size_t pi = 0; pi < ctx.perms.size(); ++pi) {
    const auto& perm = ctx.perms[pi];
    for (int rev = 0; rev <= (ctx.reversal ? 1 : 0); ++rev) {
      if (pi == 0 && rev == 0) continue;  // identity transform
      for (std::size_t t = 0; t < n; ++t)
        buf[t] = perm[rev ? w[n - 1 - t] : w[t]];
      std::size_t idx = detail::least_rotation_index({buf, n});
      for (std::size_t t = 0; t < n; ++t) {
        Symbol c = buf[(idx + t) % n];
        if (c < w[t]) return false;
        if (c > w[t]) break;
      }
    }
  }
  return true;
}

struct Block {
  std::uint64_t index = 0;
  std::vector<std::uint64_t> words;
};

struct BlockOutcome {
  bool any = false;
  std::size_t max_count = 0;
  std::uint64_t maximizers = 0;
  std::uint64_t examined = 0;
  std::vector<std::uint64_t> witnesses;  // enumeration (= lex) order
};

class BlockQueue {
 public:
  explicit BlockQueue(std::size_t cap) : cap_(cap) {}

  void push(Block b) {
    std::unique_lock lk(m_);
    not_full_.wait(lk, [&] { return q_.size() < cap_; });
    q_.push_back(std::move(b));
    not_empty_.notify_one();
  }

  std::optional<Block> pop() {
    std::unique_lock lk(m_);
    not_empty_.wait(lk, [&] { return !q_.empty() || closed_; });
    if (q_.empty()) return std::nullopt;
    Block b = std::move(q_.front());
    q_.pop_front();
    not_full_.notify_one();
    return b;
  }

  void close() {
    std::lock_guard lk(m_);
    closed_ = true;
    not_empty_.notify_all();
  }

 private:
  std::mutex m_;
  std::condition_variable not_empty_, not_full_;
  std::deque<Block> q_;
  std::size_t cap_;
  bool closed_ = false;
};

BlockOutcome process_block(const std::vector<std::uint64_t>& words,
                           std::size_t n, const QuotientContext& ctx) {
  BlockOutcome out;
  Symbol buf[kMaxSearchLength];
  for (std::uint64_t p : words) {
    if (ctx.active()) {
      unpack_word(p, n, buf);
      if (!orbit_minimal({buf, n}, ctx)) continue;
    }
    std::size_t c = circular_count_packed(p, n);
    ++out.examined;
    if (!out.any || c > out.max_count) {
      out.any = true;
      out.max_count = c;
      out.maximizers = 1;
      out.witnesses.assign(1, p);
    } else if (c == out.max_count) {
      ++out.maximizers;
      if (out.witnesses.size() < kWitnessCap) out.witnesses.push_back(p);
    }
  }
  return out;
}

// Deterministic parallel reduction: fixed-size blocks in enumeration order,
// per-block outcomes, merge in block order.
template <class Producer>
BlockOutcome run_search(std::size_t n, const QuotientContext& ctx,
                        unsigned jobs, Producer&& produce) {
  jobs = std::max(1u, jobs);
  std::map<std::uint64_t, BlockOutcome> results;
  std::mutex results_m;
  BlockQueue queue(2 * std::size_t(jobs) + 2);

  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t)
    workers.emplace_back([&] {
      while (auto b = queue.pop()) {
        BlockOutcome o = process_block(b->words, n, ctx);
        std::lock_guard lk(results_m);
        results.emplace(b->index, std::move(o));
      }
    });

  Block cur;
  std::uint64_t next_index = 0;
  auto flush = [&] {
    if (cur.words.empty()) return;
    cur.index = next_index++;
    queue.push(std::move(cur));
    cur = Block{};
  };
  produce([&](std::uint64_t p) {
    cur.words.push_back(p);
    if (cur.words.size() >= kBlockWords) flush();
  });
  flush();
  queue.close();
  for (auto& w : workers) w.join();

  BlockOutcome merged;
  for (auto& [idx, o] : results) {
    (void)idx;
    merged.examined += o.examined;
    if (!o.any) continue;
    if (!merged.any || o.max_count > merged.max_count) {
      merged.any = o.any;
      merged.max_count = o.max_count;
      merged.maximizers = o.maximizers;
      merged.witnesses = o.witnesses;
    } else if (o.max_count == merged.max_count) {
      merged.maximizers += o.maximizers;
      for (std::uint64_t w : o.witnesses) {
        if (merged.witnesses.size() >= kWitnessCap) break;
        merged.witnesses.push_back(w);
      }
    }
  }
  return merged;
}

std::string record_label(const SearchOptions& opt) {
  std::string label = quotient_label(opt.quotient);
  if (opt.sample)
    label += "+sample" + std::to_string(opt.sample->samples) + "@" +
             std::to_string(opt.sample->seed);
  return label;
}

std::uint64_t parse_u64(std::string_view field, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw CampaignError(std::string("malformed CSV field: ") + what);
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string quotient_label(const QuotientFlags& qf) {
  if (qf.relabel && qf.reversal) return "relabel+reversal";
  if (qf.relabel) return "relabel";
  if (qf.reversal) return "reversal";
  return "none";
}

std::uint64_t necklace_count(std::size_t n, int sigma) {
  if (n < 1) throw std::invalid_argument("necklace_count: n >= 1 required");
  check_sigma(sigma);
  unsigned __int128 sum = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    sum += ipow128(std::uint64_t(sigma), n / d) * euler_phi(d);
  }
  sum /= n;
  if (sum > ~std::uint64_t(0)) throw std::overflow_error("necklace count overflow");
  return std::uint64_t(sum);
}

void enumerate_necklaces(std::size_t n, int sigma,
                         const std::function<void(const Word&)>& visit) {
  if (n < 1) throw std::invalid_argument("enumerate_necklaces: n >= 1 required");
  check_sigma(sigma);
  std::uint64_t visited = 0;
  fkm(n, sigma, [&](std::span<const Symbol> s) {
    ++visited;
    visit(Word::from_symbols(std::vector<Symbol>(s.begin(), s.end()), sigma));
  });
  if (visited != necklace_count(n, sigma))
    throw std::logic_error("necklace enumeration disagrees with the counting formula");
}

SearchRecord max_square_density(std::size_t n, const SearchOptions& opt) {
  if (n < 1) throw std::invalid_argument("search: n >= 1 required");
  check_sigma(opt.sigma);
  if (n > kMaxSearchLength)
    throw std::invalid_argument(
        "search: n > 31 exceeds the packed-word desk-scale limit");
  if (opt.sample && (opt.quotient.relabel || opt.quotient.reversal))
    throw std::invalid_argument("sampling mode is unquotiented");

  const auto t0 = std::chrono::steady_clock::now();
  QuotientContext ctx = make_quotient_context(opt.quotient, opt.sigma);
  BlockOutcome outcome;

  if (opt.sample) {
    if (opt.sample->samples == 0 || opt.sample->samples > (std::uint64_t(1) << 27))
      throw std::invalid_argument("sample count must be in 1..2^27");
    std::mt19937_64 rng(opt.sample->seed);
    std::vector<std::uint64_t> words;
    words.reserve(opt.sample->samples);
    Symbol buf[kMaxSearchLength];
    Symbol canon[kMaxSearchLength];
    for (std::uint64_t i = 0; i < opt.sample->samples; ++i) {
      for (std::size_t t = 0; t < n; ++t)
        buf[t] = Symbol(uniform_below(rng, std::uint64_t(opt.sigma)));
      std::size_t idx = detail::least_rotation_index({buf, n});
      for (std::size_t t = 0; t < n; ++t) canon[t] = buf[(idx + t) % n];
      words.push_back(pack_word({canon, n}));
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    outcome = run_search(n, ctx, opt.jobs, [&](auto&& sink) {
      for (std::uint64_t w : words) sink(w);
    });
  } else {
    const std::uint64_t total = necklace_count(n, opt.sigma);
    if (total > opt.budget && !opt.budget_override)
      throw BudgetExceeded("estimated necklace count " + std::to_string(total) +
                           " exceeds the search budget " +
                           std::to_string(opt.budget));
    std::uint64_t enumerated = 0;
    outcome = run_search(n, ctx, opt.jobs, [&](auto&& sink) {
      fkm(n, opt.sigma, [&](std::span<const Symbol> s) {
        ++enumerated;
        sink(pack_word(s));
      });
    });
    if (enumerated != total)
      throw std::logic_error("necklace enumeration disagrees with the counting formula");
  }

  SearchRecord rec;
  rec.n = n;
  rec.sigma = opt.sigma;
  rec.quotient = record_label(opt);
  rec.max_count = outcome.max_count;
  rec.density = Rational::of(std::int64_t(outcome.max_count), std::int64_t(n));
  rec.num_maximizers = outcome.maximizers;
  rec.words_examined = outcome.examined;
  Symbol buf[kMaxSearchLength];
  for (std::uint64_t p : outcome.witnesses) {
    unpack_word(p, n, buf);
    rec.witnesses.push_back(
        Word::from_symbols(std::vector<Symbol>(buf, buf + n), opt.sigma));
  }
  rec.elapsed_ms = std::uint64_t(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  return rec;
}

std::string csv_header() {
  return "n,sigma,quotient,max_count,density_num,density_den,num_maximizers,"
         "witnesses,words_examined,elapsed_ms";
}

std::string csv_row(const SearchRecord& rec) {
  std::ostringstream out;
  out << rec.n << ',' << rec.sigma << ',' << rec.quotient << ','
      << rec.max_count << ',' << rec.density.num << ',' << rec.density.den
      << ',' << rec.num_maximizers << ',';
  for (std::size_t i = 0; i < rec.witnesses.size(); ++i) {
    if (i) out << ';';
    out << rec.witnesses[i].text();
  }
  out << ',' << rec.words_examined << ',' << rec.elapsed_ms;
  return out.str();
}

SearchRecord parse_csv_row(const std::string& line) {
  auto fields = split(line, ',');
  if (fields.size() != 10) throw CampaignError("CSV row must have 10 fields");
  SearchRecord rec;
  rec.n = parse_u64(fields[0], "n");
  rec.sigma = int(parse_u64(fields[1], "sigma"));
  rec.quotient = fields[2];
  rec.max_count = parse_u64(fields[3], "max_count");
  std::int64_t num = std::int64_t(parse_u64(fields[4], "density_num"));
  std::int64_t den = std::int64_t(parse_u64(fields[5], "density_den"));
  if (den == 0) throw CampaignError("zero density denominator");
  rec.density = Rational{num, den};
  rec.num_maximizers = parse_u64(fields[6], "num_maximizers");
  if (fields[7].empty()) throw CampaignError("empty witness list");
  for (const auto& text : split(fields[7], ';')) {
    try {
      rec.witnesses.push_back(Word::from_text(text));
    } catch (const std::invalid_argument&) {
      throw CampaignError("malformed witness: " + text);
    }
  }
  rec.words_examined = parse_u64(fields[8], "words_examined");
  rec.elapsed_ms = parse_u64(fields[9], "elapsed_ms");
  return rec;
}

namespace {

void validate_resumed_row(const SearchRecord& rec, const CampaignOptions& opt,
                          const std::string& label, std::size_t expect_n) {
  if (rec.n != expect_n || rec.n > opt.n_max)
    throw CampaignError("CSV rows do not form the campaign prefix (row n=" +
                        std::to_string(rec.n) + ")");
  if (rec.sigma != opt.search.sigma)
    throw CampaignError("CSV row has a different alphabet size");
  if (rec.quotient != label)
    throw CampaignError("CSV row belongs to a different campaign: " + rec.quotient);
  if (rec.density != Rational::of(std::int64_t(rec.max_count), std::int64_t(rec.n)))
    throw CampaignError("CSV density is not max_count/n");
  if (rec.witnesses.size() !=
      std::min<std::uint64_t>(kWitnessCap, rec.num_maximizers))
    throw CampaignError("CSV witness list size mismatch");
  for (const auto& wit : rec.witnesses) {
    if (wit.size() != rec.n || canonical_rotation(wit) != wit ||
        wit.alphabet_size() > rec.sigma)
      throw CampaignError("CSV witness is not a canonical length-n word");
    if (count_distinct_circular_squares(CircularWord(wit)) != rec.max_count)
      throw CampaignError("CSV witness does not reproduce max_count");
  }
}

}  // namespace

std::vector<SearchRecord> search_campaign(const CampaignOptions& opt,
                                          std::ostream* log) {
  if (opt.n_min < 1 || opt.n_min > opt.n_max)
    throw std::invalid_argument("campaign: need 1 <= n_min <= n_max");
  if (opt.out_path.empty())
    throw std::invalid_argument("campaign: output path required");
  const std::string label = record_label(opt.search);

  std::vector<SearchRecord> done;
  bool have_header = false;
  if (std::filesystem::exists(opt.out_path)) {
    std::ifstream in(opt.out_path, std::ios::binary);
    if (!in) throw CampaignError("cannot read existing output file");
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    if (!content.empty()) {
      if (content.back() != '\n')
        throw CampaignError("existing CSV ends mid-row; refusing to resume");
      auto lines = split(content.substr(0, content.size() - 1), '\n');
      if (lines.empty() || lines[0] != csv_header())
        throw CampaignError("existing CSV header mismatch; refusing to resume");
      have_header = true;
      for (std::size_t i = 1; i < lines.size(); ++i) {
        SearchRecord rec = parse_csv_row(lines[i]);
        validate_resumed_row(rec, opt, label, opt.n_min + done.size());
        done.push_back(std::move(rec));
      }
    }
  }

  std::vector<SearchRecord> all = done;
  if (log && !done.empty())
    *log << "resuming: " << done.size() << " completed row(s) detected\n";
  if (opt.n_min + done.size() > opt.n_max) return all;  // nothing left

  std::ofstream out(opt.out_path, std::ios::app | std::ios::binary);
  if (!out) throw CampaignError("cannot open output file for writing");
  if (!have_header) {
    out << csv_header() << '\n';
    out.flush();
  }
  for (std::size_t n = opt.n_min + done.size(); n <= opt.n_max; ++n) {
    SearchRecord rec = max_square_density(n, opt.search);
    out << csv_row(rec) << '\n';
    out.flush();
    if (!out) throw CampaignError("write failure on output file");
    if (log)
      *log << "n=" << rec.n << " max_count=" << rec.max_count
           << " density=" << rec.density.str()
           << " maximizers=" << rec.num_maximizers
           << " examined=" << rec.words_examined << " (" << rec.elapsed_ms
           << " ms)\n";
    all.push_back(std::move(rec));
  }
  return all;
}

}  // namespace circsq
