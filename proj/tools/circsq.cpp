// circsq: distinct squares in circular words - counting, the f_k family,
// lemma verification sweeps, and exhaustive necklace searches.

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <set>
#include <string>

#include "circsq/bounds.hpp"
#include "circsq/corpus.hpp"
#include "circsq/family.hpp"
#include "circsq/search.hpp"
#include "circsq/squares.hpp"

using nlohmann::ordered_json;
using namespace circsq;

namespace {

// exit codes: 0 ok/verified, 1 falsified lemma/census, 2 usage or input error
constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kUsage = 2;

std::string tsv_scalar(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array()) {
    std::string out;
    bool first = true;
    for (const auto& e : v) {
      if (!first) out += ';';
      first = false;
      out += tsv_scalar(e);
    }
    return out;
  }
  return v.dump();
}

// json: one document per invocation. tsv: headered, same values.
void emit(const std::string& format, const ordered_json& doc) {
  if (format == "json") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  ordered_json rows =
      doc.contains("rows") ? doc["rows"] : ordered_json::array({doc});
  if (rows.empty()) return;
  bool first = true;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
    if (!first) std::cout << '\t';
    first = false;
    std::cout << it.key();
  }
  std::cout << '\n';
  for (const auto& row : rows) {
    first = true;
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (!first) std::cout << '\t';
      first = false;
      std::cout << tsv_scalar(it.value());
    }
    std::cout << '\n';
  }
}

int run_count(const std::string& text, bool circular, bool list_squares,
              int sigma, const std::string& format) {
  Word w = Word::from_text(text, sigma);
  if (w.empty()) throw std::invalid_argument("count requires a nonempty word");
  ordered_json doc;
  doc["n"] = w.size();
  std::set<Square> squares;
  std::size_t count;
  if (circular) {
    CircularWord cw(w);
    if (list_squares) {
      squares = distinct_circular_squares(cw);
      count = squares.size();
    } else {
      count = count_distinct_circular_squares(cw);
    }
  } else {
    if (list_squares) {
      squares = distinct_squares(w);
      count = squares.size();
    } else {
      count = count_distinct_squares(w);
    }
  }
  doc["count"] = count;
  if (list_squares) {
    auto arr = ordered_json::array();
    for (const auto& sq : squares) arr.push_back(sq.text.text());
    doc["squares"] = arr;
  }
  emit(format, doc);
  return kOk;
}

int run_family(unsigned k_min, unsigned k_max, const std::string& format) {
  if (k_min > k_max) throw std::invalid_argument("need k-min <= k-max");
  if (k_max > 2000) throw std::invalid_argument("k-max capped at 2000");
  ordered_json rows = ordered_json::array();
  for (unsigned k = k_min; k <= k_max; ++k) {
    FamilyCensus c = census(k);  // classification mismatch throws
    Word f = family_word(k);
    ordered_json row;
    row["k"] = k;
    row["f_k"] = f.text();
    row["count"] = c.total;
    row["length"] = f.size();
    row["no_aa"] = c.no_aa;
    row["one_aa"] = c.one_aa;
    row["two_aa_len_2k3"] = c.two_aa_len_2k3;
    row["two_aa_len_2k5"] = c.two_aa_len_2k5;
    row["full_length"] = c.full_length;
    rows.push_back(std::move(row));
  }
  ordered_json doc;
  doc["rows"] = std::move(rows);
  emit(format, doc);
  return kOk;
}

struct VerifyParams {
  std::string lemma;
  std::size_t n_max = 12;
  int sigma = 2;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t rand_len_max = 500;
  int rand_sigma_max = 4;
  std::string format = "tsv";
};

void exhaustive_words(std::size_t len, int sigma,
                      const std::function<void(const Word&)>& f) {
  if (len == 0) return;
  std::vector<Symbol> syms(len, 0);
  while (true) {
    f(Word::from_symbols(std::vector<Symbol>(syms), sigma));
    auto it = std::find_if(syms.rbegin(), syms.rend(),
                           [&](Symbol c) { return c != Symbol(sigma - 1); });
    if (it == syms.rend()) return;
    ++*it;
    std::fill(syms.rbegin(), it, Symbol(0));
  }
}

int run_verify(const VerifyParams& p) {
  std::size_t min_len = 1;
  std::function<void(const Word&, std::vector<std::string>&)> check;
  if (p.lemma == "two-rightmost") {
    check = [](const Word& w, std::vector<std::string>& out) {
      for (const auto& [pos, count] : rightmost_start_multiplicities(w))
        if (count > 2)
          out.push_back("w=" + w.text() + " pos=" + std::to_string(pos) +
                        " mult=" + std::to_string(count));
    };
  } else if (p.lemma == "quarter") {
    min_len = 8;
    check = [](const Word& w, std::vector<std::string>& out) {
      auto rep = check_quarter_lemma(w);
      if (!rep.holds()) {
        std::string lens;
        for (auto l : rep.first_quarter_lengths)
          lens += (lens.empty() ? "" : "|") + std::to_string(l);
        out.push_back("w=" + w.text() + " s=" + rep.s.text() +
                      " lengths=" + lens);
      }
    };
  } else if (p.lemma == "extend-period") {
    check = [](const Word& w, std::vector<std::string>& out) {
      for (int a = 0; a < w.alphabet_size(); ++a)
        for (int b = 0; b < w.alphabet_size(); ++b)
          if (!check_extend_period(w, Symbol(a), Symbol(b)))
            out.push_back("w=" + w.text() + " a=" + char('a' + a) +
                          " b=" + char('a' + b));
    };
  } else if (p.lemma == "fs-bound") {
    min_len = 10;
    check = [](const Word& w, std::vector<std::string>& out) {
      auto rep = check_fs_bound(w);
      if (!rep.holds)
        out.push_back("x=" + w.text() +
                      " fs=" + std::to_string(rep.fs_count) +
                      " bound=" + rep.bound.str());
    };
  } else if (p.lemma == "fine-wilf") {
    check = [](const Word& w, std::vector<std::string>& out) {
      std::vector<std::size_t> periods;
      for (std::size_t q = 1; q <= w.size(); ++q)
        if (is_period_of(w, q)) periods.push_back(q);
      for (std::size_t a : periods)
        for (std::size_t b : periods)
          if (a + b <= w.size() + std::gcd(a, b) && !fine_wilf_holds(w, a, b))
            out.push_back("w=" + w.text() + " p=" + std::to_string(a) +
                          " q=" + std::to_string(b));
    };
  } else {
    throw std::invalid_argument("unknown lemma: " + p.lemma);
  }

  // refuse sweeps that cannot finish at a desk
  double est = 0;
  for (std::size_t len = min_len; len <= p.n_max; ++len) {
    double words = 1;
    for (std::size_t i = 0; i < len; ++i) words *= p.sigma;
    est += words;
  }
  if (est > double(1ULL << 26))
    throw std::invalid_argument("exhaustive sweep too large; lower --n-max");

  std::vector<std::string> counterexamples;
  std::uint64_t exhaustive_checked = 0;
  for (std::size_t len = min_len; len <= p.n_max; ++len)
    exhaustive_words(len, p.sigma, [&](const Word& w) {
      ++exhaustive_checked;
      check(w, counterexamples);
    });

  std::uint64_t random_checked = 0;
  if (p.samples > 0) {
    auto corpus = random_corpus({.count = p.samples,
                                 .len_min = min_len,
                                 .len_max = std::max(min_len, p.rand_len_max),
                                 .sigma_min = 2,
                                 .sigma_max = p.rand_sigma_max,
                                 .seed = p.seed});
    for (const auto& w : corpus) {
      ++random_checked;
      check(w, counterexamples);
    }
  }

  ordered_json doc;
  doc["lemma"] = p.lemma;
  doc["n_max"] = p.n_max;
  doc["sigma"] = p.sigma;
  doc["samples"] = p.samples;
  doc["seed"] = p.seed;
  doc["exhaustive_checked"] = exhaustive_checked;
  doc["random_checked"] = random_checked;
  doc["counterexamples"] = counterexamples.size();
  doc["status"] = counterexamples.empty() ? "pass" : "fail";
  doc["detail"] = counterexamples;
  emit(p.format, doc);
  return counterexamples.empty() ? kOk : kFalsified;
}

struct SearchParams {
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  int sigma = 2;
  unsigned jobs = 1;
  std::string quotient = "none";
  std::string out_path;
  std::uint64_t budget = kDefaultBudget;
  bool budget_override = false;
  std::uint64_t sample = 0;
  std::uint64_t sample_seed = 0;
};

int run_search(const SearchParams& p) {
  CampaignOptions opt;
  opt.n_min = p.n_min;
  opt.n_max = p.n_max;
  opt.out_path = p.out_path;
  opt.search.sigma = p.sigma;
  opt.search.jobs = p.jobs;
  opt.search.budget = p.budget;
  opt.search.budget_override = p.budget_override;
  opt.search.quotient.relabel = p.quotient.find("relabel") != std::string::npos;
  opt.search.quotient.reversal =
      p.quotient.find("reversal") != std::string::npos;
  if (p.sample > 0) {
    opt.search.sample = SampleMode{p.sample, p.sample_seed};
    std::cout << "non-exhaustive random sample (" << p.sample
              << " words, seed " << p.sample_seed << ")\n";
  }
  auto records = search_campaign(opt, &std::cout);
  std::cout << records.size() << " row(s) in " << p.out_path << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distinct squares in circular words (necklaces)"};
  app.require_subcommand(1);
  std::function<int()> action;

  // count
  auto* count_cmd =
      app.add_subcommand("count", "count distinct squares in a word");
  static std::string count_word;
  static bool count_circular = false, count_list = false;
  static int count_sigma = 0;
  static std::string count_format = "tsv";
  count_cmd->add_option("word", count_word, "lowercase letters")->required();
  count_cmd->add_flag("--circular", count_circular,
                      "count over all cyclic rotations (squares of length <= n)");
  count_cmd->add_flag("--list-squares", count_list, "emit the square texts");
  count_cmd->add_option("--sigma", count_sigma,
                        "alphabet size (default: inferred)");
  count_cmd->add_option("--format", count_format)
      ->check(CLI::IsMember({"tsv", "json"}));
  count_cmd->callback([&] {
    action = [] {
      return run_count(count_word, count_circular, count_list, count_sigma,
                       count_format);
    };
  });

  // family
  auto* family_cmd =
      app.add_subcommand("family", "the lower-bound family f_k and its census");
  static unsigned family_k_min = 0, family_k_max = 5;
  static std::string family_format = "tsv";
  family_cmd->add_option("--k-min", family_k_min, "first k");
  family_cmd->add_option("--k-max", family_k_max, "last k");
  family_cmd->add_option("--format", family_format)
      ->check(CLI::IsMember({"tsv", "json"}));
  family_cmd->callback([&] {
    action = [] { return run_family(family_k_min, family_k_max, family_format); };
  });

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "sweep a lemma for counterexamples");
  static VerifyParams vp;
  verify_cmd
      ->add_option("lemma", vp.lemma,
                   "two-rightmost | quarter | extend-period | fs-bound | fine-wilf")
      ->required();
  verify_cmd->add_option("--n-max", vp.n_max, "exhaustive sweep length cap");
  verify_cmd->add_option("--sigma", vp.sigma, "exhaustive sweep alphabet")
      ->check(CLI::Range(1, 26));
  verify_cmd->add_option("--samples", vp.samples, "random words to add");
  verify_cmd->add_option("--seed", vp.seed, "random corpus seed");
  verify_cmd->add_option("--rand-len-max", vp.rand_len_max,
                         "random word length cap");
  verify_cmd->add_option("--rand-sigma-max", vp.rand_sigma_max,
                         "random word alphabet cap")
      ->check(CLI::Range(2, 26));
  verify_cmd->add_option("--format", vp.format)
      ->check(CLI::IsMember({"tsv", "json"}));
  verify_cmd->callback([&] {
    action = [] { return run_verify(vp); };
  });

  // search
  auto* search_cmd = app.add_subcommand(
      "search", "exhaustive extremal search over necklaces, streamed to CSV");
  static SearchParams sp;
  search_cmd->add_option("--n-min", sp.n_min)->required();
  search_cmd->add_option("--n-max", sp.n_max)->required();
  search_cmd->add_option("--sigma", sp.sigma)->check(CLI::Range(2, 4));
  search_cmd->add_option("--jobs", sp.jobs, "worker threads")
      ->check(CLI::Range(1, 256));
  search_cmd->add_option("--quotient", sp.quotient)
      ->check(CLI::IsMember({"none", "relabel", "reversal", "relabel+reversal"}));
  search_cmd->add_option("--out", sp.out_path, "CSV output path")->required();
  search_cmd->add_option("--budget", sp.budget,
                         "max estimated necklace count per n");
  search_cmd->add_flag("--budget-override", sp.budget_override,
                       "run past the budget guard");
  search_cmd->add_option("--sample", sp.sample,
                         "non-exhaustive: sample this many words per n");
  search_cmd->add_option("--sample-seed", sp.sample_seed);
  search_cmd->callback([&] {
    action = [] { return run_search(sp); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    // a falsified structural claim (census classification, enumeration check)
    std::cerr << "FALSIFIED: " << e.what() << '\n';
    return kFalsified;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
