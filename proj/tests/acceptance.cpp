// Acceptance suite: one line of output per criterion, nonzero exit if any
// criterion fails. Exercises the core library, the C API, and the installed
// CLI binary (path via TERMEX_CLI).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"
#include "termex.h"
#include "termex/conllu.hpp"
#include "termex/evaluate.hpp"
#include "termex/extract.hpp"
#include "termex/graph.hpp"
#include "termex/normalize.hpp"
#include "termex/raw_corpus.hpp"
#include "termex/reference.hpp"
#include "termex/report.hpp"

namespace fs = std::filesystem;
using namespace termex;

namespace {

int g_failures = 0;

class Criterion {
 public:
  explicit Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& what) {
    if (!ok) problems_.push_back(what);
  }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  ~Criterion() {
    double secs = seconds();
    if (problems_.empty()) {
      std::printf("criterion %d: PASS  %s (%.2fs)\n", number_, title_.c_str(),
                  secs);
    } else {
      ++g_failures;
      std::printf("criterion %d: FAIL  %s (%.2fs)\n", number_, title_.c_str(),
                  secs);
      for (const auto& p : problems_)
        std::printf("  - %s\n", p.c_str());
    }
  }

 private:
  int number_;
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> problems_;
};

std::string data_dir() {
  const char* env = std::getenv("TERMEX_DATA");
#ifdef TERMEX_DATA_DIR
  if (env == nullptr) env = TERMEX_DATA_DIR;
#endif
  return env == nullptr ? "data" : env;
}

std::string cli_path() {
  const char* env = std::getenv("TERMEX_CLI");
#ifdef TERMEX_CLI_PATH
  if (env == nullptr) env = TERMEX_CLI_PATH;
#endif
  return env == nullptr ? "termex" : env;
}

const Normalizer& norm() {
  static const Normalizer kNorm;
  return kNorm;
}

// ---------------------------------------------------------------- 1

struct ScoreVector {
  long long tp, fp, fn;
  int precision, recall, f1;  // hundredths
};

const ScoreVector kScoreVectors[16] = {
    {391, 1105, 684, 26, 36, 30},   {236, 522, 839, 31, 22, 26},
    {979, 13710, 96, 7, 91, 12},    {600, 3231, 475, 16, 56, 24},
    {399, 1097, 873, 27, 31, 29},   {507, 251, 765, 67, 40, 50},
    {1160, 13529, 112, 8, 91, 15},  {684, 3147, 588, 18, 54, 27},
    {378, 1118, 2549, 25, 13, 17},  {216, 542, 2711, 28, 7, 12},
    {2439, 12250, 488, 17, 83, 28}, {976, 2855, 1951, 25, 33, 29},
    {748, 748, 3518, 50, 18, 26},   {547, 211, 3719, 72, 13, 22},
    {3606, 11083, 660, 25, 85, 38}, {1653, 2178, 2613, 43, 39, 41},
};

void criterion_1() {
  Criterion c(1, "frozen count triples reproduce all 48 scores");
  for (const ScoreVector& row : kScoreVectors) {
    ConfusionCounts counts;
    counts.tp = row.tp;
    counts.fp = row.fp;
    counts.fn = row.fn;
    EvalScores s = metrics(counts);
    auto close = [](double got, int centi) {
      return std::fabs(got - centi / 100.0) <= 0.005 + 1e-12;
    };
    std::string label = "(" + std::to_string(row.tp) + "," +
                        std::to_string(row.fp) + "," + std::to_string(row.fn) +
                        ")";
    c.require(close(s.precision, row.precision) &&
                  round_half_away(s.precision) == row.precision,
              label + " precision");
    c.require(close(s.recall, row.recall) &&
                  round_half_away(s.recall) == row.recall,
              label + " recall");
    c.require(close(s.f1, row.f1) && round_half_away(s.f1) == row.f1,
              label + " f1");
  }
}

// ---------------------------------------------------------------- 2

std::string random_phrase(std::mt19937& rng) {
  static const std::string kChars = "abcdefg THEof()[]the ,.-s ies";
  std::uniform_int_distribution<std::size_t> pick(0, kChars.size() - 1);
  std::uniform_int_distribution<int> len(0, 24);
  std::string out;
  int n = len(rng);
  for (int i = 0; i < n; ++i) out.push_back(kChars[pick(rng)]);
  return out;
}

Corpus random_noun_corpus(std::mt19937& rng) {
  std::uniform_int_distribution<int> sents(1, 3);
  std::vector<std::vector<helpers::Tok>> rows;
  int ns = sents(rng);
  for (int s = 0; s < ns; ++s) {
    std::vector<helpers::Tok> row;
    for (auto& w : helpers::random_keys(rng, 6)) row.push_back({w, w, "NOUN"});
    if (row.empty()) row.push_back({"pad", "pad", "NOUN"});
    rows.push_back(row);
  }
  return helpers::make_corpus(rows);
}

void criterion_2() {
  Criterion c(2, "module invariants hold on 1000+ random instances each");
  std::mt19937 rng(20260808);

  // Extractive filter: containment and idempotence.
  for (int i = 0; i < 1000; ++i) {
    Corpus corpus = random_noun_corpus(rng);
    TermList list = helpers::make_list("ref", helpers::random_keys(rng, 8));
    FilterResult once = extractive_filter(list, corpus, norm());
    bool contained = true;
    for (const auto& [key, term] : once.kept.terms())
      contained = contained && list.contains(key);
    c.require(contained, "filter output must be a subset of its input");
    c.require(once.kept.size() + once.removed.size() == list.size(),
              "filter must partition its input");
    FilterResult twice = extractive_filter(once.kept, corpus, norm());
    c.require(twice.kept == once.kept && twice.removed.empty(),
              "filter must be idempotent");
    if (!contained) break;
  }

  // Normalization: idempotence and case invariance.
  for (int i = 0; i < 1000; ++i) {
    std::string phrase = random_phrase(rng);
    auto once = norm().key_for_phrase(phrase);
    if (once) {
      c.require(norm().key_for_phrase(*once) == *once,
                "normalize must be idempotent: '" + phrase + "'");
    }
    std::string upper = phrase;
    for (char& ch : upper)
      ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    c.require(norm().key_for_phrase(phrase) == norm().key_for_phrase(upper),
              "normalize must be case-invariant: '" + phrase + "'");
  }

  // Metric bounds.
  std::uniform_int_distribution<long long> count(0, 10000);
  for (int i = 0; i < 1000; ++i) {
    ConfusionCounts counts;
    counts.tp = count(rng);
    counts.fp = count(rng);
    counts.fn = count(rng);
    EvalScores s = metrics(counts);
    bool bounded = s.precision >= 0 && s.precision <= 1 && s.recall >= 0 &&
                   s.recall <= 1 && s.f1 >= 0 && s.f1 <= 1;
    c.require(bounded, "scores must lie in [0,1]");
    if (s.precision + s.recall > 0) {
      c.require(s.f1 >= std::min(s.precision, s.recall) - 1e-12 &&
                    s.f1 <= std::max(s.precision, s.recall) + 1e-12,
                "f1 must sit between precision and recall");
    }
  }

  // Confusion count identities.
  for (int i = 0; i < 1000; ++i) {
    TermList pred = helpers::make_list("pred", helpers::random_keys(rng, 10));
    TermList ref = helpers::make_list("ref", helpers::random_keys(rng, 10));
    ConfusionCounts counts = confusion(pred, ref);
    c.require(counts.tp + counts.fp == static_cast<long long>(pred.size()),
              "tp + fp must equal the prediction size");
    c.require(counts.tp + counts.fn == static_cast<long long>(ref.size()),
              "tp + fn must equal the reference size");
  }

  // Union precision monotonicity.
  for (int i = 0; i < 1000; ++i) {
    TermList pred = helpers::make_list("pred", helpers::random_keys(rng, 10));
    TermList r1 = helpers::make_list("r1", helpers::random_keys(rng, 10));
    TermList r2 = helpers::make_list("r2", helpers::random_keys(rng, 10));
    TermList u = combine({&r1, &r2}, CombineMode::Union, "u");
    double pu = metrics(confusion(pred, u)).precision;
    c.require(pu >= metrics(confusion(pred, r1)).precision - 1e-12 &&
                  pu >= metrics(confusion(pred, r2)).precision - 1e-12,
              "union reference must not lower precision");
    c.require(confusion(pred, u).tp >= confusion(pred, r1).tp,
              "union reference must not lower tp");
  }

  // Overlap partition sum.
  std::uniform_int_distribution<int> nlists(2, 6);
  for (int i = 0; i < 1000; ++i) {
    int n = nlists(rng);
    std::vector<TermList> lists;
    for (int k = 0; k < n; ++k)
      lists.push_back(helpers::make_list("L" + std::to_string(k),
                                         helpers::random_keys(rng, 10)));
    std::vector<const TermList*> ptrs;
    for (const auto& l : lists) ptrs.push_back(&l);
    OverlapReport report = overlap_regions(ptrs);
    std::size_t union_size = 0;
    {
      std::map<std::string, bool> seen;
      for (const auto& l : lists)
        for (const auto& [key, term] : l.terms()) seen[key] = true;
      union_size = seen.size();
    }
    c.require(report.union_size() == union_size,
              "region sizes must sum to the union size");
  }

  c.require(c.seconds() < 60.0, "runtime must stay under 60s");
}

// ---------------------------------------------------------------- 3

void criterion_3() {
  Criterion c(3, "ranking matches a dense oracle; isolated nodes score 1-d");
  std::mt19937 rng(7177);
  std::uniform_int_distribution<std::size_t> node_count(1, 10);
  std::uniform_int_distribution<int> weight(1, 9);
  std::uniform_int_distribution<int> coin(0, 2);

  for (int round = 0; round < 200; ++round) {
    std::size_t n = node_count(rng);
    CandidateGraph g;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("n" + std::to_string(i));
      g.nodes.insert(names.back());
    }
    std::vector<oracles::DenseEdge> dense;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (coin(rng) != 0) continue;
        long long w = weight(rng);
        g.edges[{names[i], names[j]}] = w;
        dense.push_back({i, j, static_cast<double>(w)});
      }
    }
    RankParams params;
    params.tolerance = 1e-12;
    params.max_iterations = 5000;
    RankResult got = rank_nodes(g, params);
    std::vector<double> want = oracles::dense_rank(
        n, dense, params.damping, params.tolerance, params.max_iterations);
    for (std::size_t i = 0; i < n; ++i) {
      double gap = std::fabs(got.scores.at(names[i]) - want[i]);
      c.require(gap <= 1e-8, "oracle gap " + std::to_string(gap) + " at node " +
                                 names[i]);
    }
  }

  CandidateGraph isolated;
  isolated.nodes.insert("solo");
  RankParams params;
  RankResult got = rank_nodes(isolated, params);
  c.require(got.scores.at("solo") == 1.0 - params.damping,
            "isolated node must score exactly 1-d");
  c.require(c.seconds() < 10.0, "runtime must stay under 10s");
}

// ---------------------------------------------------------------- 4

void criterion_4() {
  Criterion c(4, "confusion and overlap match naive enumeration oracles");
  std::mt19937 rng(9317);
  std::uniform_int_distribution<int> nlists(2, 6);
  for (int round = 0; round < 500; ++round) {
    // Confusion.
    TermList pred = helpers::make_list("pred", helpers::random_keys(rng, 12));
    TermList ref = helpers::make_list("ref", helpers::random_keys(rng, 12));
    ConfusionCounts counts = confusion(pred, ref);
    oracles::NaiveConfusion naive =
        oracles::naive_confusion(pred.keys(), ref.keys());
    c.require(counts.tp == static_cast<long long>(naive.tp.size()) &&
                  counts.fp == static_cast<long long>(naive.fp.size()) &&
                  counts.fn == static_cast<long long>(naive.fn.size()),
              "confusion must match the naive oracle");

    // Overlap.
    int n = nlists(rng);
    std::vector<TermList> lists;
    std::vector<std::vector<std::string>> raw;
    for (int k = 0; k < n; ++k) {
      lists.push_back(helpers::make_list("L" + std::to_string(k),
                                         helpers::random_keys(rng, 10)));
      raw.push_back(lists.back().keys());
    }
    std::vector<const TermList*> ptrs;
    for (const auto& l : lists) ptrs.push_back(&l);
    OverlapReport report = overlap_regions(ptrs);
    auto expected = oracles::naive_overlap(raw);
    bool match = true;
    for (const auto& region : report.regions) {
      auto it = expected.find(region.mask);
      std::size_t want = it == expected.end() ? 0 : it->second;
      if (region.size() != want) match = false;
    }
    c.require(match, "overlap regions must match the naive oracle");
  }
  c.require(c.seconds() < 10.0, "runtime must stay under 10s");
}

// ---------------------------------------------------------------- 5

int run_cli(const std::string& args) {
  std::string cmd = "\"" + cli_path() + "\" " + args;
  return std::system(cmd.c_str());
}

std::map<std::string, std::string> read_dir(const fs::path& dir) {
  std::map<std::string, std::string> files;
  if (!fs::exists(dir)) return files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    files[entry.path().filename().string()] = buf.str();
  }
  return files;
}

void criterion_5() {
  Criterion c(5, "pipeline runs are byte-identical and match the goldens");
  const std::string config = data_dir() + "/mini/pipeline.cfg";
  const fs::path tmp = fs::temp_directory_path() / "termex_acceptance";
  std::error_code ec;
  fs::remove_all(tmp, ec);
  const fs::path run1 = tmp / "run1";
  const fs::path run2 = tmp / "run2";

  int rc1 = run_cli("pipeline --config \"" + config + "\" --out-dir \"" +
                    run1.string() + "\"");
  int rc2 = run_cli("pipeline --config \"" + config + "\" --out-dir \"" +
                    run2.string() + "\" --workers 4");
  c.require(rc1 == 0, "first pipeline run must exit 0");
  c.require(rc2 == 0, "second pipeline run must exit 0");

  auto a = read_dir(run1);
  auto b = read_dir(run2);
  c.require(!a.empty(), "pipeline must produce outputs");
  c.require(a == b, "two runs must be byte-identical (regardless of workers)");

  auto golden = read_dir(data_dir() + "/golden/pipeline");
  c.require(!golden.empty(), "golden pipeline outputs must be present");
  if (!golden.empty()) {
    bool same_names = true;
    for (const auto& [name, content] : golden) {
      auto it = a.find(name);
      if (it == a.end()) {
        c.require(false, "missing output " + name);
        same_names = false;
        continue;
      }
      if (it->second != content)
        c.require(false, "output differs from golden: " + name);
    }
    c.require(a.size() == golden.size(),
              "output set must match the golden set");
    (void)same_names;
  }

  fs::remove_all(tmp, ec);
  c.require(c.seconds() < 5.0, "runtime must stay under 5s");
}

// ---------------------------------------------------------------- 6

void criterion_6() {
  Criterion c(6, "CoNLL-U parse/write round trip on the 100-sentence fixture");
  const std::string path = data_dir() + "/fixtures/roundtrip_100.conllu";
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    c.require(false, e.what());
    return;
  }
  Corpus first = parse_conllu(text).corpus;
  c.require(first.sentence_count() == 100, "fixture must hold 100 sentences");
  std::string write1 = write_conllu(first);
  Corpus second = parse_conllu(write1).corpus;
  c.require(same_content(first, second), "parse-write-parse must be identity");
  std::string write2 = write_conllu(second);
  c.require(write1 == write2, "second write must be byte-identical");
}

// ---------------------------------------------------------------- 7

void criterion_7() {
  Criterion c(7, "(co) terms: filtered out by default, recovered by expand");
  const char* conllu =
      "# newdoc id = d\n"
      "1\thomology\thomology\tNOUN\t_\t_\t_\t_\t_\t_\n"
      "2\tand\tand\tCCONJ\t_\t_\t_\t_\t_\t_\n"
      "3\tcohomology\tcohomology\tNOUN\t_\t_\t_\t_\t_\t_\n"
      "\n";
  Corpus corpus = parse_conllu(conllu).corpus;

  ImportResult plain = import_term_list("(co)homology\n", "ref", norm());
  c.require(plain.list.size() == 1 && plain.list.contains("(co)homology"),
            "without expansion the term stays opaque");
  FilterResult filtered = extractive_filter(plain.list, corpus, norm());
  c.require(filtered.kept.empty(), "opaque (co) term must be filtered out");
  c.require(filtered.removed.contains("(co)homology"),
            "filter report must show the removal");

  NormalizeOptions opts;
  opts.expand_co = true;
  Normalizer expander(opts);
  ImportResult expanded = import_term_list("(co)homology\n", "ref", expander);
  c.require(expanded.list.size() == 2 && expanded.list.contains("homology") &&
                expanded.list.contains("cohomology"),
            "expansion must yield both variants");
  FilterResult kept = extractive_filter(expanded.list, corpus, expander);
  c.require(kept.kept.size() == 2, "both variants must survive the filter");

  // The same behavior through the C API's expand_co option.
  termex_opts* copts = termex_opts_new();
  termex_opts_set(copts, "expand_co", "true");
  char* key = nullptr;
  termex_normalize(copts, "(co)homology", &key);
  c.require(key != nullptr && std::string(key) == "(co)homology",
            "single-key normalize stays opaque even when expansion is on");
  termex_string_free(key);
  termex_opts_free(copts);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
