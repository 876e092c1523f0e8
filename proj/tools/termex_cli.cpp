/* Copyright 2026 The termex authors. All rights reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Command-line front end. Everything here goes through the C API in
// termex.h; the core library is never linked directly.

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "termex.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

[[noreturn]] void usage_error(const std::string& what) {
  throw CliError(kExitUsage, what);
}

[[noreturn]] void data_error(const std::string& what) {
  throw CliError(kExitData, what);
}

// Maps a C API failure to the exit-code scheme: bad options/config are usage
// errors, unreadable or malformed data is a data error.
[[noreturn]] void api_error(termex_status status) {
  std::string message = termex_last_error();
  if (status == TERMEX_ERR_INVALID) usage_error(message);
  data_error(message);
}

void check(termex_status status) {
  if (status != TERMEX_OK) api_error(status);
}

struct StringDeleter {
  void operator()(char* s) const { termex_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct OptsDeleter {
  void operator()(termex_opts* o) const { termex_opts_free(o); }
};
using Opts = std::unique_ptr<termex_opts, OptsDeleter>;

struct CorpusDeleter {
  void operator()(termex_corpus* c) const { termex_corpus_free(c); }
};
using CorpusHandle = std::unique_ptr<termex_corpus, CorpusDeleter>;

struct ListDeleter {
  void operator()(termex_termlist* l) const { termex_termlist_free(l); }
};
using ListHandle = std::unique_ptr<termex_termlist, ListDeleter>;

struct MatrixDeleter {
  void operator()(termex_matrix* m) const { termex_matrix_free(m); }
};
using MatrixHandle = std::unique_ptr<termex_matrix, MatrixDeleter>;

struct OverlapDeleter {
  void operator()(termex_overlap* o) const { termex_overlap_free(o); }
};
using OverlapHandle = std::unique_ptr<termex_overlap, OverlapDeleter>;

int g_verbosity = 1;  // 0 quiet, 1 normal, 2 verbose

void note(const std::string& line) {
  if (g_verbosity >= 1) std::cerr << line << "\n";
}

void drain_warnings() {
  ApiString warnings(termex_take_warnings());
  if (warnings && g_verbosity >= 1) {
    std::istringstream in(warnings.get());
    std::string line;
    while (std::getline(in, line)) std::cerr << "warning: " << line << "\n";
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) data_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void require_exists(const std::string& path, const std::string& flag) {
  if (!fs::exists(path))
    usage_error(flag + ": path does not exist: " + path);
}

// Tracks files this run created so a failed run does not leave partial
// output behind.
class OutputTracker {
 public:
  void write(const std::string& path, std::string_view content) {
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) data_error("cannot write file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) data_error("write failed: " + path);
    written_.push_back(path);
    note("wrote " + path);
  }

  void discard_all() {
    for (const auto& path : written_) {
      std::error_code ec;
      fs::remove(path, ec);
    }
    written_.clear();
  }

  const std::vector<std::string>& written() const { return written_; }

 private:
  std::vector<std::string> written_;
};

void write_output(const std::string& path, std::string_view content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) data_error("cannot write file: " + path);
  out << content;
  if (!out) data_error("write failed: " + path);
  note("wrote " + path);
}

// Normalization and cleaning flags shared by several subcommands.
struct CommonOpts {
  std::string math;
  std::string placeholder_token;
  std::string stopwords;
  bool expand_co = false;

  void add_flags(CLI::App* cmd, bool with_math) {
    if (with_math) {
      cmd->add_option("--math", math,
                      "Math handling: delete or placeholder");
      cmd->add_option("--placeholder-token", placeholder_token,
                      "Token replacing math segments (default MATH)");
    }
    cmd->add_option("--stopwords", stopwords,
                    "Stop-word list file overriding the built-in list");
    cmd->add_flag("--expand-co", expand_co,
                  "Expand (co) shorthand into both variants");
  }

  void apply(termex_opts* opts) const {
    if (!math.empty()) check(termex_opts_set(opts, "math", math.c_str()));
    if (!placeholder_token.empty())
      check(termex_opts_set(opts, "placeholder_token",
                            placeholder_token.c_str()));
    if (!stopwords.empty()) {
      require_exists(stopwords, "--stopwords");
      check(termex_opts_set(opts, "stopwords", stopwords.c_str()));
    }
    if (expand_co) check(termex_opts_set(opts, "expand_co", "true"));
  }
};

Opts make_opts() {
  Opts opts(termex_opts_new());
  if (!opts) data_error("out of memory");
  return opts;
}

CorpusHandle load_corpus(const termex_opts* opts, const std::string& path) {
  termex_corpus* raw = nullptr;
  if (path.size() >= 6 && path.substr(path.size() - 6) == ".jsonl") {
    check(termex_corpus_read_jsonl(opts, path.c_str(), &raw));
  } else {
    check(termex_corpus_read_conllu(path.c_str(), &raw));
  }
  drain_warnings();
  return CorpusHandle(raw);
}

ListHandle import_list(const termex_opts* opts, const std::string& path,
                       const std::string& name) {
  termex_termlist* raw = nullptr;
  check(termex_termlist_read(opts, path.c_str(), name.c_str(), &raw));
  drain_warnings();
  return ListHandle(raw);
}

std::pair<std::string, std::string> split_name_path(const std::string& spec,
                                                    const char* flag) {
  std::size_t eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
    usage_error(std::string(flag) + " expects NAME=FILE, got '" + spec + "'");
  return {spec.substr(0, eq), spec.substr(eq + 1)};
}

// Flat key = value configuration files ('#' comments). Used both for
// pipeline configs and for --params files.
std::vector<std::pair<std::string, std::string>> parse_keyvalue(
    const std::string& text, const std::string& origin) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto trim = [](std::string s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
      s.erase(0, 1);
    while (!s.empty() &&
           (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
      s.pop_back();
    return s;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::size_t eq = trimmed.find('=');
    if (eq == std::string::npos)
      usage_error(origin + " line " + std::to_string(line_no) +
                  ": expected key = value");
    std::string key = trim(trimmed.substr(0, eq));
    std::string value = trim(trimmed.substr(eq + 1));
    if (key.empty())
      usage_error(origin + " line " + std::to_string(line_no) + ": empty key");
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string piece = comma == std::string::npos
                            ? s.substr(start)
                            : s.substr(start, comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.erase(0, 1);
    while (!piece.empty() && piece.back() == ' ') piece.pop_back();
    if (!piece.empty()) out.push_back(std::move(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// clean

struct CleanArgs {
  std::string in;
  std::string out;
  CommonOpts common;
};

int run_clean(const CleanArgs& args) {
  require_exists(args.in, "--in");
  Opts opts = make_opts();
  args.common.apply(opts.get());
  CorpusHandle corpus = load_corpus(opts.get(), args.in);
  char* text = nullptr;
  check(termex_corpus_write_conllu(corpus.get(), &text));
  ApiString owned(text);
  write_output(args.out, owned.get());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// extract

struct ExtractArgs {
  std::string method;
  std::string corpus;
  std::string gazetteer;
  std::string params;
  std::string out;
  CommonOpts common;
};

ListHandle run_extractor(const termex_opts* opts, const termex_corpus* corpus,
                         const std::string& method,
                         const termex_termlist* gazetteer) {
  termex_termlist* raw = nullptr;
  if (method == "textrank") {
    check(termex_extract_textrank(opts, corpus, &raw));
  } else if (method == "chunker") {
    check(termex_extract_chunker(opts, corpus, &raw));
  } else if (method == "gazetteer") {
    if (gazetteer == nullptr)
      usage_error("method 'gazetteer' requires --gazetteer=FILE");
    check(termex_extract_gazetteer(opts, corpus, gazetteer, &raw));
  } else {
    usage_error("unknown method '" + method +
                "' (expected textrank, chunker, or gazetteer)");
  }
  drain_warnings();
  return ListHandle(raw);
}

int run_extract(const ExtractArgs& args) {
  require_exists(args.corpus, "--corpus");
  Opts opts = make_opts();
  args.common.apply(opts.get());
  if (!args.params.empty()) {
    require_exists(args.params, "--params");
    for (const auto& [key, value] :
         parse_keyvalue(read_text_file(args.params), args.params)) {
      check(termex_opts_set(opts.get(), key.c_str(), value.c_str()));
    }
  }
  CorpusHandle corpus = load_corpus(opts.get(), args.corpus);
  ListHandle gazetteer;
  if (!args.gazetteer.empty()) {
    require_exists(args.gazetteer, "--gazetteer");
    gazetteer = import_list(opts.get(), args.gazetteer, "gazetteer");
  }
  ListHandle result = run_extractor(opts.get(), corpus.get(), args.method,
                                    gazetteer.get());
  char* rendered = nullptr;
  check(termex_termlist_render(result.get(), &rendered));
  ApiString owned(rendered);
  write_output(args.out, owned.get());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// build-ref

struct BuildRefArgs {
  std::string source;
  std::string corpus;
  std::string titles;
  std::string out;
  std::string report;
  bool filter = false;
  CommonOpts common;
};

ListHandle build_reference(const termex_opts* opts,
                           const termex_corpus* corpus,
                           const std::string& source,
                           const std::string& titles) {
  termex_termlist* raw = nullptr;
  if (source == "keywords") {
    if (corpus == nullptr) usage_error("source 'keywords' requires --corpus");
    check(termex_ref_author_keywords(opts, corpus, &raw));
  } else if (source == "wiki") {
    if (titles.empty()) usage_error("source 'wiki' requires --titles=FILE");
    check(termex_ref_wiki_titles(opts, titles.c_str(), &raw));
  } else if (source == "nounphrases") {
    if (corpus == nullptr)
      usage_error("source 'nounphrases' requires --corpus");
    check(termex_ref_noun_phrases(opts, corpus, &raw));
  } else {
    usage_error("unknown source '" + source +
                "' (expected keywords, wiki, or nounphrases)");
  }
  drain_warnings();
  return ListHandle(raw);
}

int run_build_ref(const BuildRefArgs& args) {
  Opts opts = make_opts();
  args.common.apply(opts.get());
  CorpusHandle corpus;
  if (!args.corpus.empty()) {
    require_exists(args.corpus, "--corpus");
    corpus = load_corpus(opts.get(), args.corpus);
  }
  if (!args.titles.empty()) require_exists(args.titles, "--titles");
  ListHandle ref = build_reference(opts.get(), corpus.get(), args.source,
                                   args.titles);
  if (args.filter || !args.report.empty()) {
    if (!corpus) usage_error("--filter requires --corpus");
    termex_termlist* kept = nullptr;
    char* report = nullptr;
    check(termex_filter_extractive(opts.get(), ref.get(), corpus.get(), &kept,
                                   args.report.empty() ? nullptr : &report));
    ref.reset(kept);
    if (report != nullptr) {
      ApiString owned(report);
      write_output(args.report, owned.get());
    }
  }
  char* rendered = nullptr;
  check(termex_termlist_render(ref.get(), &rendered));
  ApiString owned(rendered);
  write_output(args.out, owned.get());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateArgs {
  std::string corpus;
  std::vector<std::string> preds;  // NAME=FILE
  std::vector<std::string> refs;   // keywords | wiki | nounphrases | NAME=FILE
  std::string titles;
  std::string combine;
  std::string format = "markdown";
  std::string out;
  std::string details;
  CommonOpts common;
};

int run_evaluate(const EvaluateArgs& args) {
  require_exists(args.corpus, "--corpus");
  Opts opts = make_opts();
  args.common.apply(opts.get());
  CorpusHandle corpus = load_corpus(opts.get(), args.corpus);

  std::vector<std::pair<std::string, ListHandle>> preds;
  for (const std::string& spec : args.preds) {
    auto [name, path] = split_name_path(spec, "--pred");
    require_exists(path, "--pred");
    preds.emplace_back(name, import_list(opts.get(), path, name));
  }
  if (preds.empty()) usage_error("at least one --pred NAME=FILE is required");

  std::vector<ListHandle> refs;
  for (const std::string& spec : args.refs) {
    if (spec == "keywords" || spec == "wiki" || spec == "nounphrases") {
      refs.push_back(build_reference(opts.get(), corpus.get(), spec,
                                     args.titles));
    } else {
      auto [name, path] = split_name_path(spec, "--ref");
      require_exists(path, "--ref");
      refs.push_back(import_list(opts.get(), path, name));
    }
  }
  if (refs.empty()) usage_error("at least one --ref is required");

  ListHandle reference;
  if (refs.size() == 1) {
    if (!args.combine.empty())
      usage_error("--combine needs at least two --ref");
    reference = std::move(refs.front());
  } else {
    if (args.combine.empty())
      usage_error("multiple --ref require --combine=union|intersection "
                  "(or use the pipeline command)");
    std::vector<const termex_termlist*> raw;
    for (const auto& r : refs) raw.push_back(r.get());
    termex_termlist* combined = nullptr;
    check(termex_combine(raw.data(), raw.size(), args.combine.c_str(),
                         "combined", &combined));
    reference = ListHandle(combined);
  }

  MatrixHandle matrix;
  {
    termex_matrix* m = nullptr;
    check(termex_matrix_new(termex_termlist_name(reference.get()), &m));
    matrix = MatrixHandle(m);
  }
  nlohmann::ordered_json details = nlohmann::ordered_json::array();
  for (const auto& [name, pred] : preds) {
    char* result = nullptr;
    check(termex_evaluate(opts.get(), pred.get(), reference.get(),
                          corpus.get(), &result));
    ApiString owned(result);
    check(termex_matrix_add_result(matrix.get(), owned.get()));
    details.push_back(nlohmann::ordered_json::parse(owned.get()));
  }
  char* table = nullptr;
  check(termex_matrix_render(matrix.get(), args.format.c_str(), &table));
  ApiString owned(table);
  write_output(args.out, owned.get());
  if (!args.details.empty())
    write_output(args.details, details.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// overlap

struct OverlapArgs {
  std::vector<std::string> lists;  // NAME=FILE
  std::string format = "markdown";
  std::string out;
  CommonOpts common;
};

int run_overlap(const OverlapArgs& args) {
  if (args.lists.size() < 2 || args.lists.size() > 6)
    usage_error("overlap needs between 2 and 6 --list NAME=FILE options");
  Opts opts = make_opts();
  args.common.apply(opts.get());
  std::vector<ListHandle> lists;
  for (const std::string& spec : args.lists) {
    auto [name, path] = split_name_path(spec, "--list");
    require_exists(path, "--list");
    lists.push_back(import_list(opts.get(), path, name));
  }
  std::vector<const termex_termlist*> raw;
  for (const auto& l : lists) raw.push_back(l.get());
  termex_overlap* overlap = nullptr;
  check(termex_overlap_compute(raw.data(), raw.size(), &overlap));
  OverlapHandle owned_overlap(overlap);
  char* rendered = nullptr;
  check(termex_overlap_render(owned_overlap.get(), args.format.c_str(),
                              &rendered));
  ApiString owned(rendered);
  write_output(args.out, owned.get());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// pipeline

struct PipelineConfig {
  std::string corpus;
  std::vector<std::string> extractors;
  std::string gazetteer;
  std::vector<std::pair<std::string, std::string>> imports;  // name, path
  std::vector<std::string> references;
  std::string titles;
  std::string combined = "union";
  std::string format = "markdown";
  std::string out_dir = "results";
  int workers = 1;
  std::string raw_text;  // config file bytes, for the manifest digest
  Opts opts;
};

PipelineConfig parse_pipeline_config(const std::string& path) {
  PipelineConfig cfg;
  cfg.opts = make_opts();
  cfg.raw_text = read_text_file(path);
  // Input paths in the config resolve against the config file's directory,
  // so a committed config works from any working directory. out_dir stays
  // relative to the caller.
  const fs::path base = fs::path(path).parent_path();
  auto resolve = [&](const std::string& p) {
    if (p.empty() || fs::path(p).is_absolute() || base.empty()) return p;
    return (base / p).string();
  };
  std::set<std::string> seen;
  for (const auto& [key, value] : parse_keyvalue(cfg.raw_text, path)) {
    if (!seen.insert(key).second)
      usage_error(path + ": duplicate key '" + key + "'");
    if (key == "corpus") {
      cfg.corpus = resolve(value);
    } else if (key == "extractors") {
      cfg.extractors = split_commas(value);
    } else if (key == "gazetteer") {
      cfg.gazetteer = resolve(value);
    } else if (key == "imports") {
      for (const std::string& item : split_commas(value)) {
        auto [name, import_path] = split_name_path(item, "imports");
        cfg.imports.emplace_back(name, resolve(import_path));
      }
    } else if (key == "references") {
      cfg.references = split_commas(value);
    } else if (key == "titles") {
      cfg.titles = resolve(value);
    } else if (key == "combined") {
      if (value != "union" && value != "intersection" && value != "none")
        usage_error(path + ": combined must be union, intersection, or none");
      cfg.combined = value;
    } else if (key == "format") {
      if (value != "markdown" && value != "csv" && value != "json")
        usage_error(path + ": format must be markdown, csv, or json");
      cfg.format = value;
    } else if (key == "out_dir") {
      cfg.out_dir = value;
    } else if (key == "workers") {
      try {
        cfg.workers = std::stoi(value);
      } catch (const std::exception&) {
        usage_error(path + ": workers must be an integer");
      }
      if (cfg.workers < 1 || cfg.workers > 64)
        usage_error(path + ": workers must be between 1 and 64");
    } else if (key == "log") {
      if (value == "quiet") g_verbosity = 0;
      else if (value == "normal") g_verbosity = 1;
      else if (value == "verbose") g_verbosity = 2;
      else usage_error(path + ": log must be quiet, normal, or verbose");
    } else {
      // Anything else must be a library option; unknown keys are rejected
      // by termex_opts_set.
      std::string v = key == "stopwords" ? resolve(value) : value;
      termex_status status =
          termex_opts_set(cfg.opts.get(), key.c_str(), v.c_str());
      if (status != TERMEX_OK)
        usage_error(path + ": " + termex_last_error());
    }
  }
  if (cfg.corpus.empty()) usage_error(path + ": missing 'corpus'");
  if (cfg.extractors.empty() && cfg.imports.empty())
    usage_error(path + ": no extractors or imports selected");
  if (cfg.references.empty())
    usage_error(path + ": no references selected");
  return cfg;
}

std::string table_extension(const std::string& format) {
  if (format == "markdown") return ".md";
  if (format == "csv") return ".csv";
  return ".json";
}

int run_pipeline(const std::string& config_path, const std::string& out_dir,
                 int workers_override) {
  require_exists(config_path, "--config");
  PipelineConfig cfg = parse_pipeline_config(config_path);
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  if (workers_override > 0) cfg.workers = workers_override;

  require_exists(cfg.corpus, "corpus");
  if (!cfg.gazetteer.empty()) require_exists(cfg.gazetteer, "gazetteer");
  if (!cfg.titles.empty()) require_exists(cfg.titles, "titles");
  for (const auto& [name, path] : cfg.imports) require_exists(path, "imports");

  const bool created_dir = !fs::exists(cfg.out_dir);
  OutputTracker outputs;
  try {
    CorpusHandle corpus = load_corpus(cfg.opts.get(), cfg.corpus);

    // Prediction lists, in config order.
    std::vector<std::pair<std::string, ListHandle>> preds;
    std::set<std::string> pred_names;
    ListHandle gazetteer;
    if (!cfg.gazetteer.empty())
      gazetteer = import_list(cfg.opts.get(), cfg.gazetteer, "gazetteer");
    for (const std::string& method : cfg.extractors) {
      if (!pred_names.insert(method).second)
        usage_error("duplicate extractor '" + method + "'");
      preds.emplace_back(method,
                         run_extractor(cfg.opts.get(), corpus.get(), method,
                                       gazetteer.get()));
    }
    for (const auto& [name, path] : cfg.imports) {
      if (!pred_names.insert(name).second)
        usage_error("import name '" + name + "' collides with an extractor");
      preds.emplace_back(name, import_list(cfg.opts.get(), path, name));
    }

    // Reference lists, in config order, plus the optional combination.
    std::vector<std::pair<std::string, ListHandle>> refs;
    std::set<std::string> ref_names;
    for (const std::string& source : cfg.references) {
      if (!ref_names.insert(source).second)
        usage_error("duplicate reference '" + source + "'");
      refs.emplace_back(source,
                        build_reference(cfg.opts.get(), corpus.get(), source,
                                        cfg.titles));
    }
    if (cfg.combined != "none" && refs.size() >= 2) {
      std::vector<const termex_termlist*> raw;
      for (const auto& [name, ref] : refs) raw.push_back(ref.get());
      termex_termlist* combined = nullptr;
      check(termex_combine(raw.data(), raw.size(), cfg.combined.c_str(),
                           "combined", &combined));
      refs.emplace_back("combined", ListHandle(combined));
    }

    // Every (prediction x reference) evaluation, parallel but ordered.
    struct Job {
      std::size_t pred;
      std::size_t ref;
    };
    std::vector<Job> jobs;
    for (std::size_t p = 0; p < preds.size(); ++p)
      for (std::size_t r = 0; r < refs.size(); ++r) jobs.push_back({p, r});
    std::vector<std::string> job_results(jobs.size());
    std::vector<std::string> job_errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= jobs.size()) return;
        char* result = nullptr;
        termex_status status =
            termex_evaluate(cfg.opts.get(), preds[jobs[i].pred].second.get(),
                            refs[jobs[i].ref].second.get(), corpus.get(),
                            &result);
        if (status != TERMEX_OK) {
          job_errors[i] = termex_last_error();
          continue;
        }
        ApiString owned(result);
        job_results[i] = owned.get();
      }
    };
    const std::size_t n_threads =
        std::min<std::size_t>(cfg.workers, std::max<std::size_t>(jobs.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      if (!job_errors[i].empty()) data_error(job_errors[i]);
    }

    // One results table per reference, columns in extractor-name order.
    for (std::size_t r = 0; r < refs.size(); ++r) {
      termex_matrix* m = nullptr;
      check(termex_matrix_new(refs[r].first.c_str(), &m));
      MatrixHandle matrix(m);
      for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (jobs[i].ref != r) continue;
        check(termex_matrix_add_result(matrix.get(), job_results[i].c_str()));
      }
      char* table = nullptr;
      check(termex_matrix_render(matrix.get(), cfg.format.c_str(), &table));
      ApiString owned(table);
      outputs.write(cfg.out_dir + "/table_" + refs[r].first +
                        table_extension(cfg.format),
                    owned.get());
    }

    // Per-pair details in (extractor, reference) order.
    {
      std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>>
          order;
      for (std::size_t i = 0; i < jobs.size(); ++i)
        order.push_back(
            {{preds[jobs[i].pred].first, refs[jobs[i].ref].first}, i});
      std::sort(order.begin(), order.end());
      nlohmann::ordered_json details = nlohmann::ordered_json::array();
      for (const auto& [names, i] : order)
        details.push_back(nlohmann::ordered_json::parse(job_results[i]));
      outputs.write(cfg.out_dir + "/details.json", details.dump(2) + "\n");
    }

    // Extracted term lists.
    for (const auto& [name, pred] : preds) {
      char* rendered = nullptr;
      check(termex_termlist_render(pred.get(), &rendered));
      ApiString owned(rendered);
      outputs.write(cfg.out_dir + "/terms_" + name + ".txt", owned.get());
    }

    // Filtered reference lists, their filter reports, and their profiles.
    nlohmann::ordered_json ref_summary = nlohmann::ordered_json::array();
    for (const auto& [name, ref] : refs) {
      termex_termlist* kept = nullptr;
      char* report = nullptr;
      check(termex_filter_extractive(cfg.opts.get(), ref.get(), corpus.get(),
                                     &kept, &report));
      ListHandle kept_owned(kept);
      ApiString report_owned(report);
      char* rendered = nullptr;
      check(termex_termlist_render(kept_owned.get(), &rendered));
      ApiString rendered_owned(rendered);
      outputs.write(cfg.out_dir + "/ref_" + name + ".txt",
                    rendered_owned.get());
      outputs.write(cfg.out_dir + "/filter_" + name + ".json",
                    report_owned.get());

      nlohmann::ordered_json entry;
      entry["name"] = name;
      entry["terms"] = termex_termlist_size(ref.get());
      entry["terms_in_corpus"] = termex_termlist_size(kept_owned.get());
      int precision_reliable = 0;
      int recall_reliable = 0;
      if (termex_termlist_profile(ref.get(), &precision_reliable,
                                  &recall_reliable) == TERMEX_OK) {
        entry["precision_reliable"] = precision_reliable != 0;
        entry["recall_reliable"] = recall_reliable != 0;
        const char* note = termex_termlist_note(ref.get());
        if (note != nullptr) entry["note"] = note;
      }
      ref_summary.push_back(entry);
    }
    outputs.write(cfg.out_dir + "/references.json",
                  ref_summary.dump(2) + "\n");

    // Overlap decomposition of the filtered reference lists.
    if (refs.size() >= 2) {
      std::vector<ListHandle> filtered;
      std::vector<const termex_termlist*> raw;
      for (const auto& [name, ref] : refs) {
        if (name == "combined") continue;  // already the union of the others
        termex_termlist* kept = nullptr;
        check(termex_filter_extractive(cfg.opts.get(), ref.get(), corpus.get(),
                                       &kept, nullptr));
        filtered.push_back(ListHandle(kept));
        raw.push_back(filtered.back().get());
      }
      if (raw.size() >= 2 && raw.size() <= 6) {
        termex_overlap* overlap = nullptr;
        check(termex_overlap_compute(raw.data(), raw.size(), &overlap));
        OverlapHandle overlap_owned(overlap);
        char* rendered = nullptr;
        check(termex_overlap_render(overlap_owned.get(), cfg.format.c_str(),
                                    &rendered));
        ApiString owned(rendered);
        outputs.write(cfg.out_dir + "/overlap_references" +
                          table_extension(cfg.format),
                      owned.get());
      }
    }

    // Manifest: tool version, config digest, and a digest per output file,
    // so identical runs are byte-identical end to end.
    {
      nlohmann::ordered_json manifest;
      manifest["tool"] = "termex";
      manifest["version"] = termex_version();
      char* cfg_hash = nullptr;
      check(termex_sha256_string(cfg.raw_text.data(), cfg.raw_text.size(),
                                 &cfg_hash));
      ApiString cfg_hash_owned(cfg_hash);
      manifest["config_sha256"] = cfg_hash_owned.get();
      manifest["stopwords_sha256"] = termex_default_stopwords_hash();
      std::map<std::string, std::string> digests;
      for (const std::string& path : outputs.written()) {
        char* digest = nullptr;
        check(termex_sha256_file(path.c_str(), &digest));
        ApiString digest_owned(digest);
        digests[fs::path(path).filename().string()] = digest_owned.get();
      }
      nlohmann::ordered_json files = nlohmann::ordered_json::object();
      for (const auto& [name, digest] : digests) files[name] = digest;
      manifest["outputs"] = files;
      outputs.write(cfg.out_dir + "/manifest.json", manifest.dump(2) + "\n");
    }
    drain_warnings();
  } catch (...) {
    outputs.discard_all();
    if (created_dir) {
      std::error_code ec;
      fs::remove(cfg.out_dir, ec);
    }
    throw;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"termex: extract candidate terminology from annotated corpora "
               "and score it against silver-standard reference lists"};
  app.require_subcommand(0, 1);

  bool show_version = false;
  app.add_flag("--version", show_version, "Print version information");
  app.add_option_function<std::string>(
         "--log",
         [](const std::string& level) {
           if (level == "quiet") g_verbosity = 0;
           else if (level == "normal") g_verbosity = 1;
           else if (level == "verbose") g_verbosity = 2;
           else throw CLI::ValidationError("--log must be quiet, normal, or verbose");
         },
         "Log level: quiet, normal, verbose")
      ->expected(1);

  CleanArgs clean_args;
  CLI::App* clean = app.add_subcommand(
      "clean", "Clean raw JSON-lines abstracts into annotated-corpus form");
  clean->fallthrough();
  clean->add_option("--in", clean_args.in, "Input abstracts (.jsonl)")
      ->required();
  clean->add_option("--out", clean_args.out, "Output file ('-' for stdout)")
      ->required();
  clean_args.common.add_flags(clean, /*with_math=*/true);

  ExtractArgs extract_args;
  CLI::App* extract =
      app.add_subcommand("extract", "Run one extractor over a corpus");
  extract->fallthrough();
  extract->add_option("--method", extract_args.method,
                      "textrank, chunker, or gazetteer")
      ->required();
  extract->add_option("--corpus", extract_args.corpus,
                      "Corpus file (.conllu or .jsonl)")
      ->required();
  extract->add_option("--gazetteer", extract_args.gazetteer,
                      "Gazetteer term-list file");
  extract->add_option("--params", extract_args.params,
                      "Extractor parameter file (key = value lines)");
  extract->add_option("--out", extract_args.out, "Output term-list file")
      ->required();
  extract_args.common.add_flags(extract, /*with_math=*/true);

  BuildRefArgs build_ref_args;
  CLI::App* build_ref =
      app.add_subcommand("build-ref", "Build a silver reference list");
  build_ref->fallthrough();
  build_ref->add_option("--source", build_ref_args.source,
                        "keywords, wiki, or nounphrases")
      ->required();
  build_ref->add_option("--corpus", build_ref_args.corpus,
                        "Corpus file (.conllu or .jsonl)");
  build_ref->add_option("--titles", build_ref_args.titles,
                        "Page-title term-list file (for source=wiki)");
  build_ref->add_option("--out", build_ref_args.out, "Output term-list file")
      ->required();
  build_ref->add_flag("--filter", build_ref_args.filter,
                      "Keep only terms that occur in the corpus");
  build_ref->add_option("--report", build_ref_args.report,
                        "Write the filter report JSON here (implies --filter)");
  build_ref_args.common.add_flags(build_ref, /*with_math=*/true);

  EvaluateArgs eval_args;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Score prediction lists against one reference list");
  evaluate->fallthrough();
  evaluate->add_option("--corpus", eval_args.corpus, "Corpus file")
      ->required();
  evaluate->add_option("--pred", eval_args.preds,
                       "Prediction list as NAME=FILE (repeatable)");
  evaluate->add_option(
      "--ref", eval_args.refs,
      "Reference: keywords, wiki, nounphrases, or NAME=FILE (repeatable)");
  evaluate->add_option("--titles", eval_args.titles,
                       "Page-title file (for --ref wiki)");
  evaluate->add_option("--combine", eval_args.combine,
                       "union or intersection (for multiple --ref)");
  evaluate->add_option("--format", eval_args.format,
                       "markdown, csv, or json (default markdown)");
  evaluate->add_option("--out", eval_args.out,
                       "Output table ('-' or empty for stdout)");
  evaluate->add_option("--details", eval_args.details,
                       "Write per-pair result JSON array here");
  eval_args.common.add_flags(evaluate, /*with_math=*/true);

  OverlapArgs overlap_args;
  CLI::App* overlap = app.add_subcommand(
      "overlap", "Decompose term lists into shared and unique regions");
  overlap->fallthrough();
  overlap->add_option("--list", overlap_args.lists,
                      "Term list as NAME=FILE (2 to 6, repeatable)");
  overlap->add_option("--format", overlap_args.format,
                      "markdown, csv, or json (default markdown)");
  overlap->add_option("--out", overlap_args.out,
                      "Output file ('-' or empty for stdout)");
  overlap_args.common.add_flags(overlap, /*with_math=*/false);

  std::string pipeline_config;
  std::string pipeline_out_dir;
  int pipeline_workers = 0;
  CLI::App* pipeline = app.add_subcommand(
      "pipeline", "Run every configured extractor against every reference");
  pipeline->fallthrough();
  pipeline->add_option("--config", pipeline_config,
                       "Pipeline configuration file")
      ->required();
  pipeline->add_option("--out-dir", pipeline_out_dir,
                       "Output directory (overrides the config)");
  pipeline->add_option("--workers", pipeline_workers,
                       "Worker threads (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return kExitUsage;
  }

  if (show_version) {
    std::cout << "termex " << termex_version() << " (build "
              << termex_build_hash() << ", stopwords "
              << termex_default_stopwords_hash() << ")\n";
    return kExitOk;
  }

  try {
    if (clean->parsed()) return run_clean(clean_args);
    if (extract->parsed()) return run_extract(extract_args);
    if (build_ref->parsed()) return run_build_ref(build_ref_args);
    if (evaluate->parsed()) return run_evaluate(eval_args);
    if (overlap->parsed()) return run_overlap(overlap_args);
    if (pipeline->parsed())
      return run_pipeline(pipeline_config, pipeline_out_dir, pipeline_workers);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }

  std::cerr << app.help();
  return kExitUsage;
}
