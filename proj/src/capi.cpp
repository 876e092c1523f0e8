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

#include "termex.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "json.hpp"
#include "termex/clean.hpp"
#include "termex/conllu.hpp"
#include "termex/corpus.hpp"
#include "termex/digest.hpp"
#include "termex/evaluate.hpp"
#include "termex/extract.hpp"
#include "termex/graph.hpp"
#include "termex/normalize.hpp"
#include "termex/raw_corpus.hpp"
#include "termex/reference.hpp"
#include "termex/report.hpp"
#include "termex/termlist.hpp"
#include "termex/version.hpp"

using namespace termex;

struct termex_opts {
  CleanOptions clean;
  NormalizeOptions norm;
  RankParams rank;
  bool chunker_extended = false;
};

struct termex_corpus {
  Corpus corpus;
};

struct termex_termlist {
  TermList list{"unnamed"};
  bool has_profile = false;
  QualityProfile profile;
  std::string note;
  // Stable key-order index for termex_termlist_entry.
  std::vector<const Term*> index;

  void reindex() {
    index.clear();
    index.reserve(list.size());
    for (const auto& [key, term] : list.terms()) index.push_back(&term);
  }
};

struct termex_matrix {
  std::string reference;
  std::vector<EvalResult> results;
};

struct termex_overlap {
  OverlapReport report;
};

namespace {

thread_local std::string t_error;
thread_local std::vector<std::string> t_warnings;

char* dup_string(std::string_view s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

void add_warnings(const std::vector<std::string>& warnings) {
  t_warnings.insert(t_warnings.end(), warnings.begin(), warnings.end());
}

template <typename Fn>
termex_status guard(Fn&& fn) {
  t_error.clear();
  try {
    return fn();
  } catch (const ParseError& e) {
    t_error = e.what();
    return TERMEX_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    t_error = e.what();
    return TERMEX_ERR_INVALID;
  } catch (const std::runtime_error& e) {
    t_error = e.what();
    return TERMEX_ERR_IO;
  } catch (const std::exception& e) {
    t_error = e.what();
    return TERMEX_ERR_INVALID;
  }
}

termex_status fail_invalid(const std::string& message) {
  t_error = message;
  return TERMEX_ERR_INVALID;
}

bool parse_bool(const std::string& value, bool* out) {
  if (value == "true") {
    *out = true;
    return true;
  }
  if (value == "false") {
    *out = false;
    return true;
  }
  return false;
}

const termex_opts& opts_or_default(const termex_opts* opts) {
  static const termex_opts kDefault;
  return opts == nullptr ? kDefault : *opts;
}

Normalizer make_normalizer(const termex_opts* opts) {
  return Normalizer(opts_or_default(opts).norm);
}

termex_termlist* wrap_list(TermList list) {
  auto* handle = new termex_termlist;
  handle->list = std::move(list);
  handle->reindex();
  return handle;
}

termex_termlist* wrap_reference(ReferenceList ref) {
  termex_termlist* handle = wrap_list(std::move(ref.terms));
  handle->has_profile = true;
  handle->profile = ref.profile;
  handle->note = std::move(ref.note);
  add_warnings(ref.warnings);
  return handle;
}

ReferenceList to_reference(const termex_termlist* list) {
  ReferenceList ref;
  ref.terms = list->list;
  if (list->has_profile) {
    ref.profile = list->profile;
    ref.note = list->note;
  }
  return ref;
}

}  // namespace

extern "C" {

const char* termex_version(void) { return kVersion; }

const char* termex_build_hash(void) { return build_hash(); }

const char* termex_default_stopwords_hash(void) {
  return default_stopwords_hash().c_str();
}

const char* termex_last_error(void) { return t_error.c_str(); }

char* termex_take_warnings(void) {
  if (t_warnings.empty()) return nullptr;
  std::string joined;
  for (const auto& w : t_warnings) {
    if (!joined.empty()) joined += '\n';
    joined += w;
  }
  t_warnings.clear();
  return dup_string(joined);
}

void termex_string_free(char* s) { std::free(s); }

termex_opts* termex_opts_new(void) { return new termex_opts; }

void termex_opts_free(termex_opts* opts) { delete opts; }

termex_status termex_opts_set(termex_opts* opts, const char* key,
                              const char* value) {
  if (opts == nullptr || key == nullptr || value == nullptr)
    return fail_invalid("null argument to termex_opts_set");
  return guard([&]() -> termex_status {
    const std::string k(key);
    const std::string v(value);
    if (k == "math") {
      if (v == "delete") {
        opts->clean.math = MathMode::Delete;
      } else if (v == "placeholder") {
        opts->clean.math = MathMode::Placeholder;
      } else {
        return fail_invalid("math must be 'delete' or 'placeholder'");
      }
    } else if (k == "placeholder_token") {
      if (v.empty()) return fail_invalid("placeholder_token is empty");
      opts->clean.placeholder = v;
    } else if (k == "stopwords") {
      std::string text = read_file(v);
      std::vector<std::string> words;
      std::string word;
      for (char c : text + "\n") {
        if (c == '\n' || c == '\r') {
          if (!word.empty()) words.push_back(word);
          word.clear();
        } else {
          word.push_back(c);
        }
      }
      if (words.empty())
        return fail_invalid("stopword file is empty: " + v);
      opts->norm.stopword_override = std::move(words);
    } else if (k == "expand_co") {
      if (!parse_bool(v, &opts->norm.expand_co))
        return fail_invalid("expand_co must be 'true' or 'false'");
    } else if (k == "chunker_extended") {
      if (!parse_bool(v, &opts->chunker_extended))
        return fail_invalid("chunker_extended must be 'true' or 'false'");
    } else if (k == "damping" || k == "tolerance" || k == "keep_ratio") {
      double parsed = 0.0;
      std::size_t used = 0;
      try {
        parsed = std::stod(v, &used);
      } catch (const std::exception&) {
        return fail_invalid(k + " must be a number, got '" + v + "'");
      }
      if (used != v.size())
        return fail_invalid(k + " must be a number, got '" + v + "'");
      if (k == "damping") opts->rank.damping = parsed;
      if (k == "tolerance") opts->rank.tolerance = parsed;
      if (k == "keep_ratio") opts->rank.keep_ratio = parsed;
      opts->rank.validate();
    } else if (k == "max_iterations" || k == "window") {
      int parsed = 0;
      std::size_t used = 0;
      try {
        parsed = std::stoi(v, &used);
      } catch (const std::exception&) {
        return fail_invalid(k + " must be an integer, got '" + v + "'");
      }
      if (used != v.size())
        return fail_invalid(k + " must be an integer, got '" + v + "'");
      if (k == "max_iterations") opts->rank.max_iterations = parsed;
      if (k == "window") opts->rank.window = parsed;
      opts->rank.validate();
    } else if (k == "candidate_pos") {
      std::set<UPos> tags;
      std::size_t start = 0;
      while (start <= v.size()) {
        std::size_t comma = v.find(',', start);
        std::string name = comma == std::string::npos
                               ? v.substr(start)
                               : v.substr(start, comma - start);
        while (!name.empty() && name.front() == ' ') name.erase(0, 1);
        while (!name.empty() && name.back() == ' ') name.pop_back();
        if (!name.empty()) {
          UPos tag = upos_from_string(name);
          if (upos_to_string(tag) != name)
            return fail_invalid("unknown UPOS tag '" + name + "'");
          tags.insert(tag);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (tags.empty()) return fail_invalid("candidate_pos is empty");
      opts->rank.candidate_pos = std::move(tags);
    } else {
      return fail_invalid("unknown option key '" + k + "'");
    }
    return TERMEX_OK;
  });
}

termex_status termex_clean_text(const termex_opts* opts, const char* text,
                                char** out) {
  if (text == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_clean_text");
  return guard([&]() -> termex_status {
    CleanResult result = strip_markup(text, opts_or_default(opts).clean);
    add_warnings(result.warnings);
    *out = dup_string(result.text);
    return TERMEX_OK;
  });
}

termex_status termex_corpus_parse_conllu(const char* text,
                                         termex_corpus** out) {
  if (text == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_corpus_parse_conllu");
  return guard([&]() -> termex_status {
    ConlluResult result = parse_conllu(text);
    add_warnings(result.warnings);
    *out = new termex_corpus{std::move(result.corpus)};
    return TERMEX_OK;
  });
}

termex_status termex_corpus_read_conllu(const char* path,
                                        termex_corpus** out) {
  if (path == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_corpus_read_conllu");
  return guard([&]() -> termex_status {
    ConlluResult result = parse_conllu(read_file(path), path);
    add_warnings(result.warnings);
    *out = new termex_corpus{std::move(result.corpus)};
    return TERMEX_OK;
  });
}

termex_status termex_corpus_read_jsonl(const termex_opts* opts,
                                       const char* path, termex_corpus** out) {
  if (path == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_corpus_read_jsonl");
  return guard([&]() -> termex_status {
    ConlluResult result =
        load_raw_documents_file(path, opts_or_default(opts).clean);
    add_warnings(result.warnings);
    *out = new termex_corpus{std::move(result.corpus)};
    return TERMEX_OK;
  });
}

termex_status termex_corpus_write_conllu(const termex_corpus* c, char** out) {
  if (c == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_corpus_write_conllu");
  return guard([&]() -> termex_status {
    *out = dup_string(write_conllu(c->corpus));
    return TERMEX_OK;
  });
}

size_t termex_corpus_num_documents(const termex_corpus* c) {
  return c == nullptr ? 0 : c->corpus.documents.size();
}

size_t termex_corpus_num_sentences(const termex_corpus* c) {
  return c == nullptr ? 0 : c->corpus.sentence_count();
}

size_t termex_corpus_num_tokens(const termex_corpus* c) {
  return c == nullptr ? 0 : c->corpus.token_count();
}

void termex_corpus_free(termex_corpus* c) { delete c; }

termex_status termex_normalize(const termex_opts* opts, const char* phrase,
                               char** out) {
  if (phrase == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_normalize");
  return guard([&]() -> termex_status {
    auto key = make_normalizer(opts).key_for_phrase(phrase);
    *out = key ? dup_string(*key) : nullptr;
    return TERMEX_OK;
  });
}

termex_status termex_termlist_read(const termex_opts* opts, const char* path,
                                   const char* name, termex_termlist** out) {
  if (path == nullptr || name == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_termlist_read");
  return guard([&]() -> termex_status {
    ImportResult result =
        import_term_list_file(path, name, make_normalizer(opts));
    add_warnings(result.warnings);
    *out = wrap_list(std::move(result.list));
    return TERMEX_OK;
  });
}

termex_status termex_termlist_render(const termex_termlist* list, char** out) {
  if (list == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_termlist_render");
  return guard([&]() -> termex_status {
    *out = dup_string(render_termlist(list->list));
    return TERMEX_OK;
  });
}

size_t termex_termlist_size(const termex_termlist* list) {
  return list == nullptr ? 0 : list->list.size();
}

const char* termex_termlist_name(const termex_termlist* list) {
  return list == nullptr ? "" : list->list.name().c_str();
}

termex_status termex_termlist_entry(const termex_termlist* list, size_t idx,
                                    const char** key, const char** surface) {
  if (list == nullptr || key == nullptr || surface == nullptr)
    return fail_invalid("null argument to termex_termlist_entry");
  if (idx >= list->index.size())
    return fail_invalid("term index out of range");
  t_error.clear();
  *key = list->index[idx]->key.c_str();
  *surface = list->index[idx]->surface.c_str();
  return TERMEX_OK;
}

termex_status termex_termlist_profile(const termex_termlist* list,
                                      int* precision_reliable,
                                      int* recall_reliable) {
  if (list == nullptr || precision_reliable == nullptr ||
      recall_reliable == nullptr)
    return fail_invalid("null argument to termex_termlist_profile");
  if (!list->has_profile)
    return fail_invalid("term list carries no quality profile");
  t_error.clear();
  *precision_reliable = list->profile.precision_reliable ? 1 : 0;
  *recall_reliable = list->profile.recall_reliable ? 1 : 0;
  return TERMEX_OK;
}

const char* termex_termlist_note(const termex_termlist* list) {
  if (list == nullptr || !list->has_profile) return nullptr;
  return list->note.c_str();
}

void termex_termlist_free(termex_termlist* list) { delete list; }

termex_status termex_extract_textrank(const termex_opts* opts,
                                      const termex_corpus* corpus,
                                      termex_termlist** out) {
  if (corpus == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_extract_textrank");
  return guard([&]() -> termex_status {
    *out = wrap_list(textrank_extract(corpus->corpus,
                                      opts_or_default(opts).rank,
                                      make_normalizer(opts)));
    return TERMEX_OK;
  });
}

termex_status termex_extract_chunker(const termex_opts* opts,
                                     const termex_corpus* corpus,
                                     termex_termlist** out) {
  if (corpus == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_extract_chunker");
  return guard([&]() -> termex_status {
    ChunkOptions chunk;
    chunk.extended = opts_or_default(opts).chunker_extended;
    *out = wrap_list(
        chunk_phrases(corpus->corpus, chunk, make_normalizer(opts)));
    return TERMEX_OK;
  });
}

termex_status termex_extract_gazetteer(const termex_opts* opts,
                                       const termex_corpus* corpus,
                                       const termex_termlist* gazetteer,
                                       termex_termlist** out) {
  if (corpus == nullptr || gazetteer == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_extract_gazetteer");
  return guard([&]() -> termex_status {
    if (gazetteer->list.empty())
      return fail_invalid("gazetteer is empty");
    *out = wrap_list(gazetteer_link(corpus->corpus, gazetteer->list,
                                    make_normalizer(opts)));
    return TERMEX_OK;
  });
}

termex_status termex_ref_author_keywords(const termex_opts* opts,
                                         const termex_corpus* c,
                                         termex_termlist** out) {
  if (c == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_ref_author_keywords");
  return guard([&]() -> termex_status {
    *out = wrap_reference(
        build_author_keywords(c->corpus, make_normalizer(opts)));
    return TERMEX_OK;
  });
}

termex_status termex_ref_wiki_titles(const termex_opts* opts,
                                     const char* titles_path,
                                     termex_termlist** out) {
  if (titles_path == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_ref_wiki_titles");
  return guard([&]() -> termex_status {
    *out = wrap_reference(
        build_wiki_titles_file(titles_path, make_normalizer(opts)));
    return TERMEX_OK;
  });
}

termex_status termex_ref_noun_phrases(const termex_opts* opts,
                                      const termex_corpus* c,
                                      termex_termlist** out) {
  if (c == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_ref_noun_phrases");
  return guard([&]() -> termex_status {
    *out = wrap_reference(
        build_noun_phrase_list(c->corpus, make_normalizer(opts)));
    return TERMEX_OK;
  });
}

termex_status termex_filter_extractive(const termex_opts* opts,
                                       const termex_termlist* list,
                                       const termex_corpus* corpus,
                                       termex_termlist** kept,
                                       char** report_json) {
  if (list == nullptr || corpus == nullptr || kept == nullptr)
    return fail_invalid("null argument to termex_filter_extractive");
  return guard([&]() -> termex_status {
    FilterResult result =
        extractive_filter(list->list, corpus->corpus, make_normalizer(opts));
    if (report_json != nullptr)
      *report_json = dup_string(filter_report_json(result));
    termex_termlist* handle = wrap_list(std::move(result.kept));
    handle->has_profile = list->has_profile;
    handle->profile = list->profile;
    handle->note = list->note;
    *kept = handle;
    return TERMEX_OK;
  });
}

termex_status termex_combine(const termex_termlist* const* lists, size_t n,
                             const char* mode, const char* name,
                             termex_termlist** out) {
  if (lists == nullptr || mode == nullptr || name == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_combine");
  return guard([&]() -> termex_status {
    CombineMode m;
    if (std::string_view(mode) == "union") {
      m = CombineMode::Union;
    } else if (std::string_view(mode) == "intersection") {
      m = CombineMode::Intersection;
    } else {
      return fail_invalid("mode must be 'union' or 'intersection'");
    }
    std::vector<const TermList*> raw;
    raw.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      if (lists[i] == nullptr)
        return fail_invalid("null list handle in termex_combine");
      raw.push_back(&lists[i]->list);
    }
    *out = wrap_list(combine(raw, m, name));
    return TERMEX_OK;
  });
}

termex_status termex_evaluate(const termex_opts* opts,
                              const termex_termlist* pred,
                              const termex_termlist* ref,
                              const termex_corpus* corpus,
                              char** result_json) {
  if (pred == nullptr || ref == nullptr || corpus == nullptr ||
      result_json == nullptr)
    return fail_invalid("null argument to termex_evaluate");
  return guard([&]() -> termex_status {
    EvalResult r = evaluate(pred->list, to_reference(ref), corpus->corpus,
                            make_normalizer(opts));
    *result_json = dup_string(eval_result_json(r));
    return TERMEX_OK;
  });
}

termex_status termex_metrics_json(long long tp, long long fp, long long fn,
                                  char** out) {
  if (out == nullptr) return fail_invalid("null argument to termex_metrics_json");
  return guard([&]() -> termex_status {
    ConfusionCounts c;
    c.tp = tp;
    c.fp = fp;
    c.fn = fn;
    EvalScores s = metrics(c);
    nlohmann::ordered_json j;
    j["precision"] = s.precision;
    j["recall"] = s.recall;
    j["f1"] = s.f1;
    j["warnings"] = s.warnings;
    *out = dup_string(j.dump(2) + "\n");
    return TERMEX_OK;
  });
}

termex_status termex_matrix_new(const char* reference_name,
                                termex_matrix** out) {
  if (reference_name == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_matrix_new");
  t_error.clear();
  *out = new termex_matrix{reference_name, {}};
  return TERMEX_OK;
}

termex_status termex_matrix_add_result(termex_matrix* m,
                                       const char* result_json) {
  if (m == nullptr || result_json == nullptr)
    return fail_invalid("null argument to termex_matrix_add_result");
  return guard([&]() -> termex_status {
    nlohmann::json j = nlohmann::json::parse(result_json, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      return fail_invalid("malformed evaluation result JSON");
    EvalResult r;
    r.extractor = j.at("extractor").get<std::string>();
    r.reference = j.at("reference").get<std::string>();
    if (r.reference != m->reference)
      return fail_invalid("result is for reference '" + r.reference +
                          "', matrix is for '" + m->reference + "'");
    r.counts.tp = j.at("tp").get<long long>();
    r.counts.fp = j.at("fp").get<long long>();
    r.counts.fn = j.at("fn").get<long long>();
    r.scores.precision = j.at("precision").get<double>();
    r.scores.recall = j.at("recall").get<double>();
    r.scores.f1 = j.at("f1").get<double>();
    m->results.push_back(std::move(r));
    return TERMEX_OK;
  });
}

termex_status termex_matrix_render(const termex_matrix* m, const char* format,
                                   char** out) {
  if (m == nullptr || format == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_matrix_render");
  return guard([&]() -> termex_status {
    ResultsMatrix matrix = build_matrix(m->results);
    *out = dup_string(render_table(matrix, table_format_from_string(format)));
    return TERMEX_OK;
  });
}

void termex_matrix_free(termex_matrix* m) { delete m; }

termex_status termex_overlap_compute(const termex_termlist* const* lists,
                                     size_t n, termex_overlap** out) {
  if (lists == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_overlap_compute");
  return guard([&]() -> termex_status {
    std::vector<const TermList*> raw;
    raw.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      if (lists[i] == nullptr)
        return fail_invalid("null list handle in termex_overlap_compute");
      raw.push_back(&lists[i]->list);
    }
    *out = new termex_overlap{overlap_regions(raw)};
    return TERMEX_OK;
  });
}

termex_status termex_overlap_render(const termex_overlap* o,
                                    const char* format, char** out) {
  if (o == nullptr || format == nullptr || out == nullptr)
    return fail_invalid("null argument to termex_overlap_render");
  return guard([&]() -> termex_status {
    *out = dup_string(
        render_overlap(o->report, table_format_from_string(format)));
    return TERMEX_OK;
  });
}

void termex_overlap_free(termex_overlap* o) { delete o; }

termex_status termex_sha256_string(const char* data, size_t len,
                                   char** out_hex) {
  if (data == nullptr || out_hex == nullptr)
    return fail_invalid("null argument to termex_sha256_string");
  t_error.clear();
  *out_hex = dup_string(sha256_hex(std::string_view(data, len)));
  return TERMEX_OK;
}

termex_status termex_sha256_file(const char* path, char** out_hex) {
  if (path == nullptr || out_hex == nullptr)
    return fail_invalid("null argument to termex_sha256_file");
  return guard([&]() -> termex_status {
    *out_hex = dup_string(sha256_hex(read_file(path)));
    return TERMEX_OK;
  });
}

}  // extern "C"
