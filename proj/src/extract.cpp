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

#include "termex/extract.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "termex/raw_corpus.hpp"

namespace termex {

namespace {

std::string join_forms(std::span<const Token> span) {
  std::string out;
  for (const Token& tok : span) {
    if (!out.empty()) out.push_back(' ');
    out += tok.form;
  }
  return out;
}

}  // namespace

TermList textrank_extract(const Corpus& corpus, const RankParams& params,
                          const Normalizer& norm) {
  TermList list("textrank");
  CandidateGraph graph = build_cooccurrence_graph(corpus, params, norm);
  if (graph.nodes.empty()) return list;

  RankResult ranked = rank_nodes(graph, params);

  // Top ceil(keep_ratio * |nodes|) words; score descending, then key order.
  std::vector<std::pair<double, TermKey>> order;
  order.reserve(ranked.scores.size());
  for (const auto& [key, score] : ranked.scores) order.emplace_back(score, key);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  const auto keep = static_cast<std::size_t>(
      std::ceil(params.keep_ratio * static_cast<double>(order.size())));
  std::unordered_set<TermKey> selected;
  for (std::size_t i = 0; i < keep && i < order.size(); ++i)
    selected.insert(order[i].second);

  // Collapse runs of selected words that are adjacent in a sentence.
  std::unordered_set<TermKey> absorbed;
  std::vector<std::pair<std::string, TermKey>> collapsed;  // surface, key
  std::unordered_map<TermKey, std::string> single_surface;
  for (const auto& doc : corpus.documents) {
    for (const auto& sent : doc.sentences) {
      const auto& toks = sent.tokens;
      std::size_t i = 0;
      auto selected_at = [&](std::size_t k) {
        if (!params.candidate_pos.count(toks[k].upos)) return false;
        std::string w = norm.token_word(toks[k]);
        return !w.empty() && selected.count(w) > 0;
      };
      while (i < toks.size()) {
        if (!selected_at(i)) {
          ++i;
          continue;
        }
        std::size_t j = i + 1;
        while (j < toks.size() && toks[j].index == toks[j - 1].index + 1 &&
               selected_at(j))
          ++j;
        std::span<const Token> run(&toks[i], j - i);
        if (run.size() >= 2) {
          if (auto key = norm.key_for_tokens(run)) {
            collapsed.emplace_back(join_forms(run), *key);
            for (const Token& tok : run) absorbed.insert(norm.token_word(tok));
          }
        } else {
          std::string w = norm.token_word(toks[i]);
          single_surface.try_emplace(w, toks[i].form);
        }
        i = j;
      }
    }
  }

  for (auto& [surface, key] : collapsed)
    list.insert(std::move(surface), std::move(key), "textrank");
  for (const TermKey& key : selected) {
    if (absorbed.count(key)) continue;
    auto it = single_surface.find(key);
    // Selected words always occur somewhere; the surface map can only miss
    // them if every occurrence sat inside a collapse, and then they are
    // absorbed. Fall back to the key itself just in case.
    std::string surface = it == single_surface.end() ? key : it->second;
    list.insert(std::move(surface), key, "textrank");
  }
  return list;
}

std::vector<PosPattern> default_chunk_patterns() {
  return {
      {UPos::NOUN, UPos::NOUN},
      {UPos::ADJ, UPos::NOUN},
      {UPos::PROPN, UPos::NOUN},
      {UPos::NOUN, UPos::PROPN},
  };
}

TermList chunk_phrases(const Corpus& corpus, const ChunkOptions& opts,
                       const Normalizer& norm) {
  TermList list("chunker");
  for (const auto& doc : corpus.documents) {
    for (const auto& sent : doc.sentences) {
      const auto& toks = sent.tokens;
      for (const PosPattern& pattern : opts.patterns) {
        if (pattern.empty() || toks.size() < pattern.size()) continue;
        for (std::size_t i = 0; i + pattern.size() <= toks.size(); ++i) {
          bool match = true;
          for (std::size_t k = 0; k < pattern.size(); ++k) {
            if (toks[i + k].upos != pattern[k]) {
              match = false;
              break;
            }
          }
          if (!match) continue;
          std::span<const Token> span(&toks[i], pattern.size());
          if (auto key = norm.key_for_tokens(span))
            list.insert(join_forms(span), *key, "chunker");
        }
      }
      if (opts.extended) {
        // Maximal (ADJ)*(NOUN)+ spans.
        std::size_t i = 0;
        while (i < toks.size()) {
          std::size_t j = i;
          while (j < toks.size() && toks[j].upos == UPos::ADJ) ++j;
          if (j < toks.size() && toks[j].upos == UPos::NOUN) {
            while (j < toks.size() && toks[j].upos == UPos::NOUN) ++j;
            std::span<const Token> span(&toks[i], j - i);
            if (auto key = norm.key_for_tokens(span))
              list.insert(join_forms(span), *key, "chunker");
            i = j;
          } else {
            i = toks[i].upos == UPos::ADJ ? j : i + 1;
            if (j == toks.size()) break;
          }
        }
      }
    }
  }
  return list;
}

TermList gazetteer_link(const Corpus& corpus, const TermList& gazetteer,
                        const Normalizer& norm) {
  TermList list("gazetteer");
  if (gazetteer.empty()) return list;

  // Longest gazetteer entry bounds the span search.
  std::size_t max_words = 1;
  for (const auto& [key, term] : gazetteer.terms()) {
    max_words = std::max(
        max_words,
        static_cast<std::size_t>(
            std::count(key.begin(), key.end(), ' ')) + 1);
  }

  struct Match {
    std::size_t begin;
    std::size_t len;
    TermKey key;
  };

  for (const auto& doc : corpus.documents) {
    for (const auto& sent : doc.sentences) {
      const auto& toks = sent.tokens;
      std::vector<Match> found;
      for (std::size_t i = 0; i < toks.size(); ++i) {
        for (std::size_t len = 1; len <= max_words && i + len <= toks.size();
             ++len) {
          std::span<const Token> span(&toks[i], len);
          // String matching does not cross punctuation, and a span padded
          // with edge stop words is never the minimal match.
          if (span.back().upos == UPos::PUNCT ||
              span.back().upos == UPos::SYM)
            break;
          std::string first = norm.token_word(span.front());
          std::string last = norm.token_word(span.back());
          if (first.empty() || norm.is_stopword(first)) break;
          if (last.empty() || norm.is_stopword(last)) continue;
          auto key = norm.key_for_tokens(span);
          if (key && gazetteer.contains(*key))
            found.push_back({i, len, *key});
        }
      }
      // Longest first, leftmost on ties.
      std::sort(found.begin(), found.end(), [](const Match& a, const Match& b) {
        if (a.len != b.len) return a.len > b.len;
        if (a.begin != b.begin) return a.begin < b.begin;
        return a.key < b.key;
      });
      std::vector<bool> taken(toks.size(), false);
      for (const Match& m : found) {
        bool free = true;
        for (std::size_t k = m.begin; k < m.begin + m.len; ++k)
          if (taken[k]) free = false;
        if (!free) continue;
        for (std::size_t k = m.begin; k < m.begin + m.len; ++k)
          taken[k] = true;
        std::span<const Token> span(&toks[m.begin], m.len);
        list.insert(join_forms(span), m.key, "gazetteer");
      }
    }
  }
  return list;
}

ImportResult import_term_list(std::string_view text, std::string name,
                              const Normalizer& norm) {
  ImportResult result{TermList(name), {}};
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = nl == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::string_view entry = line;
    std::string source = name;
    std::size_t tab = line.find('\t');
    if (tab != std::string_view::npos) {
      entry = line.substr(0, tab);
      std::string_view label = line.substr(tab + 1);
      if (!label.empty()) source = std::string(label);
    }
    auto keys = norm.keys_for_phrase(entry);
    if (keys.empty()) {
      bool blank = entry.find_first_not_of(" \t") == std::string_view::npos;
      result.warnings.push_back(
          "line " + std::to_string(line_no) + ": " +
          (blank ? "blank entry dropped"
                 : "entry '" + std::string(entry) +
                       "' normalizes to nothing, dropped"));
      continue;
    }
    for (const TermKey& key : keys)
      result.list.insert(std::string(entry), key, source);
  }
  return result;
}

ImportResult import_term_list_file(const std::string& path, std::string name,
                                   const Normalizer& norm) {
  return import_term_list(read_file(path), std::move(name), norm);
}

}  // namespace termex
