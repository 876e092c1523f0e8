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

#include "termex/reference.hpp"

#include <stdexcept>

#include "json.hpp"
#include "termex/extract.hpp"
#include "termex/raw_corpus.hpp"

namespace termex {

ReferenceList build_author_keywords(const Corpus& corpus,
                                    const Normalizer& norm) {
  ReferenceList ref;
  ref.terms = TermList("keywords");
  ref.profile = {/*precision_reliable=*/true, /*recall_reliable=*/false};
  ref.note = "expert-chosen per abstract; trust hits, not misses";
  for (const auto& doc : corpus.documents) {
    for (const std::string& kw : doc.author_keywords) {
      auto keys = norm.keys_for_phrase(kw);
      if (keys.empty()) {
        ref.warnings.push_back(doc.id + ": keyword '" + kw +
                               "' normalizes to nothing, dropped");
        continue;
      }
      for (const TermKey& key : keys) ref.terms.insert(kw, key, "keywords");
    }
  }
  if (ref.terms.empty())
    ref.warnings.push_back("no document carries author keywords");
  return ref;
}

ReferenceList build_wiki_titles(std::string_view text,
                                const Normalizer& norm) {
  ReferenceList ref;
  ImportResult imported = import_term_list(text, "wiki", norm);
  ref.terms = std::move(imported.list);
  ref.warnings = std::move(imported.warnings);
  ref.profile = {/*precision_reliable=*/true, /*recall_reliable=*/false};
  ref.note = "community-curated titles; strong on basics, lags the frontier";
  if (ref.terms.empty()) ref.warnings.push_back("empty title list");
  return ref;
}

ReferenceList build_wiki_titles_file(const std::string& path,
                                     const Normalizer& norm) {
  return build_wiki_titles(read_file(path), norm);
}

ReferenceList build_noun_phrase_list(const Corpus& corpus,
                                     const Normalizer& norm) {
  ReferenceList ref;
  ChunkOptions opts;  // exactly the two-word patterns
  TermList chunks = chunk_phrases(corpus, opts, norm);
  ref.terms = TermList("nounphrases");
  for (const auto& [key, term] : chunks.terms())
    ref.terms.insert(term.surface, key, "nounphrases");
  ref.profile = {/*precision_reliable=*/false, /*recall_reliable=*/true};
  ref.note = "pattern-derived bigrams; broad coverage, plenty of non-terms";
  return ref;
}

namespace {

std::vector<std::string> split_key_words(const TermKey& key) {
  std::vector<std::string> words;
  std::size_t start = 0;
  while (start <= key.size()) {
    std::size_t sp = key.find(' ', start);
    if (sp == std::string::npos) {
      words.push_back(key.substr(start));
      break;
    }
    words.push_back(key.substr(start, sp - start));
    start = sp + 1;
  }
  return words;
}

}  // namespace

FilterResult extractive_filter(const TermList& list, const Corpus& corpus,
                               const Normalizer& norm) {
  // Normalized word stream per sentence, stop words included.
  std::vector<std::vector<std::string>> stream;
  for (const auto& doc : corpus.documents) {
    for (const auto& sent : doc.sentences) {
      std::vector<std::string> words;
      words.reserve(sent.tokens.size());
      for (const Token& tok : sent.tokens) {
        std::string w = norm.token_word(tok);
        if (!w.empty()) words.push_back(std::move(w));
      }
      if (!words.empty()) stream.push_back(std::move(words));
    }
  }

  auto occurs = [&](const TermKey& key) {
    std::vector<std::string> needle = split_key_words(key);
    for (const auto& words : stream) {
      if (words.size() < needle.size()) continue;
      for (std::size_t i = 0; i + needle.size() <= words.size(); ++i) {
        bool match = true;
        for (std::size_t k = 0; k < needle.size(); ++k) {
          if (words[i + k] != needle[k]) {
            match = false;
            break;
          }
        }
        if (match) return true;
      }
    }
    return false;
  };

  FilterResult result{TermList(list.name()), TermList(list.name())};
  for (const auto& [key, term] : list.terms()) {
    if (occurs(key)) {
      result.kept.insert(term);
    } else {
      result.removed.insert(term);
    }
  }
  return result;
}

std::string filter_report_json(const FilterResult& result) {
  nlohmann::ordered_json report;
  report["kept"] = result.kept.keys();
  report["removed"] = result.removed.keys();
  return report.dump(2) + "\n";
}

TermList combine(const std::vector<const TermList*>& lists, CombineMode mode,
                 std::string name) {
  if (lists.size() < 2)
    throw std::invalid_argument("combine needs at least two lists");
  TermList out(std::move(name));
  if (mode == CombineMode::Union) {
    for (const TermList* list : lists) {
      for (const auto& [key, term] : list->terms()) out.insert(term);
    }
    return out;
  }
  for (const auto& [key, term] : lists.front()->terms()) {
    bool everywhere = true;
    for (std::size_t i = 1; i < lists.size(); ++i) {
      if (!lists[i]->contains(key)) {
        everywhere = false;
        break;
      }
    }
    if (!everywhere) continue;
    Term merged = term;
    for (std::size_t i = 1; i < lists.size(); ++i) {
      const Term* other = lists[i]->find(key);
      merged.sources.insert(other->sources.begin(), other->sources.end());
    }
    out.insert(std::move(merged));
  }
  return out;
}

}  // namespace termex
