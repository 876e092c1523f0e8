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

#ifndef TERMEX_REFERENCE_HPP_
#define TERMEX_REFERENCE_HPP_

#include <string>
#include <vector>

#include "termex/corpus.hpp"
#include "termex/normalize.hpp"
#include "termex/termlist.hpp"

namespace termex {

// Which side of an imperfect reference list can be trusted. A list built by
// experts is believed when it says a term is real (precision) but not when it
// is silent (recall); a pattern-derived list is the other way around.
struct QualityProfile {
  bool precision_reliable = false;
  bool recall_reliable = false;

  bool operator==(const QualityProfile&) const = default;
};

struct ReferenceList {
  TermList terms{"reference"};
  QualityProfile profile;
  std::string note;
  std::vector<std::string> warnings;
};

// Union of every document's author keywords, normalized and deduplicated.
// Empty corpus-wide keyword metadata is a warning, not an error.
ReferenceList build_author_keywords(const Corpus& corpus,
                                    const Normalizer& norm);

// Wiki page titles from a term-list file.
ReferenceList build_wiki_titles(std::string_view text, const Normalizer& norm);
ReferenceList build_wiki_titles_file(const std::string& path,
                                     const Normalizer& norm);

// Two-word noun-phrase compounds chunked from the corpus itself.
ReferenceList build_noun_phrase_list(const Corpus& corpus,
                                     const Normalizer& norm);

struct FilterResult {
  TermList kept;
  TermList removed;
};

// Keeps exactly the terms whose key occurs as a contiguous subsequence of
// some sentence's normalized word stream. The stream keeps stop words, so
// interior function words ("category of torsor") must be present in the text.
FilterResult extractive_filter(const TermList& list, const Corpus& corpus,
                               const Normalizer& norm);

// JSON report {"kept": [...], "removed": [...]} with keys sorted.
std::string filter_report_json(const FilterResult& result);

enum class CombineMode { Union, Intersection };

// Set union or intersection over keys; requires at least two lists.
TermList combine(const std::vector<const TermList*>& lists, CombineMode mode,
                 std::string name);

}  // namespace termex

#endif  // TERMEX_REFERENCE_HPP_
