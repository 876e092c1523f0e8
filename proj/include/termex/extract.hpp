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

#ifndef TERMEX_EXTRACT_HPP_
#define TERMEX_EXTRACT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "termex/corpus.hpp"
#include "termex/graph.hpp"
#include "termex/normalize.hpp"
#include "termex/termlist.hpp"

namespace termex {

// Graph-ranking extractor: rank candidate words, keep the top
// ceil(keep_ratio * |nodes|) by (score desc, key asc), then collapse runs of
// kept words that sit adjacent in a sentence into multiword terms. Kept words
// never absorbed into a run survive as single-word terms.
TermList textrank_extract(const Corpus& corpus, const RankParams& params,
                          const Normalizer& norm);

// A POS pattern is a fixed sequence of UPOS tags matched against contiguous
// token windows.
using PosPattern = std::vector<UPos>;

// The two-word patterns used for the noun-phrase reference list.
std::vector<PosPattern> default_chunk_patterns();

struct ChunkOptions {
  std::vector<PosPattern> patterns = default_chunk_patterns();
  // Additionally emit maximal (ADJ)*(NOUN)+ spans to emulate broad
  // linguistic phrase extraction.
  bool extended = false;
};

TermList chunk_phrases(const Corpus& corpus, const ChunkOptions& opts,
                       const Normalizer& norm);

// Scans sentences for token spans whose normalized key is a gazetteer entry.
// Spans may not contain punctuation and may not start or end on a stop word.
// Overlaps resolve longest-first, then leftmost.
TermList gazetteer_link(const Corpus& corpus, const TermList& gazetteer,
                        const Normalizer& norm);

struct ImportResult {
  TermList list;
  std::vector<std::string> warnings;
};

// Reads the term-list file format, normalizing every entry. Lines that
// normalize to nothing are dropped with a warning.
ImportResult import_term_list(std::string_view text, std::string name,
                              const Normalizer& norm);
ImportResult import_term_list_file(const std::string& path, std::string name,
                                   const Normalizer& norm);

}  // namespace termex

#endif  // TERMEX_EXTRACT_HPP_
