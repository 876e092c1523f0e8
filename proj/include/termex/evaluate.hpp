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

#ifndef TERMEX_EVALUATE_HPP_
#define TERMEX_EVALUATE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "termex/corpus.hpp"
#include "termex/normalize.hpp"
#include "termex/reference.hpp"
#include "termex/termlist.hpp"

namespace termex {

// Counts are over distinct keys (term types), never occurrences.
struct ConfusionCounts {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
  TermList tp_terms{"tp"};
  TermList fp_terms{"fp"};
  TermList fn_terms{"fn"};
};

struct EvalScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::vector<std::string> warnings;
};

// tp = pred ∩ ref, fp = pred \ ref, fn = ref \ pred, all on keys.
ConfusionCounts confusion(const TermList& pred, const TermList& ref);

// P = tp/(tp+fp), R = tp/(tp+fn), F1 = 2PR/(P+R). A zero denominator gives a
// zero score with a machine-readable warning instead of an error.
EvalScores metrics(const ConfusionCounts& c);

struct EvalResult {
  std::string extractor;
  std::string reference;
  ConfusionCounts counts;
  EvalScores scores;
  // How the reference was prepared (filter step), for provenance.
  std::vector<std::string> notes;
};

// Full pipeline for one (prediction, reference) pair: extractive-filter the
// reference against the corpus, then confusion counts, then scores.
EvalResult evaluate(const TermList& pred, const ReferenceList& ref,
                    const Corpus& corpus, const Normalizer& norm);

// {extractor, reference, tp, fp, fn, precision, recall, f1, warnings,
//  tp_terms, fp_terms, fn_terms} with term arrays sorted by key.
std::string eval_result_json(const EvalResult& r);

struct OverlapRegion {
  std::uint32_t mask = 0;  // bit i set = member of lists[i]
  std::vector<std::string> list_names;
  std::vector<TermKey> keys;

  std::size_t size() const { return keys.size(); }
};

// Decomposition of the union of n lists (2 <= n <= 6) into the 2^n - 1
// membership regions. Regions are disjoint and their sizes sum to the union
// size; empty regions are reported with size zero.
struct OverlapReport {
  std::vector<std::string> names;
  std::vector<OverlapRegion> regions;  // ordered by mask, 1 .. 2^n - 1

  std::size_t union_size() const;
};

OverlapReport overlap_regions(const std::vector<const TermList*>& lists);

}  // namespace termex

#endif  // TERMEX_EVALUATE_HPP_
