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

#include "termex/evaluate.hpp"

#include <stdexcept>

#include "json.hpp"

namespace termex {

ConfusionCounts confusion(const TermList& pred, const TermList& ref) {
  ConfusionCounts c;
  for (const auto& [key, term] : pred.terms()) {
    if (ref.contains(key)) {
      c.tp_terms.insert(term);
    } else {
      c.fp_terms.insert(term);
    }
  }
  for (const auto& [key, term] : ref.terms()) {
    if (!pred.contains(key)) c.fn_terms.insert(term);
  }
  c.tp = static_cast<long long>(c.tp_terms.size());
  c.fp = static_cast<long long>(c.fp_terms.size());
  c.fn = static_cast<long long>(c.fn_terms.size());
  return c;
}

EvalScores metrics(const ConfusionCounts& c) {
  EvalScores s;
  if (c.tp < 0 || c.fp < 0 || c.fn < 0)
    throw std::invalid_argument("negative confusion count");
  const double tp = static_cast<double>(c.tp);
  if (c.tp + c.fp > 0) {
    s.precision = tp / static_cast<double>(c.tp + c.fp);
  } else {
    s.warnings.push_back("empty prediction list: precision undefined, using 0");
  }
  if (c.tp + c.fn > 0) {
    s.recall = tp / static_cast<double>(c.tp + c.fn);
  } else {
    s.warnings.push_back("empty reference list: recall undefined, using 0");
  }
  if (s.precision + s.recall > 0.0) {
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  }
  return s;
}

EvalResult evaluate(const TermList& pred, const ReferenceList& ref,
                    const Corpus& corpus, const Normalizer& norm) {
  EvalResult r;
  r.extractor = pred.name();
  r.reference = ref.terms.name();
  FilterResult filtered = extractive_filter(ref.terms, corpus, norm);
  r.notes.push_back("reference filtered against corpus: kept " +
                    std::to_string(filtered.kept.size()) + ", removed " +
                    std::to_string(filtered.removed.size()));
  r.counts = confusion(pred, filtered.kept);
  r.scores = metrics(r.counts);
  return r;
}

std::string eval_result_json(const EvalResult& r) {
  nlohmann::ordered_json out;
  out["extractor"] = r.extractor;
  out["reference"] = r.reference;
  out["tp"] = r.counts.tp;
  out["fp"] = r.counts.fp;
  out["fn"] = r.counts.fn;
  out["precision"] = r.scores.precision;
  out["recall"] = r.scores.recall;
  out["f1"] = r.scores.f1;
  std::vector<std::string> warnings = r.scores.warnings;
  warnings.insert(warnings.end(), r.notes.begin(), r.notes.end());
  out["warnings"] = warnings;
  out["tp_terms"] = r.counts.tp_terms.keys();
  out["fp_terms"] = r.counts.fp_terms.keys();
  out["fn_terms"] = r.counts.fn_terms.keys();
  return out.dump(2) + "\n";
}

std::size_t OverlapReport::union_size() const {
  std::size_t n = 0;
  for (const auto& region : regions) n += region.size();
  return n;
}

OverlapReport overlap_regions(const std::vector<const TermList*>& lists) {
  if (lists.size() < 2 || lists.size() > 6)
    throw std::invalid_argument("overlap needs between 2 and 6 lists");
  OverlapReport report;
  for (const TermList* list : lists) report.names.push_back(list->name());

  const std::uint32_t n_masks = (1u << lists.size()) - 1;
  report.regions.resize(n_masks);
  for (std::uint32_t mask = 1; mask <= n_masks; ++mask) {
    OverlapRegion& region = report.regions[mask - 1];
    region.mask = mask;
    for (std::size_t i = 0; i < lists.size(); ++i) {
      if (mask & (1u << i)) region.list_names.push_back(report.names[i]);
    }
  }

  std::map<TermKey, std::uint32_t> membership;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    for (const auto& [key, term] : lists[i]->terms())
      membership[key] |= 1u << i;
  }
  for (const auto& [key, mask] : membership)
    report.regions[mask - 1].keys.push_back(key);
  return report;
}

}  // namespace termex
