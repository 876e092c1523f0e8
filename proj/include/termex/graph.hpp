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

#ifndef TERMEX_GRAPH_HPP_
#define TERMEX_GRAPH_HPP_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "termex/corpus.hpp"
#include "termex/normalize.hpp"

namespace termex {

struct RankParams {
  double damping = 0.85;
  double tolerance = 1e-6;
  int max_iterations = 100;
  int window = 2;
  double keep_ratio = 1.0 / 3.0;
  std::set<UPos> candidate_pos = {UPos::NOUN, UPos::PROPN, UPos::ADJ};

  void validate() const;  // throws std::invalid_argument
};

// Undirected word co-occurrence graph. Nodes are normalized single-word keys;
// an edge weight counts, corpus-wide, the sentence-internal co-occurrences of
// the two words within the window. No self-loops.
struct CandidateGraph {
  std::set<TermKey> nodes;
  // Canonical key order: first < second.
  std::map<std::pair<TermKey, TermKey>, long long> edges;

  bool has_edge(const TermKey& a, const TermKey& b) const;
  long long weight(const TermKey& a, const TermKey& b) const;
  void add_cooccurrence(const TermKey& a, const TermKey& b);
};

CandidateGraph build_cooccurrence_graph(const Corpus& corpus,
                                        const RankParams& params,
                                        const Normalizer& norm);

struct RankResult {
  std::map<TermKey, double> scores;
  int iterations = 0;
  bool converged = true;
};

// Damped weighted ranking over the co-occurrence graph:
//   S(v) = (1-d) + d * sum_{u adj v} w(u,v)/W(u) * S(u),  W(u) = row sum.
// Jacobi iteration from a uniform start of 1.0 until the largest absolute
// score change drops below the tolerance. Isolated nodes score exactly 1-d.
RankResult rank_nodes(const CandidateGraph& graph, const RankParams& params);

}  // namespace termex

#endif  // TERMEX_GRAPH_HPP_
