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

#include "termex/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace termex {

void RankParams::validate() const {
  if (!(damping > 0.0 && damping < 1.0))
    throw std::invalid_argument("damping must be in (0,1)");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("tolerance must be positive");
  if (max_iterations < 1)
    throw std::invalid_argument("max_iterations must be >= 1");
  if (window < 2) throw std::invalid_argument("window must be >= 2");
  if (!(keep_ratio > 0.0 && keep_ratio <= 1.0))
    throw std::invalid_argument("keep_ratio must be in (0,1]");
  if (candidate_pos.empty())
    throw std::invalid_argument("candidate_pos must be non-empty");
}

bool CandidateGraph::has_edge(const TermKey& a, const TermKey& b) const {
  return weight(a, b) > 0;
}

long long CandidateGraph::weight(const TermKey& a, const TermKey& b) const {
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = edges.find(key);
  return it == edges.end() ? 0 : it->second;
}

void CandidateGraph::add_cooccurrence(const TermKey& a, const TermKey& b) {
  if (a == b) return;  // no self-loops
  nodes.insert(a);
  nodes.insert(b);
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  edges[key] += 1;
}

CandidateGraph build_cooccurrence_graph(const Corpus& corpus,
                                        const RankParams& params,
                                        const Normalizer& norm) {
  params.validate();
  CandidateGraph graph;
  for (const auto& doc : corpus.documents) {
    for (const auto& sent : doc.sentences) {
      // Candidate words with their raw token positions.
      std::vector<std::pair<int, TermKey>> candidates;
      for (const Token& tok : sent.tokens) {
        if (!params.candidate_pos.count(tok.upos)) continue;
        std::string word = norm.token_word(tok);
        if (word.empty() || norm.is_stopword(word)) continue;
        candidates.emplace_back(tok.index, std::move(word));
        graph.nodes.insert(candidates.back().second);
      }
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
          if (candidates[j].first - candidates[i].first >= params.window)
            break;
          graph.add_cooccurrence(candidates[i].second, candidates[j].second);
        }
      }
    }
  }
  return graph;
}

RankResult rank_nodes(const CandidateGraph& graph, const RankParams& params) {
  params.validate();
  RankResult result;
  const std::size_t n = graph.nodes.size();
  if (n == 0) return result;

  std::vector<TermKey> keys(graph.nodes.begin(), graph.nodes.end());
  std::map<TermKey, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[keys[i]] = i;

  // Row sums and adjacency, in key order for reproducible float arithmetic.
  std::vector<double> row_sum(n, 0.0);
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  for (const auto& [pair, w] : graph.edges) {
    std::size_t a = index.at(pair.first);
    std::size_t b = index.at(pair.second);
    double weight = static_cast<double>(w);
    adj[a].emplace_back(b, weight);
    adj[b].emplace_back(a, weight);
    row_sum[a] += weight;
    row_sum[b] += weight;
  }
  for (auto& neigh : adj) {
    std::sort(neigh.begin(), neigh.end());
  }

  const double base = 1.0 - params.damping;
  std::vector<double> score(n, 1.0);
  std::vector<double> next(n, 0.0);
  bool converged = false;
  int iter = 0;
  while (iter < params.max_iterations && !converged) {
    ++iter;
    double max_delta = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      double sum = 0.0;
      for (const auto& [u, w] : adj[v]) {
        sum += w / row_sum[u] * score[u];
      }
      next[v] = base + params.damping * sum;
      max_delta = std::max(max_delta, std::fabs(next[v] - score[v]));
    }
    score.swap(next);
    converged = max_delta < params.tolerance;
  }

  result.iterations = iter;
  result.converged = converged;
  for (std::size_t i = 0; i < n; ++i) result.scores[keys[i]] = score[i];
  return result;
}

}  // namespace termex
