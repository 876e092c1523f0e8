#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "termex/graph.hpp"

using termex::build_cooccurrence_graph;
using termex::CandidateGraph;
using termex::Normalizer;
using termex::rank_nodes;
using termex::RankParams;

namespace {

const Normalizer& norm() {
  static const Normalizer kNorm;
  return kNorm;
}

CandidateGraph random_graph(std::mt19937& rng, std::size_t max_nodes) {
  std::uniform_int_distribution<std::size_t> node_count(1, max_nodes);
  std::uniform_int_distribution<int> weight(1, 9);
  std::uniform_int_distribution<int> coin(0, 2);
  std::size_t n = node_count(rng);
  CandidateGraph g;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("w" + std::to_string(i));
    g.nodes.insert(names.back());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng) == 0) g.edges[{names[i], names[j]}] = weight(rng);
    }
  }
  return g;
}

// Runs both the implementation and the dense oracle to a tight fixed point
// and returns the largest per-node difference.
double oracle_gap(const CandidateGraph& g) {
  RankParams params;
  params.tolerance = 1e-12;
  params.max_iterations = 2000;
  auto result = rank_nodes(g, params);

  std::vector<std::string> keys(g.nodes.begin(), g.nodes.end());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index[keys[i]] = i;
  std::vector<oracles::DenseEdge> edges;
  for (const auto& [pair, w] : g.edges)
    edges.push_back({index[pair.first], index[pair.second],
                     static_cast<double>(w)});
  auto expected = oracles::dense_rank(keys.size(), edges, params.damping,
                                      params.tolerance, params.max_iterations);
  double gap = 0.0;
  for (std::size_t i = 0; i < keys.size(); ++i)
    gap = std::max(gap, std::fabs(result.scores.at(keys[i]) - expected[i]));
  return gap;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("adjacent candidates share an edge of weight one") {
  auto corpus = helpers::make_corpus(
      {{{"monoidal", "monoidal", "ADJ"}, {"category", "category", "NOUN"}}});
  auto g = build_cooccurrence_graph(corpus, RankParams{}, norm());
  CHECK(g.nodes.size() == 2);
  CHECK(g.weight("monoidal", "category") == 1);
}

TEST_CASE("weights add across sentences") {
  std::vector<helpers::Tok> sentence = {{"monoidal", "monoidal", "ADJ"},
                                        {"category", "category", "NOUN"}};
  auto corpus = helpers::make_corpus({sentence, sentence, sentence});
  auto g = build_cooccurrence_graph(corpus, RankParams{}, norm());
  CHECK(g.weight("monoidal", "category") == 3);
}

TEST_CASE("window counts token distance, not candidate distance") {
  // "category" and "torsor" sit two positions apart, past the window.
  auto corpus = helpers::make_corpus({{{"category", "category", "NOUN"},
                                       {"of", "of", "ADP"},
                                       {"torsors", "torsor", "NOUN"}}});
  auto g = build_cooccurrence_graph(corpus, RankParams{}, norm());
  CHECK(g.nodes.size() == 2);
  CHECK_FALSE(g.has_edge("category", "torsor"));
  RankParams wide;
  wide.window = 3;
  auto g3 = build_cooccurrence_graph(corpus, wide, norm());
  CHECK(g3.weight("category", "torsor") == 1);
}

TEST_CASE("non-candidate sentences build an empty graph") {
  auto corpus = helpers::make_corpus(
      {{{"we", "we", "PRON"}, {"prove", "prove", "VERB"}}});
  auto g = build_cooccurrence_graph(corpus, RankParams{}, norm());
  CHECK(g.nodes.empty());
  CHECK(g.edges.empty());
  CHECK(rank_nodes(g, RankParams{}).scores.empty());
}

TEST_CASE("symmetric pair scores equally") {
  CandidateGraph g;
  g.nodes = {"a", "b"};
  g.edges[{"a", "b"}] = 4;
  auto result = rank_nodes(g, RankParams{});
  CHECK(result.converged);
  CHECK(result.scores.at("a") == doctest::Approx(result.scores.at("b")));
  CHECK(result.scores.at("a") == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("isolated node scores exactly one minus damping") {
  CandidateGraph g;
  g.nodes = {"alone"};
  RankParams params;  // d = 0.85
  auto result = rank_nodes(g, params);
  CHECK(result.scores.at("alone") == 1.0 - params.damping);
}

TEST_CASE("weighted triangle matches the dense oracle") {
  CandidateGraph g;
  g.nodes = {"a", "b", "c"};
  g.edges[{"a", "b"}] = 1;
  g.edges[{"a", "c"}] = 2;
  g.edges[{"b", "c"}] = 3;
  CHECK(oracle_gap(g) <= 1e-8);
}

TEST_CASE("random graphs match the dense oracle") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 60; ++i) {
    CHECK(oracle_gap(random_graph(rng, 10)) <= 1e-8);
  }
}

TEST_CASE("scores stay above the damping floor") {
  std::mt19937 rng(5);
  RankParams params;
  for (int i = 0; i < 40; ++i) {
    auto g = random_graph(rng, 8);
    auto result = rank_nodes(g, params);
    for (const auto& [key, score] : result.scores) {
      CHECK(score >= 1.0 - params.damping - 1e-12);
      CHECK(std::isfinite(score));
    }
  }
}

TEST_CASE("uniform edge scaling changes nothing") {
  std::mt19937 rng(6);
  for (int i = 0; i < 40; ++i) {
    auto g = random_graph(rng, 8);
    CandidateGraph scaled = g;
    for (auto& [pair, w] : scaled.edges) w *= 7;
    auto a = rank_nodes(g, RankParams{});
    auto b = rank_nodes(scaled, RankParams{});
    for (const auto& [key, score] : a.scores)
      CHECK(score == doctest::Approx(b.scores.at(key)).epsilon(1e-12));
  }
}

TEST_CASE("hitting the iteration cap reports non-convergence") {
  CandidateGraph g;
  g.nodes = {"a", "b", "c"};
  g.edges[{"a", "b"}] = 1;
  g.edges[{"b", "c"}] = 2;
  RankParams params;
  params.max_iterations = 1;
  auto result = rank_nodes(g, params);
  CHECK_FALSE(result.converged);
  CHECK(result.iterations == 1);
}

TEST_CASE("bad parameters are rejected") {
  RankParams params;
  params.damping = 1.0;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params = RankParams{};
  params.window = 1;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params = RankParams{};
  params.keep_ratio = 0.0;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
}

}  // TEST_SUITE
