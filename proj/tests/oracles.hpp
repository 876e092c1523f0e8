// Independent brute-force oracles used by the tests. These deliberately share
// no code with the library: the ranking oracle is a dense fixed-point
// iteration, the set oracles are naive linear scans.

#ifndef TERMEX_TESTS_ORACLES_HPP_
#define TERMEX_TESTS_ORACLES_HPP_

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracles {

struct DenseEdge {
  std::size_t a;
  std::size_t b;
  double weight;
};

// Damped ranking over an undirected weighted graph, dense matrix form:
//   s'(v) = (1 - d) + d * sum_u M[u][v] * s(u),  M[u][v] = w(u,v) / rowsum(u).
inline std::vector<double> dense_rank(std::size_t n,
                                      const std::vector<DenseEdge>& edges,
                                      double damping, double tolerance,
                                      int max_iterations) {
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (const DenseEdge& e : edges) {
    w[e.a][e.b] += e.weight;
    w[e.b][e.a] += e.weight;
  }
  std::vector<double> row_sum(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) row_sum[i] += w[i][j];

  std::vector<double> score(n, 1.0);
  std::vector<double> next(n, 0.0);
  for (int iter = 0; iter < max_iterations; ++iter) {
    double max_delta = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      double sum = 0.0;
      for (std::size_t u = 0; u < n; ++u) {
        if (w[u][v] == 0.0 || row_sum[u] == 0.0) continue;
        sum += w[u][v] / row_sum[u] * score[u];
      }
      next[v] = (1.0 - damping) + damping * sum;
      max_delta = std::max(max_delta, std::fabs(next[v] - score[v]));
    }
    score = next;
    if (max_delta < tolerance) break;
  }
  return score;
}

struct NaiveConfusion {
  std::vector<std::string> tp, fp, fn;
};

// All-pairs comparison, no sets or sorting.
inline NaiveConfusion naive_confusion(const std::vector<std::string>& pred,
                                      const std::vector<std::string>& ref) {
  NaiveConfusion out;
  auto contains = [](const std::vector<std::string>& hay,
                     const std::string& needle) {
    for (const auto& h : hay)
      if (h == needle) return true;
    return false;
  };
  for (const auto& p : pred) {
    if (contains(ref, p)) {
      out.tp.push_back(p);
    } else {
      out.fp.push_back(p);
    }
  }
  for (const auto& r : ref) {
    if (!contains(pred, r)) out.fn.push_back(r);
  }
  return out;
}

// Region mask -> size, by testing each key against each list directly.
inline std::map<std::uint32_t, std::size_t> naive_overlap(
    const std::vector<std::vector<std::string>>& lists) {
  auto contains = [](const std::vector<std::string>& hay,
                     const std::string& needle) {
    for (const auto& h : hay)
      if (h == needle) return true;
    return false;
  };
  std::vector<std::string> all;
  for (const auto& list : lists) {
    for (const auto& key : list) {
      if (!contains(all, key)) all.push_back(key);
    }
  }
  std::map<std::uint32_t, std::size_t> sizes;
  for (const auto& key : all) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < lists.size(); ++i) {
      if (contains(lists[i], key)) mask |= 1u << i;
    }
    sizes[mask] += 1;
  }
  return sizes;
}

}  // namespace oracles

#endif  // TERMEX_TESTS_ORACLES_HPP_
