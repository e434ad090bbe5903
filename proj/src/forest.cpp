#include "itemnet/forest.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace itemnet {

std::vector<ScoredEdge> forest_edge_weights(const IndicatorDataset& ds,
                                            const std::vector<int>& variables,
                                            const ScoreConfig& cfg) {
  const int m = static_cast<int>(variables.size());
  std::vector<ScoredEdge> edges;
  edges.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      edges.push_back({a, b,
                       bic_edge_weight(ds, variables[static_cast<std::size_t>(a)],
                                       variables[static_cast<std::size_t>(b)], cfg)});
  return edges;
}

Forest learn_min_bic_forest(const IndicatorDataset& ds, std::vector<int> variables,
                            bool include_status, const ScoreConfig& cfg) {
  if (include_status && ds.has_status()) {
    const int status_var = ds.item_count();
    if (std::find(variables.begin(), variables.end(), status_var) == variables.end())
      variables.push_back(status_var);
  }
  if (variables.empty()) throw std::invalid_argument("empty variable set");

  Forest forest;
  forest.vertices.reserve(variables.size());
  for (int var : variables) forest.vertices.push_back(ds.variable_name(var));

  std::vector<ScoredEdge> candidates = forest_edge_weights(ds, variables, cfg);
  // Heaviest first; equal weights fall back to the (min, max) index pair so
  // the learned edge set is identical across runs and platforms.
  std::sort(candidates.begin(), candidates.end(),
            [](const ScoredEdge& x, const ScoredEdge& y) {
              if (x.weight != y.weight) return x.weight > y.weight;
              if (x.a != y.a) return x.a < y.a;
              return x.b < y.b;
            });

  // Kruskal over the graphic matroid: every positive-weight edge joining
  // two components is optimal to take, so the greedy forest attains the
  // minimum BIC over all forests on these vertices.
  std::vector<int> parent(variables.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };

  for (const ScoredEdge& e : candidates) {
    if (e.weight <= 0.0) break;  // sorted: nothing admissible remains
    const int ra = find(e.a), rb = find(e.b);
    if (ra == rb) continue;
    parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    forest.edges.emplace_back(e.a, e.b);
  }
  std::sort(forest.edges.begin(), forest.edges.end());
  return forest;
}

}  // namespace itemnet
