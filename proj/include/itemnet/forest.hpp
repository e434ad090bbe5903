#pragma once

#include <vector>

#include "itemnet/dataset.hpp"
#include "itemnet/graph.hpp"
#include "itemnet/stats.hpp"

namespace itemnet {

// Candidate edge between positions a < b of the variable list, scored by
// bic_edge_weight.
struct ScoredEdge {
  int a = 0;
  int b = 0;
  double weight = 0.0;
};

// All pairwise candidate weights for the given dataset variables; indices
// in the result address positions in `variables`.
std::vector<ScoredEdge> forest_edge_weights(const IndicatorDataset& ds,
                                            const std::vector<int>& variables,
                                            const ScoreConfig& cfg = {});

// Greedy maximum-weight spanning forest over positive BIC edge weights,
// which minimizes total BIC over all forests on these vertices. Candidate
// edges are taken by descending weight with ties broken on the
// (min index, max index) pair. `variables` indexes into ds; when
// include_status is set the status column joins as an ordinary 3-level
// node.
Forest learn_min_bic_forest(const IndicatorDataset& ds, std::vector<int> variables,
                            bool include_status = false, const ScoreConfig& cfg = {});

}  // namespace itemnet
