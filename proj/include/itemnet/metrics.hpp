#pragma once

#include <string>
#include <vector>

#include "itemnet/graph.hpp"

namespace itemnet {

struct VertexMetrics {
  std::string vertex;
  int degree = 0;
  double betweenness = 0.0;
  double closeness = 0.0;
};

using MetricsReport = std::vector<VertexMetrics>;

int degree(const UndirectedGraph& g, int v);

// Sum over ordered pairs (s, t), s != t != v, of the geodesic fraction
// through v. Ordered-pair counting: twice the unordered convention.
double betweenness(const UndirectedGraph& g, int v);

// (n - 1) / sum of BFS distances from v; 0 when v does not reach every
// other vertex (and for the single-vertex graph).
double closeness(const UndirectedGraph& g, int v);

// All three metrics for every vertex, in vertex order.
MetricsReport compute_metrics(const UndirectedGraph& g);

}  // namespace itemnet
