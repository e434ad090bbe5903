#include "itemnet/metrics.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace itemnet {

namespace {

void check_vertex(const UndirectedGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("unknown vertex");
}

std::vector<std::vector<int>> adjacency_lists(const UndirectedGraph& g) {
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& [a, b] : g.edges) {
    check_vertex(g, a);
    check_vertex(g, b);
    adjacency[static_cast<std::size_t>(a)].push_back(b);
    adjacency[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());
  return adjacency;
}

// Brandes' accumulation, one BFS per source. Summing the dependencies over
// all sources counts each ordered (s, t) pair once, which is the scale the
// report uses; the usual halving for undirected graphs is deliberately
// omitted.
std::vector<double> betweenness_all(const UndirectedGraph& g) {
  const int n = g.vertex_count();
  const std::vector<std::vector<int>> adjacency = adjacency_lists(g);
  std::vector<double> centrality(static_cast<std::size_t>(n), 0.0);

  for (int s = 0; s < n; ++s) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> predecessors(static_cast<std::size_t>(n));
    std::vector<double> sigma(static_cast<std::size_t>(n), 0.0);
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    sigma[static_cast<std::size_t>(s)] = 1.0;
    dist[static_cast<std::size_t>(s)] = 0;

    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (int w : adjacency[static_cast<std::size_t>(v)]) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
        if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] + 1) {
          sigma[static_cast<std::size_t>(w)] += sigma[static_cast<std::size_t>(v)];
          predecessors[static_cast<std::size_t>(w)].push_back(v);
        }
      }
    }

    std::vector<double> delta(static_cast<std::size_t>(n), 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int w = *it;
      for (int v : predecessors[static_cast<std::size_t>(w)])
        delta[static_cast<std::size_t>(v)] +=
            sigma[static_cast<std::size_t>(v)] / sigma[static_cast<std::size_t>(w)] *
            (1.0 + delta[static_cast<std::size_t>(w)]);
      if (w != s) centrality[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
    }
  }
  return centrality;
}

std::vector<double> closeness_all(const UndirectedGraph& g) {
  const int n = g.vertex_count();
  const std::vector<std::vector<int>> adjacency = adjacency_lists(g);
  std::vector<double> centrality(static_cast<std::size_t>(n), 0.0);

  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    long total = 0;
    int reached = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      total += dist[static_cast<std::size_t>(v)];
      ++reached;
      for (int w : adjacency[static_cast<std::size_t>(v)]) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
      }
    }
    // A vertex that cannot reach every other vertex scores 0 by convention;
    // that also covers the single-vertex graph.
    if (reached == n && total > 0)
      centrality[static_cast<std::size_t>(s)] =
          static_cast<double>(n - 1) / static_cast<double>(total);
  }
  return centrality;
}

}  // namespace

int degree(const UndirectedGraph& g, int v) {
  check_vertex(g, v);
  int count = 0;
  for (const auto& [a, b] : g.edges)
    if (a == v || b == v) ++count;
  return count;
}

double betweenness(const UndirectedGraph& g, int v) {
  check_vertex(g, v);
  return betweenness_all(g)[static_cast<std::size_t>(v)];
}

double closeness(const UndirectedGraph& g, int v) {
  check_vertex(g, v);
  return closeness_all(g)[static_cast<std::size_t>(v)];
}

MetricsReport compute_metrics(const UndirectedGraph& g) {
  const std::vector<double> between = betweenness_all(g);
  const std::vector<double> close = closeness_all(g);
  MetricsReport report;
  report.reserve(g.vertices.size());
  for (int v = 0; v < g.vertex_count(); ++v)
    report.push_back({g.vertices[static_cast<std::size_t>(v)], degree(g, v),
                      between[static_cast<std::size_t>(v)],
                      close[static_cast<std::size_t>(v)]});
  return report;
}

}  // namespace itemnet
