#include "itemnet/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace itemnet {

namespace {

void check_vertex(int vertex_count, int v, const char* what) {
  if (v < 0 || v >= vertex_count) throw std::invalid_argument(what);
}

// Plain union-find with path compression; union by attaching higher root
// under lower keeps component representatives deterministic.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      parent_[static_cast<std::size_t>(v)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
  }

  // False when a and b were already connected.
  bool merge(int a, int b) {
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent_[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

bool UndirectedGraph::has_edge(int a, int b) const {
  const VertexPair key{std::min(a, b), std::max(a, b)};
  return std::find(edges.begin(), edges.end(), key) != edges.end();
}

int UndirectedGraph::index_of(const std::string& name) const {
  const auto it = std::find(vertices.begin(), vertices.end(), name);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

bool is_forest(const UndirectedGraph& g) {
  DisjointSets sets(g.vertex_count());
  for (const auto& [a, b] : g.edges) {
    check_vertex(g.vertex_count(), a, "edge endpoint out of range");
    check_vertex(g.vertex_count(), b, "edge endpoint out of range");
    if (a == b || !sets.merge(a, b)) return false;
  }
  return true;
}

std::vector<std::vector<int>> connected_components(const UndirectedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  for (const auto& [a, b] : g.edges) {
    check_vertex(n, a, "edge endpoint out of range");
    check_vertex(n, b, "edge endpoint out of range");
    adjacency[static_cast<std::size_t>(a)].push_back(b);
    adjacency[static_cast<std::size_t>(b)].push_back(a);
  }

  std::vector<std::vector<int>> components;
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<int> component;
    std::vector<int> stack{start};
    visited[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (int u : adjacency[static_cast<std::size_t>(v)]) {
        if (!visited[static_cast<std::size_t>(u)]) {
          visited[static_cast<std::size_t>(u)] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  // Seeds were taken in ascending order, so components already come sorted
  // by their smallest member.
  return components;
}

bool Dag::has_arc(int from, int to) const {
  return std::find(arcs.begin(), arcs.end(), VertexPair{from, to}) != arcs.end();
}

int Dag::index_of(const std::string& name) const {
  const auto it = std::find(vertices.begin(), vertices.end(), name);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

bool is_acyclic(int vertex_count, const std::vector<VertexPair>& arcs) {
  std::vector<std::vector<int>> children(static_cast<std::size_t>(vertex_count));
  std::vector<int> indegree(static_cast<std::size_t>(vertex_count), 0);
  for (const auto& [from, to] : arcs) {
    check_vertex(vertex_count, from, "arc endpoint out of range");
    check_vertex(vertex_count, to, "arc endpoint out of range");
    children[static_cast<std::size_t>(from)].push_back(to);
    ++indegree[static_cast<std::size_t>(to)];
  }

  std::vector<int> ready;
  for (int v = 0; v < vertex_count; ++v)
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);

  int removed = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int u : children[static_cast<std::size_t>(v)])
      if (--indegree[static_cast<std::size_t>(u)] == 0) ready.push_back(u);
  }
  return removed == vertex_count;
}

bool is_acyclic(const Dag& g) { return is_acyclic(g.vertex_count(), g.arcs); }

std::vector<int> parents(const Dag& g, int v) {
  check_vertex(g.vertex_count(), v, "unknown vertex");
  std::vector<int> result;
  for (const auto& [from, to] : g.arcs)
    if (to == v) result.push_back(from);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::string> statistical_time(const Dag& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (const auto& [from, to] : g.arcs) {
    check_vertex(n, from, "arc endpoint out of range");
    check_vertex(n, to, "arc endpoint out of range");
    children[static_cast<std::size_t>(from)].push_back(to);
    ++indegree[static_cast<std::size_t>(to)];
  }

  // Kahn's algorithm with a min-heap on vertex names: always emitting the
  // smallest available name yields the lexicographically smallest
  // topological order.
  using Entry = std::pair<std::string, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indegree[static_cast<std::size_t>(v)] == 0)
      ready.emplace(g.vertices[static_cast<std::size_t>(v)], v);

  std::vector<std::string> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!ready.empty()) {
    const auto [name, v] = ready.top();
    ready.pop();
    order.push_back(name);
    for (int u : children[static_cast<std::size_t>(v)])
      if (--indegree[static_cast<std::size_t>(u)] == 0)
        ready.emplace(g.vertices[static_cast<std::size_t>(u)], u);
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("statistical_time of a cyclic graph");
  return order;
}

}  // namespace itemnet
