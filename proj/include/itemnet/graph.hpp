#pragma once

#include <string>
#include <utility>
#include <vector>

namespace itemnet {

using VertexPair = std::pair<int, int>;

// Undirected graph over named vertices. Edges are index pairs with
// first < second, kept sorted; vertices keep their construction order.
struct UndirectedGraph {
  std::vector<std::string> vertices;
  std::vector<VertexPair> edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  bool has_edge(int a, int b) const;
  int index_of(const std::string& name) const;  // -1 if absent
};

// A forest is an undirected graph with no cycles; learn_min_bic_forest only
// produces such graphs and is_forest lets callers assert the invariant.
using Forest = UndirectedGraph;

bool is_forest(const UndirectedGraph& g);

// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const UndirectedGraph& g);

// Directed graph; arcs are (parent, child) index pairs, kept sorted.
struct Dag {
  std::vector<std::string> vertices;
  std::vector<VertexPair> arcs;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  bool has_arc(int from, int to) const;
  int index_of(const std::string& name) const;
};

// Kahn-style elimination; throws std::invalid_argument when an arc names a
// vertex outside [0, vertex_count).
bool is_acyclic(int vertex_count, const std::vector<VertexPair>& arcs);
bool is_acyclic(const Dag& g);

// Sorted parent indices of v.
std::vector<int> parents(const Dag& g, int v);

// The lexicographically smallest (by vertex name) topological order.
// Throws std::invalid_argument on cyclic input.
std::vector<std::string> statistical_time(const Dag& g);

}  // namespace itemnet
