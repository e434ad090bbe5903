#include "itemnet/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <stdexcept>

namespace itemnet {

namespace {

int cardinality_of(const DagModel& model, int v) {
  return static_cast<int>(model.cpts[static_cast<std::size_t>(v)].table.cols());
}

// Topological order with ties broken by vertex index, so sampling visits
// variables in one fixed order for a given structure.
std::vector<int> topological_order(const Dag& dag) {
  const int n = dag.vertex_count();
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
  for (const auto& [from, to] : dag.arcs) {
    children[static_cast<std::size_t>(from)].push_back(to);
    ++indegree[static_cast<std::size_t>(to)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int u : children[static_cast<std::size_t>(v)])
      if (--indegree[static_cast<std::size_t>(u)] == 0) ready.push(u);
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("model graph is cyclic");
  return order;
}

int draw_from_row(const Eigen::MatrixXd& table, Eigen::Index row, double u) {
  double cumulative = 0.0;
  for (Eigen::Index c = 0; c + 1 < table.cols(); ++c) {
    cumulative += table(row, c);
    if (u < cumulative) return static_cast<int>(c);
  }
  return static_cast<int>(table.cols() - 1);  // absorbs FP slack in the row sum
}

// One ancestral draw per variable, in the given topological order.
std::vector<int> sample_row(const DagModel& model, const std::vector<int>& topo,
                            SplitMix64& rng) {
  std::vector<int> values(model.cpts.size(), 0);
  for (int v : topo) {
    const Cpt& cpt = model.cpts[static_cast<std::size_t>(v)];
    Eigen::Index config = 0;
    Eigen::Index stride = 1;
    for (int p : cpt.parents) {  // first parent is the least significant digit
      config += stride * values[static_cast<std::size_t>(p)];
      stride *= cardinality_of(model, p);
    }
    values[static_cast<std::size_t>(v)] = draw_from_row(cpt.table, config, rng.uniform());
  }
  return values;
}

void require_binary(const DagModel& model) {
  for (int v = 0; v < model.dag.vertex_count(); ++v)
    if (cardinality_of(model, v) != 2)
      throw std::invalid_argument("indicator sampling requires binary variables");
}

// Sampling order for itineraries: the model's declared temporal order when
// present, vertex order otherwise.
std::vector<int> itinerary_order(const DagModel& model) {
  if (!model.temporal_order) {
    std::vector<int> order(static_cast<std::size_t>(model.dag.vertex_count()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    return order;
  }
  std::vector<int> order;
  order.reserve(model.temporal_order->size());
  for (const std::string& name : *model.temporal_order)
    order.push_back(model.dag.index_of(name));
  return order;
}

bool is_leap(int y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

}  // namespace

void DagModel::validate() const {
  if (cpts.size() != dag.vertices.size())
    throw std::invalid_argument("one CPT per vertex required");
  if (!is_acyclic(dag)) throw std::invalid_argument("model graph is cyclic");

  for (int v = 0; v < dag.vertex_count(); ++v) {
    const Cpt& cpt = cpts[static_cast<std::size_t>(v)];
    if (cpt.table.cols() < 1)
      throw std::invalid_argument("CPT with no child values at vertex " + std::to_string(v));

    std::vector<int> declared = cpt.parents;
    std::sort(declared.begin(), declared.end());
    if (declared != parents(dag, v))
      throw std::invalid_argument("CPT parents disagree with the graph at vertex " +
                                  std::to_string(v));

    Eigen::Index configs = 1;
    for (int p : cpt.parents) configs *= cardinality_of(*this, p);
    if (cpt.table.rows() != configs)
      throw std::invalid_argument("CPT row count mismatch at vertex " + std::to_string(v));

    for (Eigen::Index row = 0; row < cpt.table.rows(); ++row) {
      if ((cpt.table.row(row).array() < 0.0).any())
        throw std::invalid_argument("negative CPT entry at vertex " + std::to_string(v));
      if (std::abs(cpt.table.row(row).sum() - 1.0) > 1e-12)
        throw std::invalid_argument("CPT row does not sum to 1 at vertex " +
                                    std::to_string(v));
    }
  }

  if (temporal_order) {
    std::vector<std::string> sorted_order = *temporal_order;
    std::sort(sorted_order.begin(), sorted_order.end());
    std::vector<std::string> sorted_names = dag.vertices;
    std::sort(sorted_names.begin(), sorted_names.end());
    if (sorted_order != sorted_names)
      throw std::invalid_argument("temporal order is not a permutation of the vertices");
  }
}

std::vector<VertexPair> rooted_edges(const Forest& forest) {
  const int n = forest.vertex_count();
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  for (const auto& [a, b] : forest.edges) {
    adjacency[static_cast<std::size_t>(a)].push_back(b);
    adjacency[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());

  std::vector<VertexPair> oriented;
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  for (const std::vector<int>& component : connected_components(forest)) {
    std::queue<int> frontier;
    frontier.push(component.front());  // smallest index is the tree's root
    visited[static_cast<std::size_t>(component.front())] = true;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int u : adjacency[static_cast<std::size_t>(v)]) {
        if (visited[static_cast<std::size_t>(u)]) continue;
        visited[static_cast<std::size_t>(u)] = true;
        oriented.emplace_back(v, u);
        frontier.push(u);
      }
    }
  }
  return oriented;
}

DagModel rooted_dag_model(const ForestModel& model) {
  if (model.marginals.size() != model.forest.vertices.size())
    throw std::invalid_argument("one marginal per vertex required");

  DagModel rooted;
  rooted.dag.vertices = model.forest.vertices;
  rooted.temporal_order = model.temporal_order;

  rooted.cpts.resize(model.forest.vertices.size());
  for (std::size_t v = 0; v < model.forest.vertices.size(); ++v) {
    rooted.cpts[v].table = model.marginals[v].transpose();  // 1 x r marginal row
  }
  const std::vector<VertexPair> oriented = rooted_edges(model.forest);
  for (const auto& [parent, child] : oriented) {
    const auto it = model.conditionals.find({parent, child});
    if (it == model.conditionals.end())
      throw std::invalid_argument("missing conditional table for rooted edge " +
                                  std::to_string(parent) + "->" + std::to_string(child));
    Cpt& cpt = rooted.cpts[static_cast<std::size_t>(child)];
    cpt.parents = {parent};
    cpt.table = it->second;
  }
  rooted.dag.arcs = oriented;
  std::sort(rooted.dag.arcs.begin(), rooted.dag.arcs.end());
  return rooted;
}

IndicatorDataset sample_dag_model(const DagModel& model, Eigen::Index n_rows,
                                  std::uint64_t seed) {
  if (n_rows < 1) throw std::invalid_argument("need at least one row");
  model.validate();
  require_binary(model);
  const std::vector<int> topo = topological_order(model.dag);

  IndicatorDataset ds;
  ds.items = model.dag.vertices;
  ds.indicators = IndicatorMatrix(n_rows, model.dag.vertex_count());
  for (Eigen::Index row = 0; row < n_rows; ++row) {
    SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(row));
    const std::vector<int> values = sample_row(model, topo, rng);
    for (int v = 0; v < model.dag.vertex_count(); ++v)
      ds.indicators(row, v) = static_cast<std::uint8_t>(values[static_cast<std::size_t>(v)]);
  }
  return ds;
}

IndicatorDataset sample_forest_model(const ForestModel& model, Eigen::Index n_rows,
                                     std::uint64_t seed) {
  return sample_dag_model(rooted_dag_model(model), n_rows, seed);
}

TransactionLog sample_itineraries(const DagModel& model, Eigen::Index n_subjects,
                                  std::uint64_t seed, int year) {
  if (n_subjects < 1) throw std::invalid_argument("need at least one subject");
  model.validate();
  require_binary(model);
  const std::vector<int> topo = topological_order(model.dag);
  const std::vector<int> visit_order = itinerary_order(model);

  const Date jan1 = Date::from_civil(year, 1, 1);
  const int days_in_year = is_leap(year) ? 366 : 365;

  TransactionLog log;
  for (const std::string& name : model.dag.vertices) log.item_universe.insert(name);

  for (Eigen::Index subject = 0; subject < n_subjects; ++subject) {
    SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(subject));
    const std::vector<int> values = sample_row(model, topo, rng);
    // Status is independent of the items; one draw regardless of the row.
    const auto status = static_cast<Status>(
        std::min(static_cast<int>(rng.uniform() * 3.0), 2));

    std::vector<int> visited;
    for (int v : visit_order)
      if (values[static_cast<std::size_t>(v)] == 1) visited.push_back(v);
    if (visited.empty()) continue;  // subscribed but never visited a modeled item

    char id[24];
    std::snprintf(id, sizeof(id), "s%08lu", static_cast<unsigned long>(subject + 1));

    // Visits spread evenly across the year in temporal order; the gap
    // days_in_year / (k + 1) is always >= 1 for k <= 64 items, so the
    // day-stamps are strictly increasing.
    const long k = static_cast<long>(visited.size());
    for (long i = 0; i < k; ++i) {
      TransactionRecord rec;
      rec.subject_id = id;
      rec.item_code = model.dag.vertices[static_cast<std::size_t>(visited[static_cast<std::size_t>(i)])];
      rec.timestamp = Date::from_days(
          jan1.days() + static_cast<int>((i + 1) * days_in_year / (k + 1)));
      rec.status = status;
      log.records.push_back(std::move(rec));
    }
  }
  return log;
}

TransactionLog sample_itineraries(const ForestModel& model, Eigen::Index n_subjects,
                                  std::uint64_t seed, int year) {
  return sample_itineraries(rooted_dag_model(model), n_subjects, seed, year);
}

Forest random_spanning_tree(int n, SplitMix64& rng) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  Forest tree;
  tree.vertices = item_catalog(n);
  if (n == 1) return tree;
  if (n == 2) {
    tree.edges = {{0, 1}};
    return tree;
  }

  // Uniform over labeled trees via a random Prufer sequence.
  std::vector<int> sequence(static_cast<std::size_t>(n - 2));
  for (int& s : sequence) s = rng.below(n);

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int s : sequence) ++degree[static_cast<std::size_t>(s)];

  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);

  for (int s : sequence) {
    const int leaf = leaves.top();
    leaves.pop();
    tree.edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
    degree[static_cast<std::size_t>(leaf)] = 0;
    if (--degree[static_cast<std::size_t>(s)] == 1) leaves.push(s);
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) last.push_back(v);
  tree.edges.emplace_back(last[0], last[1]);
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

ForestModel symmetric_tree_model(const Forest& forest, double fidelity) {
  if (!(fidelity >= 0.0 && fidelity <= 1.0))
    throw std::invalid_argument("fidelity outside [0,1]");

  ForestModel model;
  model.forest = forest;
  model.marginals.assign(forest.vertices.size(), Eigen::Vector2d(0.5, 0.5));
  for (const auto& [parent, child] : rooted_edges(forest)) {
    Eigen::Matrix2d table;
    table << fidelity, 1.0 - fidelity, 1.0 - fidelity, fidelity;
    model.conditionals.emplace(VertexPair{parent, child}, table);
  }
  return model;
}

DagModel random_dag_model(int n, double arc_prob, SplitMix64& rng, double p_lo,
                          double p_hi) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  if (!(arc_prob >= 0.0 && arc_prob <= 1.0))
    throw std::invalid_argument("arc probability outside [0,1]");
  if (!(0.0 <= p_lo && p_lo <= p_hi && p_hi <= 1.0))
    throw std::invalid_argument("CPT probability range invalid");

  DagModel model;
  model.dag.vertices = item_catalog(n);

  // A random permutation fixes the topological order; only forward pairs
  // can become arcs, so the result is acyclic by construction.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  for (int i = n - 1; i > 0; --i) {
    const int j = rng.below(i + 1);
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform() < arc_prob)
        model.dag.arcs.emplace_back(order[static_cast<std::size_t>(i)],
                                    order[static_cast<std::size_t>(j)]);
  std::sort(model.dag.arcs.begin(), model.dag.arcs.end());

  model.cpts.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    Cpt& cpt = model.cpts[static_cast<std::size_t>(v)];
    cpt.parents = parents(model.dag, v);
    const Eigen::Index configs = Eigen::Index{1} << cpt.parents.size();
    cpt.table.resize(configs, 2);
    for (Eigen::Index row = 0; row < configs; ++row) {
      const double p_one = p_lo + rng.uniform() * (p_hi - p_lo);
      cpt.table(row, 0) = 1.0 - p_one;
      cpt.table(row, 1) = p_one;
    }
  }

  std::vector<std::string> temporal;
  temporal.reserve(static_cast<std::size_t>(n));
  for (int position = 0; position < n; ++position)
    temporal.push_back(model.dag.vertices[static_cast<std::size_t>(
        order[static_cast<std::size_t>(position)])]);
  model.temporal_order = std::move(temporal);
  return model;
}

std::vector<std::string> item_catalog(int n) {
  if (n < 0) throw std::invalid_argument("negative catalog size");
  int width = 3;
  for (long bound = 1000; bound <= n; bound *= 10) ++width;  // at most 10 digits

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "M%0*d", std::min(width, 10), i);
    names.emplace_back(buf);
  }
  return names;
}

}  // namespace itemnet
