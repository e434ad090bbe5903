#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "itemnet/dataset.hpp"
#include "itemnet/graph.hpp"
#include "itemnet/rng.hpp"
#include "itemnet/transactions.hpp"

namespace itemnet {

// Conditional probability table for one variable. Rows index parent value
// configurations with the first listed parent as the least significant
// digit; columns index the child's values. Parentless variables hold a
// single row (the marginal).
struct Cpt {
  std::vector<int> parents;   // vertex indices, in digit order
  Eigen::MatrixXd table;      // configs x child cardinality, rows sum to 1
};

struct DagModel {
  Dag dag;
  std::vector<Cpt> cpts;  // one per vertex, indexed like dag.vertices
  std::optional<std::vector<std::string>> temporal_order;

  // Throws std::invalid_argument on shape mismatches, rows off unit sum
  // by more than 1e-12, or a temporal_order that is not a permutation of
  // the vertex names.
  void validate() const;
};

// Pairwise model over a forest: marginals everywhere, and for each edge a
// child-given-parent table under the rooted orientation.
struct ForestModel {
  Forest forest;
  std::vector<Eigen::VectorXd> marginals;  // one per vertex
  // Keyed (parent, child) with the parent nearer each tree's root (the
  // smallest-index vertex of its component). table(p, c) = P(child=c | parent=p).
  std::map<VertexPair, Eigen::MatrixXd> conditionals;
  std::optional<std::vector<std::string>> temporal_order;
};

// Orients every edge away from each component's smallest-index vertex.
// Returned pairs are (parent, child) in BFS discovery order.
std::vector<VertexPair> rooted_edges(const Forest& forest);

// Equivalent single-parent DAG model: roots keep their marginals, every
// other vertex gets its conditional given its rooted parent.
DagModel rooted_dag_model(const ForestModel& model);

// Ancestral sampling. Row r draws from substream(seed, r), consuming one
// uniform per variable in topological order (ties by vertex index).
IndicatorDataset sample_dag_model(const DagModel& model, Eigen::Index n_rows,
                                  std::uint64_t seed);
IndicatorDataset sample_forest_model(const ForestModel& model, Eigen::Index n_rows,
                                     std::uint64_t seed);

// Transaction-log view of sampled rows: each subject's positive items
// become one visit each, dated by spreading k visits across `year` in the
// model's temporal order (falling back to vertex order), plus one extra
// uniform draw per subject for the three-level status field.
TransactionLog sample_itineraries(const DagModel& model, Eigen::Index n_subjects,
                                  std::uint64_t seed, int year);
TransactionLog sample_itineraries(const ForestModel& model, Eigen::Index n_subjects,
                                  std::uint64_t seed, int year);

// Uniform random labeled tree on n vertices via a random Prufer sequence.
Forest random_spanning_tree(int n, SplitMix64& rng);

// Binary model on `forest`: fair marginals at roots and
// P(child = parent's value) = fidelity along every rooted edge.
ForestModel symmetric_tree_model(const Forest& forest, double fidelity);

// Random binary DAG model: a random permutation fixes a topological order,
// each forward pair becomes an arc with probability arc_prob, and CPT rows
// draw P(child=1) uniformly from [p_lo, p_hi]. temporal_order records the
// permutation.
DagModel random_dag_model(int n, double arc_prob, SplitMix64& rng, double p_lo = 0.1,
                          double p_hi = 0.9);

// "M001", "M002", ... zero-padded to at least three digits.
std::vector<std::string> item_catalog(int n);

}  // namespace itemnet
