#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "itemnet/dataset.hpp"

namespace itemnet {

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Empirical joint counts of one variable pair; rows index the first
// variable's values, columns the second's.
struct ContingencyTable {
  CountMatrix cells;

  std::int64_t total() const { return cells.sum(); }
};

// Scoring knobs. penalty is the per-free-parameter weight kappa; unset
// means ln(N)/2, the classic BIC. Natural logarithms throughout.
struct ScoreConfig {
  std::optional<double> penalty;

  double penalty_for(std::int64_t sample_size) const;
};

ContingencyTable pair_counts(const IndicatorDataset& ds, int i, int j);

// Plug-in MLE estimate in nats, with the 0 ln 0 = 0 convention.
double mutual_information(const ContingencyTable& tab);

// Plug-in marginal entropies (H_row, H_col) in nats.
std::pair<double, double> marginal_entropies(const ContingencyTable& tab);

// w_ij = 2 N MI - 2 kappa (r_i - 1)(r_j - 1); at the default kappa this is
// the BIC decrease achieved by adding edge (i, j) to a forest.
double bic_edge_weight(const IndicatorDataset& ds, int i, int j, const ScoreConfig& cfg = {});

// Maximized conditional log-likelihood of child given the parent set minus
// kappa * (r_child - 1) * prod r_p. Parent configurations with zero count
// contribute zero.
double dag_family_score(const IndicatorDataset& ds, int child, const std::vector<int>& parents,
                        const ScoreConfig& cfg = {});

// Free parameters of one family: (r_child - 1) * prod over parents of r_p.
double family_dimension(const IndicatorDataset& ds, int child, const std::vector<int>& parents);

// Exact 2^(n(n-1)/2), the number of undirected graphs on n labelled
// vertices. Far beyond any machine word, so carried as a decimal string.
struct GraphSpaceSize {
  std::uint64_t exponent = 0;  // n(n-1)/2
  std::string digits;          // exact decimal rendering of 2^exponent

  // Leading-digit rendering like "1.44e76" (digits truncated, not rounded).
  std::string scientific(int mantissa_digits = 2) const;
};

GraphSpaceSize graph_space_size(int n);

}  // namespace itemnet
