#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace itemnet {

using IndicatorMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;
using StatusVector = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, 1>;

// Binary item indicators, one row per subject, plus an optional 3-level
// subscriber-status column. The status column, when present, is addressed
// as the last variable index and named kStatusName.
struct IndicatorDataset {
  static constexpr const char* kStatusName = "S";

  std::vector<std::string> items;      // indicator column names
  IndicatorMatrix indicators;          // N x items.size(), cells in {0,1}
  std::optional<StatusVector> status;  // length N, values in {0,1,2}

  Eigen::Index sample_size() const { return indicators.rows(); }
  int item_count() const { return static_cast<int>(items.size()); }
  bool has_status() const { return status.has_value(); }
  int variable_count() const { return item_count() + (has_status() ? 1 : 0); }

  bool is_status_variable(int var) const { return has_status() && var == item_count(); }
  int cardinality(int var) const { return is_status_variable(var) ? 3 : 2; }

  std::string variable_name(int var) const {
    return is_status_variable(var) ? std::string(kStatusName) : items[static_cast<std::size_t>(var)];
  }

  // All variable names in index order (items, then the status column).
  std::vector<std::string> variable_names() const;

  std::uint8_t value(Eigen::Index row, int var) const {
    return var < item_count() ? indicators(row, var) : (*status)(row);
  }

  // Throws std::invalid_argument on violated invariants (cell domains,
  // column/name mismatch, status length).
  void validate() const;
};

}  // namespace itemnet
