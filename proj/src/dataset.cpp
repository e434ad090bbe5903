#include "itemnet/dataset.hpp"

#include <set>
#include <stdexcept>

namespace itemnet {

std::vector<std::string> IndicatorDataset::variable_names() const {
  std::vector<std::string> names = items;
  if (has_status()) names.emplace_back(kStatusName);
  return names;
}

void IndicatorDataset::validate() const {
  if (indicators.cols() != static_cast<Eigen::Index>(items.size()))
    throw std::invalid_argument("indicator column count does not match item name count");

  const std::set<std::string> unique(items.begin(), items.end());
  if (unique.size() != items.size()) throw std::invalid_argument("duplicate item names");
  if (unique.count(kStatusName) != 0)
    throw std::invalid_argument("item name collides with the status variable name");

  for (Eigen::Index r = 0; r < indicators.rows(); ++r)
    for (Eigen::Index c = 0; c < indicators.cols(); ++c)
      if (indicators(r, c) > 1) throw std::invalid_argument("indicator cell outside {0,1}");

  if (status) {
    if (status->size() != indicators.rows())
      throw std::invalid_argument("status column length does not match row count");
    for (Eigen::Index r = 0; r < status->size(); ++r)
      if ((*status)(r) > 2) throw std::invalid_argument("status value outside {0,1,2}");
  }
}

}  // namespace itemnet
