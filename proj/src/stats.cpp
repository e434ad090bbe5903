#include "itemnet/stats.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace itemnet {

namespace {

void check_variable(const IndicatorDataset& ds, int var) {
  if (var < 0 || var >= ds.variable_count())
    throw std::out_of_range("variable index out of range");
}

}  // namespace

double ScoreConfig::penalty_for(std::int64_t sample_size) const {
  if (penalty) {
    if (*penalty < 0.0) throw std::invalid_argument("negative penalty");
    return *penalty;
  }
  return 0.5 * std::log(static_cast<double>(sample_size));
}

ContingencyTable pair_counts(const IndicatorDataset& ds, int i, int j) {
  check_variable(ds, i);
  check_variable(ds, j);
  if (i == j) throw std::invalid_argument("pair_counts requires two distinct variables");

  ContingencyTable tab;
  tab.cells = CountMatrix::Zero(ds.cardinality(i), ds.cardinality(j));
  for (Eigen::Index row = 0; row < ds.sample_size(); ++row)
    ++tab.cells(ds.value(row, i), ds.value(row, j));
  return tab;
}

double mutual_information(const ContingencyTable& tab) {
  const double n = static_cast<double>(tab.total());
  if (!(n > 0.0)) throw std::invalid_argument("mutual information of an empty table");

  const Eigen::VectorXd row_sums = tab.cells.cast<double>().rowwise().sum();
  const Eigen::VectorXd col_sums = tab.cells.cast<double>().colwise().sum();

  double mi = 0.0;
  for (Eigen::Index a = 0; a < tab.cells.rows(); ++a) {
    for (Eigen::Index b = 0; b < tab.cells.cols(); ++b) {
      const double c = static_cast<double>(tab.cells(a, b));
      if (c > 0.0) mi += (c / n) * std::log(c * n / (row_sums(a) * col_sums(b)));
    }
  }
  // The plug-in estimate is non-negative by Jensen; rounding can leave a
  // tiny negative residue on independent columns.
  return std::max(mi, 0.0);
}

std::pair<double, double> marginal_entropies(const ContingencyTable& tab) {
  const double n = static_cast<double>(tab.total());
  if (!(n > 0.0)) throw std::invalid_argument("entropy of an empty table");

  const auto entropy = [n](const Eigen::VectorXd& sums) {
    double h = 0.0;
    for (Eigen::Index a = 0; a < sums.size(); ++a)
      if (sums(a) > 0.0) h -= (sums(a) / n) * std::log(sums(a) / n);
    return h;
  };
  return {entropy(tab.cells.cast<double>().rowwise().sum()),
          entropy(tab.cells.cast<double>().colwise().sum())};
}

double bic_edge_weight(const IndicatorDataset& ds, int i, int j, const ScoreConfig& cfg) {
  const ContingencyTable tab = pair_counts(ds, i, j);
  const double n = static_cast<double>(ds.sample_size());
  const double kappa = cfg.penalty_for(ds.sample_size());
  const double df = static_cast<double>((ds.cardinality(i) - 1) * (ds.cardinality(j) - 1));
  return 2.0 * n * mutual_information(tab) - 2.0 * kappa * df;
}

double family_dimension(const IndicatorDataset& ds, int child,
                        const std::vector<int>& parents) {
  check_variable(ds, child);
  double dim = static_cast<double>(ds.cardinality(child) - 1);
  for (int p : parents) {
    check_variable(ds, p);
    if (p == child) throw std::invalid_argument("child listed among its parents");
    dim *= static_cast<double>(ds.cardinality(p));
  }
  return dim;
}

double dag_family_score(const IndicatorDataset& ds, int child, const std::vector<int>& parents,
                        const ScoreConfig& cfg) {
  // Penalty first: family_dimension also validates the index arguments,
  // and the penalty must count every parent configuration whether or not
  // it occurs in the data.
  const double kappa = cfg.penalty_for(ds.sample_size());
  const double penalty = kappa * family_dimension(ds, child, parents);

  const int r_child = ds.cardinality(child);
  std::uint64_t configs = 1;
  bool dense = true;
  for (int p : parents) {
    configs *= static_cast<std::uint64_t>(ds.cardinality(p));
    if (configs > (1u << 20)) {
      dense = false;
      break;
    }
  }

  // Joint counts n(parent config, child value); the first listed parent is
  // the least significant digit of the config index. Dense vector for
  // ordinary parent sets, hash map once the configuration space outgrows it.
  std::vector<std::int64_t> dense_store;
  std::unordered_map<std::uint64_t, std::array<std::int64_t, 4>> sparse_store;
  if (r_child > 4) throw std::invalid_argument("child cardinality above 4 is unsupported");
  if (dense) dense_store.assign(configs * static_cast<std::uint64_t>(r_child), 0);

  for (Eigen::Index row = 0; row < ds.sample_size(); ++row) {
    std::uint64_t config = 0;
    std::uint64_t stride = 1;
    for (int p : parents) {
      config += stride * ds.value(row, p);
      stride *= static_cast<std::uint64_t>(ds.cardinality(p));
    }
    const std::uint8_t c = ds.value(row, child);
    if (dense) {
      ++dense_store[config * static_cast<std::uint64_t>(r_child) + c];
    } else {
      ++sparse_store[config][c];
    }
  }

  // Sum over occupied configs of sum_c n_pc * ln(n_pc / n_p); zero-count
  // configurations contribute nothing (MLE convention).
  const auto config_term = [r_child](const std::int64_t* counts) {
    std::int64_t n_p = 0;
    for (int c = 0; c < r_child; ++c) n_p += counts[c];
    if (n_p == 0) return 0.0;
    double term = 0.0;
    for (int c = 0; c < r_child; ++c)
      if (counts[c] > 0)
        term += static_cast<double>(counts[c]) *
                std::log(static_cast<double>(counts[c]) / static_cast<double>(n_p));
    return term;
  };

  double loglik = 0.0;
  if (dense) {
    for (std::uint64_t config = 0; config < configs; ++config)
      loglik += config_term(&dense_store[config * static_cast<std::uint64_t>(r_child)]);
  } else {
    for (const auto& [config, counts] : sparse_store) loglik += config_term(counts.data());
  }
  return loglik - penalty;
}

std::string GraphSpaceSize::scientific(int mantissa_digits) const {
  if (mantissa_digits < 1) throw std::invalid_argument("mantissa_digits must be positive");
  std::string mantissa = digits.substr(0, static_cast<std::size_t>(mantissa_digits) + 1);
  while (mantissa.size() < static_cast<std::size_t>(mantissa_digits) + 1)
    mantissa.push_back('0');

  std::string out;
  out += mantissa.front();
  out += '.';
  out.append(mantissa, 1, std::string::npos);
  out += 'e';
  out += std::to_string(digits.size() - 1);
  return out;
}

GraphSpaceSize graph_space_size(int n) {
  if (n < 1) throw std::invalid_argument("graph_space_size requires n >= 1");

  GraphSpaceSize result;
  result.exponent =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;

  // 2^exponent by repeated doubling of little-endian decimal digits; the
  // counts involved (hundreds of digits) do not justify a bignum library.
  std::vector<int> digits{1};
  for (std::uint64_t step = 0; step < result.exponent; ++step) {
    int carry = 0;
    for (int& d : digits) {
      const int doubled = d * 2 + carry;
      d = doubled % 10;
      carry = doubled / 10;
    }
    if (carry > 0) digits.push_back(carry);
  }
  result.digits.assign(digits.rbegin(), digits.rend());
  for (char& c : result.digits) c = static_cast<char>('0' + c);
  return result;
}

}  // namespace itemnet
