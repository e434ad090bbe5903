#include <doctest.h>

#include <cmath>

#include "itemnet/rng.hpp"
#include "itemnet/stats.hpp"

using namespace itemnet;

namespace {

IndicatorDataset two_column_dataset(const std::vector<std::pair<int, int>>& rows) {
  IndicatorDataset ds;
  ds.items = {"X1", "X2"};
  ds.indicators = IndicatorMatrix(static_cast<Eigen::Index>(rows.size()), 2);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    ds.indicators(static_cast<Eigen::Index>(r), 0) = static_cast<std::uint8_t>(rows[r].first);
    ds.indicators(static_cast<Eigen::Index>(r), 1) = static_cast<std::uint8_t>(rows[r].second);
  }
  return ds;
}

ContingencyTable table_2x2(std::int64_t c00, std::int64_t c01, std::int64_t c10,
                           std::int64_t c11) {
  ContingencyTable tab;
  tab.cells = CountMatrix(2, 2);
  tab.cells << c00, c01, c10, c11;
  return tab;
}

IndicatorDataset random_binary_dataset(int n_vars, Eigen::Index n_rows, SplitMix64& rng) {
  IndicatorDataset ds;
  for (int v = 0; v < n_vars; ++v) ds.items.push_back("X" + std::to_string(v + 1));
  ds.indicators = IndicatorMatrix(n_rows, n_vars);
  std::vector<double> p(static_cast<std::size_t>(n_vars));
  for (double& pv : p) pv = 0.2 + 0.6 * rng.uniform();
  for (Eigen::Index r = 0; r < n_rows; ++r)
    for (int v = 0; v < n_vars; ++v)
      ds.indicators(r, v) = rng.uniform() < p[static_cast<std::size_t>(v)] ? 1 : 0;
  return ds;
}

}  // namespace

TEST_CASE("pair counts tabulate the joint cells") {
  const IndicatorDataset ds = two_column_dataset({{1, 1}, {0, 0}, {1, 0}});
  const ContingencyTable tab = pair_counts(ds, 0, 1);
  CHECK(tab.cells(0, 0) == 1);
  CHECK(tab.cells(0, 1) == 0);
  CHECK(tab.cells(1, 0) == 1);
  CHECK(tab.cells(1, 1) == 1);
  CHECK(tab.total() == 3);
  CHECK_THROWS_AS(pair_counts(ds, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(pair_counts(ds, 0, 5), std::out_of_range);
}

TEST_CASE("pair counts against the status variable form a 2x3 table") {
  IndicatorDataset ds = two_column_dataset({{1, 0}, {0, 1}, {1, 1}, {0, 0}});
  StatusVector status(4);
  status << 0, 1, 2, 1;
  ds.status = status;
  const ContingencyTable tab = pair_counts(ds, 0, 2);
  CHECK(tab.cells.rows() == 2);
  CHECK(tab.cells.cols() == 3);
  CHECK(tab.total() == 4);
  CHECK(tab.cells(1, 2) == 1);
}

TEST_CASE("mutual information of fixed tables") {
  CHECK(mutual_information(table_2x2(50, 0, 0, 50)) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(mutual_information(table_2x2(1, 1, 1, 1)) == 0.0);
  // Plug-in value evaluated independently from the definition.
  CHECK(mutual_information(table_2x2(40, 10, 10, 40)) ==
        doctest::Approx(0.19274475702175753).epsilon(1e-12));
  CHECK_THROWS_AS(mutual_information(table_2x2(0, 0, 0, 0)), std::invalid_argument);
}

TEST_CASE("mutual information is symmetric and bounded by the marginal entropies") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    ContingencyTable tab;
    tab.cells = CountMatrix(2, 2);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) tab.cells(a, b) = 1 + rng.below(200);

    ContingencyTable transposed;
    transposed.cells = tab.cells.transpose();
    CHECK(mutual_information(tab) == mutual_information(transposed));

    const double mi = mutual_information(tab);
    const auto [h_row, h_col] = marginal_entropies(tab);
    CHECK(mi >= 0.0);
    CHECK(mi <= std::min(h_row, h_col) + 1e-12);
  }
}

TEST_CASE("edge weight matches its closed form") {
  // Identical fair columns: N = 100, MI = ln 2, one binary df.
  std::vector<std::pair<int, int>> rows;
  for (int i = 0; i < 100; ++i) rows.emplace_back(i < 50, i < 50);
  CHECK(bic_edge_weight(two_column_dataset(rows), 0, 1) ==
        doctest::Approx(134.02426592600096).epsilon(1e-12));

  // Exactly independent pattern: the penalty term is all that remains.
  const IndicatorDataset independent =
      two_column_dataset({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(bic_edge_weight(independent, 0, 1) ==
        doctest::Approx(-1.3862943611198906).epsilon(1e-12));
}

TEST_CASE("edge weight against a 3-level variable pays 2 ln N") {
  IndicatorDataset ds = two_column_dataset({{1, 0}, {0, 1}, {1, 1}, {0, 0}});
  StatusVector status(4);
  status << 0, 1, 2, 1;
  ds.status = status;

  ScoreConfig no_penalty;
  no_penalty.penalty = 0.0;
  const double gain = bic_edge_weight(ds, 0, 2, no_penalty);
  const double weighted = bic_edge_weight(ds, 0, 2);
  // df = (2-1)(3-1) = 2, so the default kappa = ln(N)/2 costs 2 ln N.
  CHECK(weighted == doctest::Approx(gain - 2.0 * std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("family score of a parentless variable is its multinomial log-likelihood") {
  std::vector<std::pair<int, int>> rows;
  for (int i = 0; i < 100; ++i) rows.emplace_back(i < 60, 0);
  const IndicatorDataset ds = two_column_dataset(rows);
  ScoreConfig kappa0;
  kappa0.penalty = 0.0;
  CHECK(dag_family_score(ds, 0, {}, kappa0) ==
        doctest::Approx(-67.30116670092565).epsilon(1e-12));
}

TEST_CASE("a child identical to its parent has zero conditional log-likelihood") {
  std::vector<std::pair<int, int>> rows;
  for (int i = 0; i < 80; ++i) rows.emplace_back(i % 3 == 0, i % 3 == 0);
  const IndicatorDataset ds = two_column_dataset(rows);
  ScoreConfig kappa0;
  kappa0.penalty = 0.0;
  CHECK(dag_family_score(ds, 1, {0}, kappa0) == 0.0);
}

TEST_CASE("family scores at different penalties differ by kappa times the dimension") {
  SplitMix64 rng(23);
  const IndicatorDataset ds = random_binary_dataset(4, 300, rng);
  ScoreConfig kappa0, kappa200;
  kappa0.penalty = 0.0;
  kappa200.penalty = 200.0;
  const std::vector<int> parent_set{0, 2};
  const double df = family_dimension(ds, 3, parent_set);
  CHECK(df == 4.0);  // (2-1) * 2 * 2, the child's slack times both parent cardinalities
  CHECK(dag_family_score(ds, 3, parent_set, kappa200) -
            dag_family_score(ds, 3, parent_set, kappa0) ==
        doctest::Approx(-200.0 * df).epsilon(1e-12));
}

TEST_CASE("unseen parent configurations contribute nothing to the log-likelihood") {
  // Parent column is constantly 0, so half the parent configurations never
  // occur; the conditional log-likelihood must equal the marginal one.
  std::vector<std::pair<int, int>> rows;
  for (int i = 0; i < 90; ++i) rows.emplace_back(0, i < 30);
  const IndicatorDataset ds = two_column_dataset(rows);
  ScoreConfig kappa0;
  kappa0.penalty = 0.0;
  CHECK(dag_family_score(ds, 1, {0}, kappa0) == dag_family_score(ds, 1, {}, kappa0));
  // The penalty, by contrast, counts every configuration.
  CHECK(family_dimension(ds, 1, {0}) == 2.0);
}

TEST_CASE("family score rejects a child listed among its parents") {
  const IndicatorDataset ds = two_column_dataset({{0, 1}, {1, 0}});
  CHECK_THROWS_AS(dag_family_score(ds, 0, {0}), std::invalid_argument);
}

TEST_CASE("adding one arc to a two-variable model gains half the edge weight") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const IndicatorDataset ds = random_binary_dataset(2, 150, rng);
    const double empty = dag_family_score(ds, 0, {}) + dag_family_score(ds, 1, {});
    const double with_arc = dag_family_score(ds, 0, {}) + dag_family_score(ds, 1, {0});
    CHECK(with_arc - empty ==
          doctest::Approx(bic_edge_weight(ds, 0, 1) / 2.0).epsilon(1e-9));
  }
}

TEST_CASE("graph space size is the exact power of two") {
  CHECK(graph_space_size(1).digits == "1");
  CHECK(graph_space_size(1).exponent == 0);
  CHECK(graph_space_size(3).digits == "8");
  CHECK(graph_space_size(4).digits == "64");

  const GraphSpaceSize g23 = graph_space_size(23);
  CHECK(g23.exponent == 253);
  CHECK(g23.digits ==
        "1447401115466452442794637312608598848165874808320507050493219800098914120499"
        "2");
  CHECK(g23.digits.size() == 77);
}

TEST_CASE("scientific rendering truncates the mantissa") {
  const GraphSpaceSize g23 = graph_space_size(23);
  // Leading digits are 1447...; rounding would print 1.45e76.
  CHECK(g23.scientific() == "1.44e76");
  CHECK(g23.scientific(3) == "1.447e76");
  CHECK(graph_space_size(3).scientific() == "8.00e0");
}
