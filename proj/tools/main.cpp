#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "itemnet/dag_search.hpp"
#include "itemnet/dataset.hpp"
#include "itemnet/forest.hpp"
#include "itemnet/io.hpp"
#include "itemnet/metrics.hpp"
#include "itemnet/rng.hpp"
#include "itemnet/stats.hpp"
#include "itemnet/synth.hpp"
#include "itemnet/temporal.hpp"
#include "itemnet/transactions.hpp"

namespace {

using namespace itemnet;

// Missing or inconsistent flags; maps to exit code 1 rather than the data
// error's 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string out;
  double percentile = 0.85;
  bool include_status = false;
  bool all_items = false;
  std::optional<double> penalty;
  int restarts = 500;
  std::uint64_t seed = 0;
  long min_support = 30;

  std::string dag_path;  // temporal

  int items = 10;  // simulate
  Eigen::Index rows = 1000;
  std::string model = "tree";
  double fidelity = 0.9;
  double arc_prob = 0.3;
  int year = 2012;
  std::string truth_path;
};

TransactionLog load_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open input file '" + path + "'");
  return parse_transactions(in);
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write output file '" + path.string() + "'");
  return out;
}

// Resolved ingest pipeline shared by the learning subcommands.
struct Pipeline {
  TransactionLog log;
  FirstVisits visits;
  std::set<std::string> selected;
  IndicatorDataset ds;
};

Pipeline load_pipeline(const Options& opt) {
  Pipeline p;
  p.log = load_log(opt.input);
  p.visits = deduplicate(p.log);
  if (opt.all_items) {
    p.selected = p.log.item_universe;
  } else {
    p.selected = select_main_items(visit_counts(p.visits), opt.percentile);
    if (p.selected.empty())
      throw DataError("no items above the " + std::to_string(opt.percentile) +
                      " visit-count percentile; consider --all-items");
  }
  p.ds = build_indicator_dataset(p.log, p.selected, opt.include_status);
  return p;
}

ScoreConfig score_config(const Options& opt) { return ScoreConfig{opt.penalty}; }

std::vector<int> item_variables(const IndicatorDataset& ds) {
  std::vector<int> vars(static_cast<std::size_t>(ds.item_count()));
  for (int v = 0; v < ds.item_count(); ++v) vars[static_cast<std::size_t>(v)] = v;
  return vars;
}

// Sends report output to --out when given, standard output otherwise.
template <typename Fn>
void emit(const Options& opt, Fn&& write) {
  if (opt.out.empty()) {
    write(std::cout);
  } else {
    std::ofstream out = open_output(opt.out);
    write(out);
  }
}

int run_summary(const Options& opt) {
  const TransactionLog log = load_log(opt.input);
  const VisitCountTable counts = visit_counts(deduplicate(log));

  emit(opt, [&](std::ostream& os) {
    std::set<std::string> subjects;
    for (const TransactionRecord& rec : log.records) subjects.insert(rec.subject_id);
    os << "subjects\t" << subjects.size() << '\n';
    os << "items\t" << log.item_universe.size() << '\n';
    os << "visits\t" << total_visits(counts) << '\n';
    os << '\n';
    os << "item\tcount\n";
    for (const auto& [item, n] : counts) os << item << '\t' << n << '\n';
  });
  return 0;
}

int run_learn_forest(const Options& opt) {
  const Pipeline p = load_pipeline(opt);
  const Forest forest =
      learn_min_bic_forest(p.ds, item_variables(p.ds), opt.include_status, score_config(opt));

  const std::filesystem::path dir(opt.out);
  std::filesystem::create_directories(dir);
  {
    std::ofstream out = open_output(dir / "forest.dot");
    write_forest_dot(out, forest);
  }
  {
    std::ofstream out = open_output(dir / "metrics.tsv");
    write_metrics_tsv(out, compute_metrics(forest));
  }
  return 0;
}

int run_learn_dag(const Options& opt) {
  const Pipeline p = load_pipeline(opt);

  SearchConfig cfg;
  cfg.penalty = opt.penalty;
  cfg.restarts = opt.restarts;
  cfg.seed = opt.seed;
  const HillClimbResult result = hill_climb(p.ds, cfg);
  const AgreementReport agreement =
      conjecture_check(result.dag, p.visits, opt.min_support);

  const std::filesystem::path dir(opt.out);
  std::filesystem::create_directories(dir);
  {
    std::ofstream out = open_output(dir / "dag.dot");
    write_dag_dot(out, result.dag, &agreement);
  }
  {
    std::ofstream out = open_output(dir / "dag_score.txt");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", result.score);
    out << buf << '\n';
  }
  {
    std::ofstream out = open_output(dir / "agreement.tsv");
    write_agreement_tsv(out, agreement);
  }
  return 0;
}

int run_metrics(const Options& opt) {
  const Pipeline p = load_pipeline(opt);
  const Forest forest =
      learn_min_bic_forest(p.ds, item_variables(p.ds), opt.include_status, score_config(opt));
  const MetricsReport report = compute_metrics(forest);
  emit(opt, [&](std::ostream& os) { write_metrics_tsv(os, report); });
  return 0;
}

int run_temporal(const Options& opt) {
  const TransactionLog log = load_log(opt.input);
  const FirstVisits visits = deduplicate(log);

  std::ifstream dag_in(opt.dag_path);
  if (!dag_in) throw DataError("cannot open DAG file '" + opt.dag_path + "'");
  const Dag dag = read_dag_dot(dag_in);

  const AgreementReport report = conjecture_check(dag, visits, opt.min_support);
  emit(opt, [&](std::ostream& os) { write_agreement_tsv(os, report); });
  return 0;
}

int run_simulate(const Options& opt) {
  SplitMix64 model_rng(opt.seed);
  TransactionLog log;
  std::optional<Forest> truth_forest;
  std::optional<Dag> truth_dag;

  if (opt.model == "tree") {
    const Forest tree = random_spanning_tree(opt.items, model_rng);
    ForestModel model = symmetric_tree_model(tree, opt.fidelity);
    model.temporal_order = tree.vertices;  // catalog order doubles as visit order
    log = sample_itineraries(model, opt.rows, opt.seed, opt.year);
    truth_forest = tree;
  } else {
    const DagModel model = random_dag_model(opt.items, opt.arc_prob, model_rng);
    log = sample_itineraries(model, opt.rows, opt.seed, opt.year);
    truth_dag = model.dag;
  }

  if (!opt.truth_path.empty()) {
    std::ofstream out = open_output(opt.truth_path);
    if (truth_forest)
      write_forest_dot(out, *truth_forest);
    else
      write_dag_dot(out, *truth_dag);
  }

  emit(opt, [&](std::ostream& os) { write_transactions_csv(os, log); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure learning over consumer transaction logs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Flat key=value configuration file; flags override it");

  Options opt;
  double penalty_value = 0.0;
  auto* penalty_flag =
      app.add_option("--penalty", penalty_value,
                     "Per-parameter score penalty (default: ln(N)/2)");
  app.add_option("--input", opt.input, "Transaction CSV (subject_id,item_code,date,status)");
  app.add_option("--out", opt.out, "Output file, or directory for learn-forest/learn-dag");
  app.add_option("--percentile", opt.percentile, "Visit-count percentile cut for main items")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_flag("--include-status", opt.include_status,
               "Add the 3-level subscriber status as a variable");
  app.add_option("--restarts", opt.restarts, "Hill-climb restarts")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  app.add_option("--min-support", opt.min_support,
                 "Minimum co-visiting subjects to call a physical direction")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  CLI::App* cmd_summary = app.add_subcommand("summary", "Dataset counts");
  CLI::App* cmd_forest = app.add_subcommand("learn-forest", "Minimum-BIC forest + metrics");
  CLI::App* cmd_dag = app.add_subcommand("learn-dag", "Hill-climbed DAG + temporal agreement");
  CLI::App* cmd_metrics = app.add_subcommand("metrics", "Forest centrality report");
  CLI::App* cmd_temporal = app.add_subcommand("temporal", "Check a DAG against visit order");
  CLI::App* cmd_simulate = app.add_subcommand("simulate", "Synthetic transaction log");

  for (CLI::App* cmd : {cmd_forest, cmd_dag, cmd_metrics})
    cmd->add_flag("--all-items", opt.all_items, "Skip the percentile cut; use every item");

  cmd_temporal->add_option("--dag", opt.dag_path, "DAG DOT file (as written by learn-dag)")
      ->required();

  cmd_simulate->add_option("--items", opt.items, "Catalog size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_simulate->add_option("--rows", opt.rows, "Subjects to sample")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_simulate->add_option("--model", opt.model, "Ground-truth structure")
      ->check(CLI::IsMember({"tree", "dag"}))
      ->capture_default_str();
  cmd_simulate->add_option("--fidelity", opt.fidelity, "Tree model p(child = parent)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd_simulate->add_option("--arc-prob", opt.arc_prob, "DAG model arc probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd_simulate->add_option("--year", opt.year, "Calendar year for the day-stamps")
      ->capture_default_str();
  cmd_simulate->add_option("--truth", opt.truth_path, "Also write the true structure (DOT)");

  for (CLI::App* cmd : {cmd_summary, cmd_forest, cmd_dag, cmd_metrics, cmd_temporal})
    cmd->callback([] {});  // options validated below; callbacks keep CLI11 quiet

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (penalty_flag->count() > 0) opt.penalty = penalty_value;

  try {
    const auto require = [](const std::string& value, const char* flag) {
      if (value.empty())
        throw UsageError(std::string("missing required option ") + flag);
    };
    if (app.got_subcommand(cmd_summary)) {
      require(opt.input, "--input");
      return run_summary(opt);
    }
    if (app.got_subcommand(cmd_forest)) {
      require(opt.input, "--input");
      require(opt.out, "--out");
      return run_learn_forest(opt);
    }
    if (app.got_subcommand(cmd_dag)) {
      require(opt.input, "--input");
      require(opt.out, "--out");
      return run_learn_dag(opt);
    }
    if (app.got_subcommand(cmd_metrics)) {
      require(opt.input, "--input");
      return run_metrics(opt);
    }
    if (app.got_subcommand(cmd_temporal)) {
      require(opt.input, "--input");
      return run_temporal(opt);
    }
    if (app.got_subcommand(cmd_simulate)) return run_simulate(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
