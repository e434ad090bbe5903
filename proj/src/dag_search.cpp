#include "itemnet/dag_search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "itemnet/rng.hpp"

namespace itemnet {

namespace {

// Accepted moves must clear this margin so FP noise in score deltas cannot
// drive an endless walk between equal-scoring graphs.
constexpr double kImprovementEpsilon = 1e-9;

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::vector<int> mask_to_parents(std::uint64_t mask) {
  std::vector<int> parents;
  while (mask) {
    parents.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return parents;
}

// ds variable index for every dag vertex, resolved by name.
std::vector<int> map_vertices(const IndicatorDataset& ds, const Dag& g) {
  const std::vector<std::string> names = ds.variable_names();
  std::vector<int> mapped;
  mapped.reserve(g.vertices.size());
  for (const std::string& name : g.vertices) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw std::invalid_argument("graph vertex '" + name + "' is not a dataset variable");
    mapped.push_back(static_cast<int>(it - names.begin()));
  }
  return mapped;
}

// Memoized family scores: structure search revisits the same (child,
// parent set) families constantly, and the score of one family never
// depends on the rest of the graph.
class FamilyScores {
 public:
  FamilyScores(const IndicatorDataset& ds, const ScoreConfig& cfg)
      : ds_(ds), cfg_(cfg), memo_(static_cast<std::size_t>(ds.variable_count())) {}

  double operator()(int child, std::uint64_t parent_mask) {
    auto& per_child = memo_[static_cast<std::size_t>(child)];
    const auto it = per_child.find(parent_mask);
    if (it != per_child.end()) return it->second;
    const double score = dag_family_score(ds_, child, mask_to_parents(parent_mask), cfg_);
    per_child.emplace(parent_mask, score);
    return score;
  }

 private:
  const IndicatorDataset& ds_;
  ScoreConfig cfg_;
  std::vector<std::unordered_map<std::uint64_t, double>> memo_;
};

// Arc set as parent/child bitmasks; cheap to copy per restart.
struct ArcState {
  std::vector<std::uint64_t> parent_mask;
  std::vector<std::uint64_t> child_mask;

  explicit ArcState(int n)
      : parent_mask(static_cast<std::size_t>(n), 0),
        child_mask(static_cast<std::size_t>(n), 0) {}

  bool has(int from, int to) const {
    return (child_mask[static_cast<std::size_t>(from)] & bit(to)) != 0;
  }
  void add(int from, int to) {
    child_mask[static_cast<std::size_t>(from)] |= bit(to);
    parent_mask[static_cast<std::size_t>(to)] |= bit(from);
  }
  void remove(int from, int to) {
    child_mask[static_cast<std::size_t>(from)] &= ~bit(to);
    parent_mask[static_cast<std::size_t>(to)] &= ~bit(from);
  }

  bool has_path(int from, int to) const {
    std::uint64_t visited = bit(from);
    std::uint64_t frontier = bit(from);
    while (frontier != 0) {
      std::uint64_t next = 0;
      while (frontier != 0) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= child_mask[static_cast<std::size_t>(v)] & ~visited;
      }
      if ((next & bit(to)) != 0) return true;
      visited |= next;
      frontier = next;
    }
    return false;
  }

  std::vector<VertexPair> arcs() const {
    std::vector<VertexPair> result;
    for (int from = 0; from < static_cast<int>(child_mask.size()); ++from) {
      std::uint64_t mask = child_mask[static_cast<std::size_t>(from)];
      while (mask != 0) {
        result.emplace_back(from, std::countr_zero(mask));
        mask &= mask - 1;
      }
    }
    return result;  // already sorted: ascending (from, to)
  }
};

struct Candidate {
  MoveKind kind = MoveKind::kAdd;
  int from = -1;
  int to = -1;
  double delta = kImprovementEpsilon;  // floor: only strict improvements win
};

// Steepest ascent from the given state. Candidates are enumerated adds
// first, then deletes, then reverses, each in ascending (from, to) order;
// keeping the strictly best delta makes the first of an exact tie win,
// which pins the documented tie-break.
double climb(ArcState& state, FamilyScores& fam, int n, int restart, int max_iterations,
             double score, std::vector<MoveRecord>& trace) {
  for (int iteration = 0; iteration < max_iterations; ++iteration) {
    Candidate best;

    for (int from = 0; from < n; ++from) {
      for (int to = 0; to < n; ++to) {
        if (from == to || state.has(from, to) || state.has(to, from)) continue;
        if (state.has_path(to, from)) continue;  // adding would close a cycle
        const std::uint64_t mask = state.parent_mask[static_cast<std::size_t>(to)];
        const double delta = fam(to, mask | bit(from)) - fam(to, mask);
        if (delta > best.delta) best = {MoveKind::kAdd, from, to, delta};
      }
    }
    for (int from = 0; from < n; ++from) {
      for (int to = 0; to < n; ++to) {
        if (!state.has(from, to)) continue;
        const std::uint64_t mask = state.parent_mask[static_cast<std::size_t>(to)];
        const double delta = fam(to, mask & ~bit(from)) - fam(to, mask);
        if (delta > best.delta) best = {MoveKind::kDelete, from, to, delta};
      }
    }
    for (int from = 0; from < n; ++from) {
      for (int to = 0; to < n; ++to) {
        if (!state.has(from, to)) continue;
        state.remove(from, to);
        const bool closes_cycle = state.has_path(from, to);
        state.add(from, to);
        if (closes_cycle) continue;
        const std::uint64_t to_mask = state.parent_mask[static_cast<std::size_t>(to)];
        const std::uint64_t from_mask = state.parent_mask[static_cast<std::size_t>(from)];
        const double delta = fam(to, to_mask & ~bit(from)) - fam(to, to_mask) +
                             fam(from, from_mask | bit(to)) - fam(from, from_mask);
        if (delta > best.delta) best = {MoveKind::kReverse, from, to, delta};
      }
    }

    if (best.from < 0) break;  // no move clears the improvement margin
    switch (best.kind) {
      case MoveKind::kAdd:
        state.add(best.from, best.to);
        break;
      case MoveKind::kDelete:
        state.remove(best.from, best.to);
        break;
      case MoveKind::kReverse:
        state.remove(best.from, best.to);
        state.add(best.to, best.from);
        break;
      default:
        break;
    }
    score += best.delta;
    trace.push_back({restart, best.kind, best.from, best.to, score});
  }
  return score;
}

double total_score(const ArcState& state, FamilyScores& fam, int n) {
  double score = 0.0;
  for (int v = 0; v < n; ++v)
    score += fam(v, state.parent_mask[static_cast<std::size_t>(v)]);
  return score;
}

}  // namespace

double score_dag(const IndicatorDataset& ds, const Dag& g, const ScoreConfig& cfg) {
  if (!is_acyclic(g)) throw std::invalid_argument("score_dag of a cyclic graph");
  const std::vector<int> mapped = map_vertices(ds, g);
  double score = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> family;
    for (int p : parents(g, v)) family.push_back(mapped[static_cast<std::size_t>(p)]);
    score += dag_family_score(ds, mapped[static_cast<std::size_t>(v)], family, cfg);
  }
  return score;
}

double dag_dimension(const IndicatorDataset& ds, const Dag& g) {
  const std::vector<int> mapped = map_vertices(ds, g);
  double dim = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> family;
    for (int p : parents(g, v)) family.push_back(mapped[static_cast<std::size_t>(p)]);
    dim += family_dimension(ds, mapped[static_cast<std::size_t>(v)], family);
  }
  return dim;
}

HillClimbResult hill_climb(const IndicatorDataset& ds, const SearchConfig& cfg) {
  const int n = ds.variable_count();
  if (n == 0) throw std::invalid_argument("dataset has no variables");
  if (n > 64) throw std::invalid_argument("dag search supports at most 64 variables");
  if (ds.sample_size() == 0) throw std::invalid_argument("dataset has no rows");
  if (cfg.restarts < 0) throw std::invalid_argument("negative restart count");
  if (cfg.max_iterations < 1) throw std::invalid_argument("max_iterations must be positive");
  if (cfg.perturbation_size < 1)
    throw std::invalid_argument("perturbation_size must be positive");

  FamilyScores fam(ds, cfg.score());

  HillClimbResult result;
  result.dag.vertices = ds.variable_names();
  ArcState empty(n);
  result.empty_score = total_score(empty, fam, n);

  // Base climb from the empty graph; restarts perturb this one base
  // optimum independently, so no restart's outcome depends on another's.
  std::vector<MoveRecord> trace;
  ArcState base = empty;
  climb(base, fam, n, 0, cfg.max_iterations, result.empty_score, trace);

  std::vector<VertexPair> best_arcs = base.arcs();
  double best_score = total_score(base, fam, n);

  for (int restart = 1; restart <= cfg.restarts; ++restart) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(restart));
    ArcState state = base;
    double score = total_score(state, fam, n);
    for (int toggle = 0; toggle < cfg.perturbation_size; ++toggle) {
      for (int attempt = 0; attempt < 8 * n; ++attempt) {
        const int from = rng.below(n);
        const int to = rng.below(n);
        if (from == to) continue;
        const std::uint64_t mask = state.parent_mask[static_cast<std::size_t>(to)];
        if (state.has(from, to)) {
          state.remove(from, to);
          score += fam(to, mask & ~bit(from)) - fam(to, mask);
          trace.push_back({restart, MoveKind::kPerturbDelete, from, to, score});
          break;
        }
        if (state.has(to, from) || state.has_path(to, from)) continue;  // reject cycles
        state.add(from, to);
        score += fam(to, mask | bit(from)) - fam(to, mask);
        trace.push_back({restart, MoveKind::kPerturbAdd, from, to, score});
        break;
      }
    }

    score = climb(state, fam, n, restart, cfg.max_iterations, score, trace);

    // Canonical recomputation keeps the winner independent of the order
    // restarts were run in; ties go to the lexicographically smaller arc
    // set, and equal arc sets keep the incumbent.
    const double candidate_score = total_score(state, fam, n);
    std::vector<VertexPair> candidate_arcs = state.arcs();
    if (candidate_score > best_score ||
        (candidate_score == best_score && candidate_arcs < best_arcs)) {
      best_score = candidate_score;
      best_arcs = std::move(candidate_arcs);
    }
  }

  result.dag.arcs = std::move(best_arcs);
  result.score = best_score;
  result.trace = std::move(trace);
  return result;
}

}  // namespace itemnet
