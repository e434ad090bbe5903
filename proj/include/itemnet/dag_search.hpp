#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "itemnet/dataset.hpp"
#include "itemnet/graph.hpp"
#include "itemnet/stats.hpp"

namespace itemnet {

struct SearchConfig {
  std::optional<double> penalty;  // kappa per free parameter; ln(N)/2 when unset
  int restarts = 500;
  int perturbation_size = 2;  // arcs toggled per restart
  std::uint64_t seed = 0;
  int max_iterations = 1000;  // accepted moves per climb

  ScoreConfig score() const { return ScoreConfig{penalty}; }
};

enum class MoveKind : std::uint8_t { kAdd, kDelete, kReverse, kPerturbAdd, kPerturbDelete };

struct MoveRecord {
  int restart = 0;  // 0 = initial climb; r >= 1 = r-th restart
  MoveKind kind = MoveKind::kAdd;
  int from = 0;
  int to = 0;
  double score_after = 0.0;
};

struct HillClimbResult {
  Dag dag;
  double score = 0.0;
  double empty_score = 0.0;
  // Every applied move in order. Records with restart == 0 replay from the
  // empty graph to the base local optimum; each restart's segment replays
  // from that base state, its perturbation toggles marked by the kPerturb*
  // kinds.
  std::vector<MoveRecord> trace;
};

// Sum of dag_family_score over every (child, parents) family of g.
// Throws std::invalid_argument on cyclic input or vertex mismatch.
double score_dag(const IndicatorDataset& ds, const Dag& g, const ScoreConfig& cfg = {});

// Total free parameters of g: sum of family_dimension over children.
double dag_dimension(const IndicatorDataset& ds, const Dag& g);

// Steepest-ascent search from the empty DAG over add/delete/reverse moves,
// with independently seeded restarts that perturb the base local optimum.
// Ties between equal-delta moves break on (add < delete < reverse, then
// arc endpoints); the returned DAG is the best (score, then
// lexicographically smallest arc set) over all climbs. Deterministic given
// cfg.seed.
HillClimbResult hill_climb(const IndicatorDataset& ds, const SearchConfig& cfg = {});

}  // namespace itemnet
