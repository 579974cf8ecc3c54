#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "trackmc/affinity.hpp"
#include "trackmc/core.hpp"
#include "trackmc/edgegen.hpp"
#include "trackmc/multicut.hpp"

namespace trackmc {

// Gap schedule: a few passes with small fixed gaps stitch adjacent
// detections, then two relaxation phases scale the allowed gap with the
// shorter tracklet of each pair so longer fragments can bridge occlusions.
struct Schedule {
  std::vector<int> fixed_gaps{1, 2, 4};
  int phase_a_multiplier = 4;
  int phase_b_multiplier = 6;

  void validate() const;
};

enum class Phase { Fixed, PhaseA, PhaseB, Converged };

std::string_view phase_name(Phase p);

struct IterationRecord {
  int iteration = 0;  // 1-based
  Phase phase = Phase::Fixed;
  int n_vertices = 0;       // tracklets entering the iteration
  std::int64_t n_edges = 0; // candidate edges scored
  int n_merges = 0;         // components of size >= 2
  double wall_ms = 0.0;
};

struct ClusterState {
  std::vector<Tracklet> tracklets;
  int iteration = 0;  // completed iterations
  Phase phase = Phase::Fixed;
  std::vector<IterationRecord> history;
  int next_tracklet_id = 0;
  std::int64_t total_detections = 0;  // conserved across iterations
};

// Singleton tracklet per detection; tracklet ids follow detection order.
ClusterState init_state(std::vector<Detection> detections);

// Frame-gap cap for a pair during `iteration` (1-based) of `phase`.
int max_gap(const Schedule& schedule, int iteration, Phase phase, int len_u,
            int len_v);

// Unordered tracklet-id pairs that share at least one frame and therefore
// must never merge. Sorted by (smaller id, larger id).
std::vector<std::pair<int, int>> conflict_constraints(std::span<const Tracklet> tracklets);

// Multicut instance for the upcoming iteration: vertex i is
// state.tracklets[i]; candidate pairs get scored edges, frame-sharing pairs
// become constraints. Pass stats = nullptr for purely temporal candidates.
Graph build_graph(const ClusterState& state, const Scorer& scorer,
                  const MotionStats* stats, const Schedule& schedule,
                  const SequenceMeta& meta, double inflation = 2.0,
                  double cost_eps = 1e-6);

// One solve-and-merge round; appends a history record and advances the phase.
ClusterState iterate(ClusterState state, const Scorer& scorer,
                     const MotionStats* stats, const Schedule& schedule,
                     const SequenceMeta& meta, double inflation = 2.0,
                     double cost_eps = 1e-6);

struct RunResult {
  std::vector<Tracklet> tracks;  // dense ids 1..K, ordered by first frame
  std::vector<IterationRecord> history;
};

// Full pipeline: singleton init, iterate until converged. Terminates after at
// most n_detections + |fixed_gaps| + 2 iterations: every pre-convergence
// relaxation-phase iteration merges (dropping the vertex count) or advances
// the phase.
RunResult run(std::vector<Detection> detections, const Scorer& scorer,
              const MotionStats* stats, const Schedule& schedule,
              const SequenceMeta& meta, double inflation = 2.0,
              double cost_eps = 1e-6);

// CSV: iteration,phase,n_vertices,n_edges,n_merges,wall_ms
void write_history_csv(std::ostream& out, std::span<const IterationRecord> history);

}  // namespace trackmc
