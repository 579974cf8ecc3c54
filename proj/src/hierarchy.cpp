#include "trackmc/hierarchy.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <unordered_map>

#include "format_util.hpp"

namespace trackmc {

void Schedule::validate() const {
  if (fixed_gaps.empty()) throw std::invalid_argument("fixed_gaps must not be empty");
  int prev = 0;
  for (const int gap : fixed_gaps) {
    if (gap <= prev) throw std::invalid_argument("fixed_gaps must be positive and ascending");
    prev = gap;
  }
  if (phase_a_multiplier < 1 || phase_b_multiplier < phase_a_multiplier)
    throw std::invalid_argument("multipliers must satisfy 1 <= phase_a <= phase_b");
}

std::string_view phase_name(Phase p) {
  switch (p) {
    case Phase::Fixed: return "fixed";
    case Phase::PhaseA: return "phase_a";
    case Phase::PhaseB: return "phase_b";
    case Phase::Converged: return "converged";
  }
  return "unknown";
}

ClusterState init_state(std::vector<Detection> detections) {
  ClusterState state;
  state.tracklets.reserve(detections.size());
  for (Detection& d : detections) {
    const int id = state.next_tracklet_id++;
    state.tracklets.emplace_back(id, std::vector<Detection>{std::move(d)});
  }
  state.total_detections = static_cast<std::int64_t>(state.tracklets.size());
  return state;
}

int max_gap(const Schedule& schedule, int iteration, Phase phase, int len_u,
            int len_v) {
  schedule.validate();
  if (iteration < 1) throw std::invalid_argument("iterations are 1-based");
  if (len_u < 1 || len_v < 1) throw std::invalid_argument("tracklet lengths are >= 1");
  switch (phase) {
    case Phase::Fixed: {
      const auto idx = std::min<std::size_t>(static_cast<std::size_t>(iteration),
                                             schedule.fixed_gaps.size());
      return schedule.fixed_gaps[idx - 1];
    }
    case Phase::PhaseA:
      return schedule.phase_a_multiplier * std::min(len_u, len_v);
    case Phase::PhaseB:
      return schedule.phase_b_multiplier * std::min(len_u, len_v);
    case Phase::Converged:
      return 0;
  }
  return 0;
}

std::vector<std::pair<int, int>> conflict_constraints(std::span<const Tracklet> tracklets) {
  // Bucket tracklet ids by frame; any bucket with two or more ids yields
  // pairwise conflicts.
  std::map<int, std::vector<int>> by_frame;
  for (const Tracklet& t : tracklets)
    for (const Detection& d : t.detections()) by_frame[d.frame].push_back(t.id());

  std::vector<std::pair<int, int>> out;
  for (auto& [frame, ids] : by_frame) {
    (void)frame;
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        out.emplace_back(ids[i], ids[j]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph build_graph(const ClusterState& state, const Scorer& scorer,
                  const MotionStats* stats, const Schedule& schedule,
                  const SequenceMeta& meta, double inflation, double cost_eps) {
  schedule.validate();
  const int iteration = state.iteration + 1;  // the round being prepared
  const Phase phase = state.phase;

  std::unordered_map<int, int> index_of_id;
  index_of_id.reserve(state.tracklets.size() * 2);
  for (std::size_t i = 0; i < state.tracklets.size(); ++i)
    index_of_id.emplace(state.tracklets[i].id(), static_cast<int>(i));

  Graph g(static_cast<int>(state.tracklets.size()));

  const GapLimit limit = [&](const Tracklet& u, const Tracklet& v) {
    return max_gap(schedule, iteration, phase, u.length(), v.length());
  };
  for (const EdgeCandidate& cand :
       candidate_edges(state.tracklets, limit, stats, meta, inflation)) {
    const int ui = index_of_id.at(cand.u);
    const int vi = index_of_id.at(cand.v);
    const Affinity a = scorer.score(state.tracklets[static_cast<std::size_t>(ui)],
                                    state.tracklets[static_cast<std::size_t>(vi)], meta);
    g.add_edge(ui, vi, cost_from_affinity(a, cost_eps));
  }
  for (const auto& [u, v] : conflict_constraints(state.tracklets))
    g.add_constraint(index_of_id.at(u), index_of_id.at(v));
  return g;
}

ClusterState iterate(ClusterState state, const Scorer& scorer,
                     const MotionStats* stats, const Schedule& schedule,
                     const SequenceMeta& meta, double inflation, double cost_eps) {
  const auto started = std::chrono::steady_clock::now();
  const int n_before = static_cast<int>(state.tracklets.size());

  const Graph g = build_graph(state, scorer, stats, schedule, meta, inflation, cost_eps);
  const auto [decomposition, report] = cklj_solve(g);
  (void)report;

  // Components keyed by label; labels are canonical, so component order
  // follows the smallest tracklet index.
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < decomposition.labels.size(); ++i)
    groups[decomposition.labels[i]].push_back(static_cast<int>(i));

  std::vector<Tracklet> merged;
  merged.reserve(groups.size());
  int n_merges = 0;
  for (auto& [label, indices] : groups) {
    (void)label;
    if (indices.size() == 1) {
      merged.push_back(std::move(state.tracklets[static_cast<std::size_t>(indices[0])]));
      continue;
    }
    ++n_merges;
    std::sort(indices.begin(), indices.end(), [&](int a, int b) {
      return state.tracklets[static_cast<std::size_t>(a)].first_frame() <
             state.tracklets[static_cast<std::size_t>(b)].first_frame();
    });
    Tracklet folded = state.tracklets[static_cast<std::size_t>(indices[0])];
    for (std::size_t k = 1; k < indices.size(); ++k)
      folded = merge(folded, state.tracklets[static_cast<std::size_t>(indices[k])],
                     state.next_tracklet_id++);
    merged.push_back(std::move(folded));
  }
  std::sort(merged.begin(), merged.end(), [](const Tracklet& a, const Tracklet& b) {
    if (a.first_frame() != b.first_frame()) return a.first_frame() < b.first_frame();
    return a.id() < b.id();
  });
  state.tracklets = std::move(merged);

  std::int64_t detections_now = 0;
  for (const Tracklet& t : state.tracklets) detections_now += t.length();
  if (detections_now != state.total_detections)
    throw std::logic_error("merge lost or duplicated detections");

  const Phase phase_used = state.phase;
  ++state.iteration;
  if (state.phase == Phase::Fixed) {
    if (static_cast<std::size_t>(state.iteration) >= schedule.fixed_gaps.size())
      state.phase = Phase::PhaseA;
  } else if (state.phase == Phase::PhaseA) {
    if (n_merges == 0) state.phase = Phase::PhaseB;
  } else if (state.phase == Phase::PhaseB) {
    if (n_merges == 0) state.phase = Phase::Converged;
  }

  const auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - started);
  state.history.push_back({state.iteration, phase_used, n_before,
                           static_cast<std::int64_t>(g.edges().size()), n_merges,
                           elapsed.count()});
  return state;
}

RunResult run(std::vector<Detection> detections, const Scorer& scorer,
              const MotionStats* stats, const Schedule& schedule,
              const SequenceMeta& meta, double inflation, double cost_eps) {
  schedule.validate();
  ClusterState state = init_state(std::move(detections));
  if (state.tracklets.empty()) return {};
  while (state.phase != Phase::Converged)
    state = iterate(std::move(state), scorer, stats, schedule, meta, inflation, cost_eps);

  std::sort(state.tracklets.begin(), state.tracklets.end(),
            [](const Tracklet& a, const Tracklet& b) {
              if (a.first_frame() != b.first_frame())
                return a.first_frame() < b.first_frame();
              return a.id() < b.id();
            });
  RunResult result;
  result.history = std::move(state.history);
  result.tracks.reserve(state.tracklets.size());
  int next_id = 1;
  for (const Tracklet& t : state.tracklets)
    result.tracks.emplace_back(next_id++, t.detections());
  return result;
}

void write_history_csv(std::ostream& out, std::span<const IterationRecord> history) {
  out << "iteration,phase,n_vertices,n_edges,n_merges,wall_ms\n";
  for (const IterationRecord& rec : history)
    out << rec.iteration << ',' << phase_name(rec.phase) << ',' << rec.n_vertices
        << ',' << rec.n_edges << ',' << rec.n_merges << ','
        << detail::format_double(rec.wall_ms) << '\n';
}

}  // namespace trackmc
