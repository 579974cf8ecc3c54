#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "trackmc/core.hpp"

namespace trackmc {

// Normalized per-second displacement statistics: each sample is the distance
// between consecutive detection centers of one track, divided by the earlier
// box diagonal, times fps. Kept per camera class because moving cameras add
// apparent motion.
struct MotionClassStats {
  double mean_disp = 0.0;
  double std_disp = 0.0;
  std::int64_t sample_count = 0;
};

struct MotionStats {
  MotionClassStats static_camera;
  MotionClassStats moving_camera;

  const MotionClassStats& for_camera(bool moving) const {
    return moving ? moving_camera : static_camera;
  }
  MotionClassStats& for_camera(bool moving) {
    return moving ? moving_camera : static_camera;
  }
};

// Accumulates displacement samples from annotated tracks into the camera
// class given by meta.moving_camera. Throws NoSamplesError when no track has
// two consecutive detections.
MotionStats compute_motion_stats(std::span<const Tracklet> tracks,
                                 const SequenceMeta& meta);

// Pools two stats by sample count (population moments).
MotionStats merge_motion_stats(const MotionStats& a, const MotionStats& b);

// How far an object may plausibly travel from `last` across `gap` frames:
// inflation * (mean + 3 std) * (gap / fps) * diagonal(last.box).
// Throws NoStatsError when the camera class holds no samples.
double feasible_radius(const Detection& last, int gap, const MotionStats& stats,
                       const SequenceMeta& meta, double inflation);

// Candidate pair of tracklets, by tracklet id, with gap =
// first_frame(v) - last_frame(u) >= 1.
struct EdgeCandidate {
  int u = 0;
  int v = 0;
  int gap = 0;
};

// Per-pair cap on the frame gap; pairs above the cap are skipped.
using GapLimit = std::function<int(const Tracklet&, const Tracklet&)>;

// Emits every ordered pair (u, v) with precedes(u, v), gap within the cap,
// and, when stats are given, center distance within the feasible radius of
// u's last detection. Output is sorted by (u, v). Pass stats = nullptr to
// skip the spatial gate.
std::vector<EdgeCandidate> candidate_edges(std::span<const Tracklet> tracklets,
                                           const GapLimit& gap_limit,
                                           const MotionStats* stats,
                                           const SequenceMeta& meta,
                                           double inflation = 2.0);

// Text format, one row per camera class: "<class> <mean> <std> <count>".
void write_motion_stats(std::ostream& out, const MotionStats& stats);
MotionStats read_motion_stats(std::istream& in);

}  // namespace trackmc
