#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "trackmc/errors.hpp"

namespace trackmc {

// Axis-aligned box, top-left corner + extent, in pixels.
struct BoundingBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double center_x() const { return x + 0.5 * w; }
  double center_y() const { return y + 0.5 * h; }
  double diagonal() const { return std::hypot(w, h); }

  bool valid() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(w) &&
           std::isfinite(h) && w > 0.0 && h > 0.0;
  }
};

struct Detection {
  int det_id = -1;
  int frame = 1;  // 1-based
  BoundingBox box;
  double confidence = 1.0;
  std::optional<int> gt_id;
  std::vector<double> descriptor;  // empty = none attached
};

struct SequenceMeta {
  double image_width = 0.0;
  double image_height = 0.0;
  double fps = 0.0;
  bool moving_camera = false;
  int n_max = 20;  // pruning cap for pair features
};

// Frame-unique, frame-ascending run of detections. The constructor sorts and
// validates; instances are immutable afterwards.
class Tracklet {
 public:
  Tracklet(int id, std::vector<Detection> detections);

  int id() const { return id_; }
  const std::vector<Detection>& detections() const { return dets_; }
  int length() const { return static_cast<int>(dets_.size()); }
  const Detection& first() const { return dets_.front(); }
  const Detection& last() const { return dets_.back(); }
  int first_frame() const { return dets_.front().frame; }
  int last_frame() const { return dets_.back().frame; }

  // Index of the detection at `frame`, if any.
  std::optional<int> index_at_frame(int frame) const;

 private:
  int id_;
  std::vector<Detection> dets_;
};

// True iff t_i ends strictly before t_j begins. Frame-overlapping tracklets
// precede in neither direction.
bool precedes(const Tracklet& t_i, const Tracklet& t_j);

// Trims a preceding pair to equal length N = min(len_i, len_j, n_max):
// the last N detections of t_i, the first N of t_j. Ids are kept.
std::pair<Tracklet, Tracklet> prune_pair(const Tracklet& t_i,
                                         const Tracklet& t_j, int n_max);

// For an equal-length pruned pair of length N, walks t_i backwards from its
// last detection while walking t_j forwards from its first:
// [(i_N, j_1), (i_{N-1}, j_2), ..., (i_1, j_N)].
std::vector<std::pair<Detection, Detection>> pair_sequence(const Tracklet& t_i,
                                                           const Tracklet& t_j);

// One normalized detection: position/extent in image units, time in seconds
// relative to the pair origin.
struct BoxFeature {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;
  double t = 0.0;
};

struct NormalizedPairFeature {
  BoxFeature first;
  BoxFeature second;
};

// Normalizes the pair_sequence of an already pruned pair. Spatial offsets and
// the time origin come from the earliest detection of the pair, which is
// always t_i's first detection.
std::vector<NormalizedPairFeature> normalize_pair(const Tracklet& t_i,
                                                  const Tracklet& t_j,
                                                  const SequenceMeta& meta);

// Union of two frame-disjoint tracklets under a caller-chosen new id.
Tracklet merge(const Tracklet& t_i, const Tracklet& t_j, int new_id);

}  // namespace trackmc
