#include "trackmc/core.hpp"

#include <algorithm>

namespace trackmc {

Tracklet::Tracklet(int id, std::vector<Detection> detections)
    : id_(id), dets_(std::move(detections)) {
  if (dets_.empty()) throw EmptyTrackletError("tracklet must hold at least one detection");
  std::stable_sort(dets_.begin(), dets_.end(),
                   [](const Detection& a, const Detection& b) { return a.frame < b.frame; });
  for (std::size_t i = 0; i < dets_.size(); ++i) {
    if (dets_[i].frame < 1)
      throw InvalidDetectionError("frame numbers are 1-based");
    if (!dets_[i].box.valid())
      throw InvalidDetectionError("bounding box must be finite with positive extent");
    if (i > 0 && dets_[i].frame == dets_[i - 1].frame)
      throw DuplicateFrameError("two detections on frame " + std::to_string(dets_[i].frame));
  }
}

std::optional<int> Tracklet::index_at_frame(int frame) const {
  auto it = std::lower_bound(
      dets_.begin(), dets_.end(), frame,
      [](const Detection& d, int f) { return d.frame < f; });
  if (it == dets_.end() || it->frame != frame) return std::nullopt;
  return static_cast<int>(it - dets_.begin());
}

bool precedes(const Tracklet& t_i, const Tracklet& t_j) {
  return t_i.last_frame() < t_j.first_frame();
}

std::pair<Tracklet, Tracklet> prune_pair(const Tracklet& t_i,
                                         const Tracklet& t_j, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (!precedes(t_i, t_j))
    throw NotPrecedingError("prune_pair requires t_i to end before t_j begins");
  const int n = std::min({t_i.length(), t_j.length(), n_max});
  std::vector<Detection> head(t_i.detections().end() - n, t_i.detections().end());
  std::vector<Detection> tail(t_j.detections().begin(), t_j.detections().begin() + n);
  return {Tracklet(t_i.id(), std::move(head)), Tracklet(t_j.id(), std::move(tail))};
}

std::vector<std::pair<Detection, Detection>> pair_sequence(const Tracklet& t_i,
                                                           const Tracklet& t_j) {
  if (t_i.length() != t_j.length())
    throw LengthMismatchError("pair_sequence requires equal lengths; prune first");
  if (!precedes(t_i, t_j))
    throw NotPrecedingError("pair_sequence requires t_i to end before t_j begins");
  const int n = t_i.length();
  std::vector<std::pair<Detection, Detection>> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    out.emplace_back(t_i.detections()[static_cast<std::size_t>(n - k)],
                     t_j.detections()[static_cast<std::size_t>(k - 1)]);
  return out;
}

namespace {

BoxFeature normalize_detection(const Detection& d, const Detection& origin,
                               const SequenceMeta& meta) {
  BoxFeature f;
  f.x = (d.box.x - origin.box.x) / meta.image_width;
  f.y = (d.box.y - origin.box.y) / meta.image_height;
  f.w = d.box.w / meta.image_width;
  f.h = d.box.h / meta.image_height;
  f.t = static_cast<double>(d.frame - origin.frame) / meta.fps;
  return f;
}

}  // namespace

std::vector<NormalizedPairFeature> normalize_pair(const Tracklet& t_i,
                                                  const Tracklet& t_j,
                                                  const SequenceMeta& meta) {
  if (meta.image_width <= 0.0 || meta.image_height <= 0.0 || meta.fps <= 0.0)
    throw std::invalid_argument("normalize_pair needs positive image size and fps");
  const auto seq = pair_sequence(t_i, t_j);  // validates lengths and order
  const Detection& origin = t_i.first();
  std::vector<NormalizedPairFeature> out;
  out.reserve(seq.size());
  for (const auto& [a, b] : seq)
    out.push_back({normalize_detection(a, origin, meta),
                   normalize_detection(b, origin, meta)});
  return out;
}

Tracklet merge(const Tracklet& t_i, const Tracklet& t_j, int new_id) {
  std::vector<Detection> all;
  all.reserve(t_i.detections().size() + t_j.detections().size());
  all.insert(all.end(), t_i.detections().begin(), t_i.detections().end());
  all.insert(all.end(), t_j.detections().begin(), t_j.detections().end());
  std::sort(all.begin(), all.end(),
            [](const Detection& a, const Detection& b) { return a.frame < b.frame; });
  for (std::size_t i = 1; i < all.size(); ++i)
    if (all[i].frame == all[i - 1].frame)
      throw FrameCollisionError("merge inputs share frame " + std::to_string(all[i].frame));
  return Tracklet(new_id, std::move(all));
}

}  // namespace trackmc
