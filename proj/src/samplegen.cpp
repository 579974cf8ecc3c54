#include "trackmc/samplegen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "json.hpp"

namespace trackmc {

std::string_view strategy_name(SampleStrategy s) {
  switch (s) {
    case SampleStrategy::Split: return "split";
    case SampleStrategy::Nearest: return "nearest";
    case SampleStrategy::SameQuadrant: return "same_quadrant";
    case SampleStrategy::OtherQuadrant: return "other_quadrant";
  }
  return "unknown";
}

void GenConfig::validate() const {
  if (n_samples < 0) throw std::invalid_argument("n_samples must be >= 0");
  if (min_len < 1 || max_len < min_len)
    throw std::invalid_argument("need 1 <= min_len <= max_len");
  if (!(gap_factor_max >= 0.0))
    throw std::invalid_argument("gap_factor_max must be >= 0");
  if (mix_nearest < 0.0 || mix_same_quadrant < 0.0 || mix_other_quadrant < 0.0 ||
      std::abs(mix_nearest + mix_same_quadrant + mix_other_quadrant - 1.0) > 1e-9)
    throw std::invalid_argument("negative-strategy mix must be nonnegative and sum to 1");
  if (max_retries < 1) throw std::invalid_argument("max_retries must be >= 1");
}

int quadrant_of(double cx, double cy, const SequenceMeta& meta) {
  if (meta.image_width <= 0.0 || meta.image_height <= 0.0)
    throw std::invalid_argument("quadrants need positive image dimensions");
  const int qx = cx < 0.5 * meta.image_width ? 0 : 1;
  const int qy = cy < 0.5 * meta.image_height ? 0 : 1;
  return qy * 2 + qx;
}

namespace {

Tracklet slice(const Tracklet& track, int start, int length, int id) {
  const auto& dets = track.detections();
  return Tracklet(id, std::vector<Detection>(
                          dets.begin() + start, dets.begin() + start + length));
}

// Start indices whose segment fits and whose continuation frame
// (segment end + skip + 1) exists in the track. When `need_full_second` is
// set, a second full segment must fit from the continuation onwards.
std::vector<int> admissible_starts(const Tracklet& track, int length, int skip,
                                   bool need_full_second) {
  std::vector<int> starts;
  const int len = track.length();
  for (int a = 0; a + length <= len; ++a) {
    const int end_frame = track.detections()[static_cast<std::size_t>(a + length - 1)].frame;
    const auto b = track.index_at_frame(end_frame + skip + 1);
    if (!b) continue;
    if (need_full_second && *b + length > len) continue;
    starts.push_back(a);
  }
  return starts;
}

void check_args(int length, int skip) {
  if (length < 1) throw std::invalid_argument("segment length must be >= 1");
  if (skip < 0) throw std::invalid_argument("skipped frame count must be >= 0");
}

struct NegativeCandidate {
  std::size_t track;
  int start;
  double cx;
  double cy;
};

// Other tracks that can supply a full segment starting exactly at `frame`.
std::vector<NegativeCandidate> candidates_at(std::span<const Tracklet> tracks,
                                             std::size_t anchor_index, int frame,
                                             int length) {
  std::vector<NegativeCandidate> out;
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    if (i == anchor_index) continue;
    const auto b = tracks[i].index_at_frame(frame);
    if (!b || *b + length > tracks[i].length()) continue;
    const BoundingBox& box = tracks[i].detections()[static_cast<std::size_t>(*b)].box;
    out.push_back({i, *b, box.center_x(), box.center_y()});
  }
  return out;
}

// Reference detection: the anchor identity's own continuation at the target
// frame.
const Detection& reference_detection(std::span<const Tracklet> tracks,
                                     std::size_t anchor_index,
                                     const Tracklet& anchor_segment, int skip) {
  if (anchor_index >= tracks.size())
    throw std::invalid_argument("anchor index out of range");
  const Tracklet& track = tracks[anchor_index];
  const int target = anchor_segment.last_frame() + skip + 1;
  const auto idx = track.index_at_frame(target);
  if (!idx)
    throw NoCandidateError("anchor identity has no detection at frame " +
                           std::to_string(target));
  return track.detections()[static_cast<std::size_t>(*idx)];
}

TrackletPairSample finish_negative(std::span<const Tracklet> tracks,
                                   const Tracklet& anchor_segment, int length,
                                   int skip, const NegativeCandidate& pick,
                                   SampleStrategy strategy) {
  TrackletPairSample sample{anchor_segment,
                            slice(tracks[pick.track], pick.start, length, 1),
                            false, strategy, skip + 1};
  return sample;
}

}  // namespace

TrackletPairSample gen_positive(const Tracklet& track, int length, int skip,
                                SeededRng& rng) {
  check_args(length, skip);
  const auto starts = admissible_starts(track, length, skip, true);
  if (starts.empty())
    throw TrackTooShortError("track " + std::to_string(track.id()) +
                             " admits no split of length " + std::to_string(length) +
                             " with " + std::to_string(skip) + " skipped frames");
  const int a = starts[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<std::int64_t>(starts.size()) - 1))];
  const Tracklet first = slice(track, a, length, 0);
  const int b = *track.index_at_frame(first.last_frame() + skip + 1);
  const Tracklet second = slice(track, b, length, 1);
  return {first, second, true, SampleStrategy::Split, skip + 1};
}

TrackletPairSample gen_negative_nearest(std::span<const Tracklet> tracks,
                                        std::size_t anchor_index,
                                        const Tracklet& anchor_segment,
                                        int length, int skip,
                                        const SequenceMeta& meta, SeededRng& rng) {
  (void)meta;
  check_args(length, skip);
  const Detection& ref = reference_detection(tracks, anchor_index, anchor_segment, skip);
  const auto candidates =
      candidates_at(tracks, anchor_index, ref.frame, length);
  if (candidates.empty())
    throw NoCandidateError("no other identity offers a segment at frame " +
                           std::to_string(ref.frame));
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : candidates)
    best = std::min(best, std::hypot(c.cx - ref.box.center_x(),
                                     c.cy - ref.box.center_y()));
  std::vector<const NegativeCandidate*> ties;
  for (const auto& c : candidates)
    if (std::hypot(c.cx - ref.box.center_x(), c.cy - ref.box.center_y()) == best)
      ties.push_back(&c);
  const auto& pick = *ties[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<std::int64_t>(ties.size()) - 1))];
  return finish_negative(tracks, anchor_segment, length, skip, pick,
                         SampleStrategy::Nearest);
}

namespace {

TrackletPairSample gen_negative_by_quadrant(std::span<const Tracklet> tracks,
                                            std::size_t anchor_index,
                                            const Tracklet& anchor_segment,
                                            int length, int skip, bool same,
                                            const SequenceMeta& meta,
                                            SeededRng& rng) {
  check_args(length, skip);
  const Detection& ref = reference_detection(tracks, anchor_index, anchor_segment, skip);
  const int q = quadrant_of(ref.box.center_x(), ref.box.center_y(), meta);
  std::vector<NegativeCandidate> pool;
  for (const auto& c : candidates_at(tracks, anchor_index, ref.frame, length)) {
    const bool matches = quadrant_of(c.cx, c.cy, meta) == q;
    if (matches == same) pool.push_back(c);
  }
  if (pool.empty())
    throw NoCandidateError(std::string("no segment in a ") +
                           (same ? "matching" : "different") + " quadrant at frame " +
                           std::to_string(ref.frame));
  const auto& pick = pool[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<std::int64_t>(pool.size()) - 1))];
  return finish_negative(tracks, anchor_segment, length, skip, pick,
                         same ? SampleStrategy::SameQuadrant
                              : SampleStrategy::OtherQuadrant);
}

}  // namespace

TrackletPairSample gen_negative_same_quadrant(std::span<const Tracklet> tracks,
                                              std::size_t anchor_index,
                                              const Tracklet& anchor_segment,
                                              int length, int skip,
                                              const SequenceMeta& meta,
                                              SeededRng& rng) {
  return gen_negative_by_quadrant(tracks, anchor_index, anchor_segment, length,
                                  skip, true, meta, rng);
}

TrackletPairSample gen_negative_other_quadrant(std::span<const Tracklet> tracks,
                                               std::size_t anchor_index,
                                               const Tracklet& anchor_segment,
                                               int length, int skip,
                                               const SequenceMeta& meta,
                                               SeededRng& rng) {
  return gen_negative_by_quadrant(tracks, anchor_index, anchor_segment, length,
                                  skip, false, meta, rng);
}

std::pair<std::vector<TrackletPairSample>, GenReport> gen_dataset(
    std::span<const Tracklet> tracks, const GenConfig& cfg,
    const SequenceMeta& meta) {
  cfg.validate();
  std::vector<TrackletPairSample> samples;
  GenReport report;
  if (cfg.n_samples == 0) return {samples, report};
  if (tracks.empty()) throw ExhaustedError("no annotated tracks to sample from");

  const auto n_pos = static_cast<int>(std::llround(0.5 * cfg.n_samples));
  const int n_neg = cfg.n_samples - n_pos;
  auto n_near = static_cast<int>(std::llround(cfg.mix_nearest * n_neg));
  auto n_same = static_cast<int>(std::llround(cfg.mix_same_quadrant * n_neg));
  if (n_near + n_same > n_neg) n_same = n_neg - n_near;
  const int n_other = n_neg - n_near - n_same;

  std::vector<SampleStrategy> deck;
  deck.reserve(static_cast<std::size_t>(cfg.n_samples));
  deck.insert(deck.end(), static_cast<std::size_t>(n_pos), SampleStrategy::Split);
  deck.insert(deck.end(), static_cast<std::size_t>(n_near), SampleStrategy::Nearest);
  deck.insert(deck.end(), static_cast<std::size_t>(n_same), SampleStrategy::SameQuadrant);
  deck.insert(deck.end(), static_cast<std::size_t>(n_other), SampleStrategy::OtherQuadrant);

  SeededRng rng(cfg.rng_seed);
  rng.shuffle(deck);

  samples.reserve(deck.size());
  for (const SampleStrategy strategy : deck) {
    bool produced = false;
    for (int attempt = 0; attempt < cfg.max_retries && !produced; ++attempt) {
      const auto track_idx = static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(tracks.size()) - 1));
      const Tracklet& track = tracks[track_idx];
      const auto length = static_cast<int>(rng.uniform_int(cfg.min_len, cfg.max_len));
      const auto max_skip =
          static_cast<std::int64_t>(std::floor(cfg.gap_factor_max * length));
      const auto skip = static_cast<int>(rng.uniform_int(0, max_skip));
      try {
        if (strategy == SampleStrategy::Split) {
          samples.push_back(gen_positive(track, length, skip, rng));
        } else {
          const auto starts = admissible_starts(track, length, skip, false);
          if (starts.empty())
            throw TrackTooShortError("no admissible anchor segment");
          const int a = starts[static_cast<std::size_t>(
              rng.uniform_int(0, static_cast<std::int64_t>(starts.size()) - 1))];
          const Tracklet anchor = slice(track, a, length, 0);
          switch (strategy) {
            case SampleStrategy::Nearest:
              samples.push_back(gen_negative_nearest(tracks, track_idx, anchor,
                                                     length, skip, meta, rng));
              break;
            case SampleStrategy::SameQuadrant:
              samples.push_back(gen_negative_same_quadrant(
                  tracks, track_idx, anchor, length, skip, meta, rng));
              break;
            default:
              samples.push_back(gen_negative_other_quadrant(
                  tracks, track_idx, anchor, length, skip, meta, rng));
              break;
          }
        }
        produced = true;
      } catch (const TrackTooShortError&) {
        ++report.retries;
      } catch (const NoCandidateError&) {
        ++report.retries;
      }
    }
    if (!produced)
      throw ExhaustedError(std::string("could not draw a '") +
                           std::string(strategy_name(strategy)) + "' sample after " +
                           std::to_string(cfg.max_retries) + " attempts");
    switch (strategy) {
      case SampleStrategy::Split: ++report.n_positive; break;
      case SampleStrategy::Nearest: ++report.n_nearest; break;
      case SampleStrategy::SameQuadrant: ++report.n_same_quadrant; break;
      case SampleStrategy::OtherQuadrant: ++report.n_other_quadrant; break;
    }
  }
  return {samples, report};
}

namespace {

nlohmann::ordered_json detections_json(const Tracklet& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Detection& d : t.detections()) {
    nlohmann::ordered_json row;
    row["frame"] = d.frame;
    row["box"] = {d.box.x, d.box.y, d.box.w, d.box.h};
    if (d.gt_id) row["gt_id"] = *d.gt_id;
    arr.push_back(std::move(row));
  }
  return arr;
}

}  // namespace

void write_samples_jsonl(std::ostream& out,
                         std::span<const TrackletPairSample> samples) {
  for (const TrackletPairSample& s : samples) {
    nlohmann::ordered_json row;
    row["label"] = s.positive ? "positive" : "negative";
    row["strategy"] = std::string(strategy_name(s.strategy));
    row["gap"] = s.gap;
    row["first"] = detections_json(s.first);
    row["second"] = detections_json(s.second);
    out << row.dump() << '\n';
  }
}

}  // namespace trackmc
