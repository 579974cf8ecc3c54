#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "trackmc/core.hpp"
#include "trackmc/rng.hpp"

namespace trackmc {

enum class SampleStrategy { Split, Nearest, SameQuadrant, OtherQuadrant };

std::string_view strategy_name(SampleStrategy s);

// One labeled tracklet pair for scorer training. `gap` is
// first_frame(second) - last_frame(first), always >= 1.
struct TrackletPairSample {
  Tracklet first;
  Tracklet second;
  bool positive = false;
  SampleStrategy strategy = SampleStrategy::Split;
  int gap = 1;
};

struct GenConfig {
  int n_samples = 0;
  int min_len = 1;
  int max_len = 20;
  double gap_factor_max = 4.0;  // skipped frames drawn from [0, factor * length]
  // Negative-strategy mix, fractions of the negative half.
  double mix_nearest = 0.5;
  double mix_same_quadrant = 0.25;
  double mix_other_quadrant = 0.25;
  std::uint64_t rng_seed = 0;
  int max_retries = 1000;  // draw attempts per sample before giving up

  void validate() const;
};

struct GenReport {
  int n_positive = 0;
  int n_nearest = 0;
  int n_same_quadrant = 0;
  int n_other_quadrant = 0;
  std::int64_t retries = 0;
};

// Two segments of one track: `length` consecutive detections ending at some
// frame f, and `length` consecutive detections starting at f + skip + 1.
// The start is drawn uniformly from the admissible positions. Throws
// TrackTooShortError when no position fits.
TrackletPairSample gen_positive(const Tracklet& track, int length, int skip,
                                SeededRng& rng);

// Negative partners for an already drawn anchor segment. The reference point
// is the anchor identity's own detection at frame last_frame(anchor) + skip
// + 1; the partner is another track's segment starting exactly there.
// Nearest: the candidate whose start center is closest to the reference
// center (distance ties drawn at random). Quadrant: a uniformly drawn
// candidate whose start center falls in the same / a different image
// quadrant as the reference center. Throws NoCandidateError when no track
// qualifies.
TrackletPairSample gen_negative_nearest(std::span<const Tracklet> tracks,
                                        std::size_t anchor_index,
                                        const Tracklet& anchor_segment,
                                        int length, int skip,
                                        const SequenceMeta& meta, SeededRng& rng);
TrackletPairSample gen_negative_same_quadrant(std::span<const Tracklet> tracks,
                                              std::size_t anchor_index,
                                              const Tracklet& anchor_segment,
                                              int length, int skip,
                                              const SequenceMeta& meta,
                                              SeededRng& rng);
TrackletPairSample gen_negative_other_quadrant(std::span<const Tracklet> tracks,
                                               std::size_t anchor_index,
                                               const Tracklet& anchor_segment,
                                               int length, int skip,
                                               const SequenceMeta& meta,
                                               SeededRng& rng);

// Quadrant index of an image point: 0 top-left, 1 top-right, 2 bottom-left,
// 3 bottom-right. Points on the midlines count as right / bottom.
int quadrant_of(double cx, double cy, const SequenceMeta& meta);

// Draws cfg.n_samples pairs from annotated tracks: half positive splits, the
// rest negatives in the configured strategy mix, in seeded-shuffled order.
// Throws ExhaustedError when a strategy keeps failing (e.g. negatives from a
// single identity).
std::pair<std::vector<TrackletPairSample>, GenReport> gen_dataset(
    std::span<const Tracklet> tracks, const GenConfig& cfg,
    const SequenceMeta& meta);

// One JSON object per line: label, strategy, gap, and the two detection
// lists.
void write_samples_jsonl(std::ostream& out,
                         std::span<const TrackletPairSample> samples);

}  // namespace trackmc
