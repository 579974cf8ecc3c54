#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "trackmc/core.hpp"

namespace trackmc {

// Intersection over union of two boxes; 0 when either is degenerate.
double iou(const BoundingBox& a, const BoundingBox& b);

struct SeqInfo {
  std::string name;
  double frame_rate = 30.0;
  int image_width = 0;
  int image_height = 0;
  int seq_length = 0;
};

// Minimal ini reader: looks for frameRate, imWidth, imHeight, seqLength and
// name under any section.
SeqInfo read_seqinfo(std::istream& in);

SequenceMeta make_meta(const SeqInfo& info, bool moving_camera = false,
                       int n_max = 20);

enum class MotKind {
  Detections,  // column 2 ignored
  GroundTruth, // column 2 is the identity
};

// CSV rows "frame,id,bb_left,bb_top,bb_width,bb_height,conf,x,y,z".
// Detection ids are assigned densely in row order.
std::vector<Detection> parse_mot_csv(std::istream& in, MotKind kind);

// Groups labeled detections into one tracklet per identity; tracklet id =
// identity, ascending.
std::vector<Tracklet> group_tracks(std::span<const Detection> detections);

// Rows sorted by (frame, id); confidence 1, world coordinates -1.
void write_tracks(std::ostream& out, std::span<const Tracklet> tracks);

struct ClearReport {
  double mota = 0.0;
  double motp = 0.0;  // mean matched overlap; 0 when nothing matched
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t id_switches = 0;
  std::int64_t fragmentations = 0;
  double mostly_tracked = 0.0;  // fraction of gt tracks covered >= 80%
  double mostly_lost = 0.0;     // fraction of gt tracks covered <= 20%
  std::int64_t total_gt = 0;    // gt boxes
  std::int64_t matches = 0;     // matched box pairs
};

// Frame-by-frame evaluation: matches carried over from the previous frame
// are kept while still above the overlap threshold, the rest are assigned by
// minimum-cost matching on 1 - overlap. An identity change on a ground-truth
// track counts one switch; a matched-unmatched-matched transition counts one
// fragmentation.
ClearReport clear_metrics(std::span<const Tracklet> predicted,
                          std::span<const Tracklet> ground_truth,
                          double iou_threshold = 0.5);

enum class SynthLayout { Random, Lanes };

struct SynthOcclusion {
  int identity = 1;     // 1-based
  int first_frame = 1;  // inclusive
  int last_frame = 1;   // inclusive
};

// Linear-motion scene: per identity a constant velocity plus per-frame
// Gaussian jitter, constant box size, optional occlusion windows during
// which the object yields neither a gt box nor a detection. Detections get
// Gaussian box noise and carry no identity.
struct SynthConfig {
  int n_identities = 5;
  int n_frames = 60;
  double image_width = 1280.0;
  double image_height = 720.0;
  double fps = 30.0;
  double min_speed = 2.0;  // px per frame
  double max_speed = 6.0;
  double box_width = 50.0;
  double box_height = 100.0;
  double size_scale_min = 0.9;  // per-identity box scale range
  double size_scale_max = 1.1;
  double jitter_sigma = 0.5;     // px, on the true center per frame
  double box_noise_sigma = 1.0;  // px, on detection box corners
  SynthLayout layout = SynthLayout::Random;
  std::vector<SynthOcclusion> occlusions;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

struct SynthResult {
  std::vector<Detection> detections;   // noisy, no identity
  std::vector<Tracklet> ground_truth;  // clean boxes, one track per identity
};

SynthResult synth_generate(const SynthConfig& cfg);

// Flat "key=value" file; occlusions as "id:first-last" entries separated by
// semicolons.
SynthConfig read_synth_config(std::istream& in);

}  // namespace trackmc
