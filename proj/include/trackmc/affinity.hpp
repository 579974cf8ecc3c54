#pragma once

#include <cstdint>
#include <istream>
#include <unordered_map>
#include <vector>

#include "trackmc/core.hpp"

namespace trackmc {

// Probability-like pair score in [0, 1]; 1 means "same object".
class Affinity {
 public:
  explicit Affinity(double value);
  double value() const { return value_; }

 private:
  double value_;
};

// Maps an affinity to a signed edge cost via the logit, clamping the input to
// [eps, 1-eps] so extreme scores stay finite. Positive cost attracts a join.
double cost_from_affinity(Affinity a, double eps = 1e-6);

// Inverse of cost_from_affinity away from the clamp region (the sigmoid).
Affinity affinity_from_cost(double cost);

// Pair scorer over tracklets. Implementations must be pure: same inputs, same
// result, no shared mutable state, so scoring may run concurrently. Callers
// only score pairs where `precedes(t_i, t_j)` holds.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual Affinity score(const Tracklet& t_i, const Tracklet& t_j,
                         const SequenceMeta& meta) const = 0;
};

struct OracleScorerConfig {
  double delta = 0.01;      // distance from certainty, in (0, 0.5)
  double flip_prob = 0.0;   // chance a pair's score is replaced by 1 - score
  std::uint64_t rng_seed = 0;
};

// Ground-truth lookup: 1 - delta for a same-identity pair, delta otherwise.
// With flip_prob > 0, the outcome is flipped for a pseudo-random subset of
// unordered tracklet-id pairs; the flip decision depends only on
// (rng_seed, min_id, max_id), so repeated calls agree.
// Throws MissingGroundTruthError if any detection lacks a gt id and
// ImpureTrackletError if a tracklet mixes identities.
Affinity oracle_score(const OracleScorerConfig& cfg, const Tracklet& t_i,
                      const Tracklet& t_j);

// Pipeline adapter around oracle_score. Tolerates mixed tracklets (which a
// noisy run can produce) by scoring each tracklet's dominant identity, ties
// toward the smaller id; on single-identity tracklets it equals oracle_score.
class OracleScorer final : public Scorer {
 public:
  explicit OracleScorer(OracleScorerConfig cfg);
  Affinity score(const Tracklet& t_i, const Tracklet& t_j,
                 const SequenceMeta& meta) const override;
  const OracleScorerConfig& config() const { return cfg_; }

 private:
  OracleScorerConfig cfg_;
};

struct BaselineScorerConfig {
  double gap_decay = 0.5;         // per-second decay of the motion term
  double descriptor_weight = 0.5; // blend exponent lambda in [0, 1]
  int velocity_window = 5;        // trailing detections used for the velocity fit
};

// Hand-crafted stand-in for a learned pair scorer: constant-velocity box
// prediction overlap, decayed by the time gap, geometrically blended with
// mean-descriptor cosine similarity when both sides carry descriptors.
// A pair of single detections falls back to plain overlap.
Affinity baseline_score(const BaselineScorerConfig& cfg, const Tracklet& t_i,
                        const Tracklet& t_j, const SequenceMeta& meta);

class BaselineScorer final : public Scorer {
 public:
  explicit BaselineScorer(BaselineScorerConfig cfg);
  Affinity score(const Tracklet& t_i, const Tracklet& t_j,
                 const SequenceMeta& meta) const override;
  const BaselineScorerConfig& config() const { return cfg_; }

 private:
  BaselineScorerConfig cfg_;
};

// Reads "#dim D" followed by "det_id,v1,...,vD" rows.
std::unordered_map<int, std::vector<double>> read_descriptor_csv(std::istream& in);

// Copies descriptors onto matching det_ids; detections without a row keep an
// empty descriptor.
void attach_descriptors(std::vector<Detection>& detections,
                        const std::unordered_map<int, std::vector<double>>& by_id);

}  // namespace trackmc
