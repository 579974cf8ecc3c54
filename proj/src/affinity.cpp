#include "trackmc/affinity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "trackmc/motio.hpp"
#include "trackmc/rng.hpp"
#include "parse_util.hpp"

namespace trackmc {

Affinity::Affinity(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw std::invalid_argument("affinity must lie in [0, 1]");
}

double cost_from_affinity(Affinity a, double eps) {
  if (!(eps > 0.0 && eps < 0.5))
    throw std::invalid_argument("eps must lie in (0, 0.5)");
  const double x = std::clamp(a.value(), eps, 1.0 - eps);
  return std::log(x / (1.0 - x));
}

Affinity affinity_from_cost(double cost) {
  if (!std::isfinite(cost)) throw std::invalid_argument("cost must be finite");
  // Evaluated via exp(-|c|) to stay accurate at both tails.
  if (cost >= 0.0) return Affinity(1.0 / (1.0 + std::exp(-cost)));
  const double e = std::exp(cost);
  return Affinity(e / (1.0 + e));
}

namespace {

void validate(const OracleScorerConfig& cfg) {
  if (!(cfg.delta > 0.0 && cfg.delta < 0.5))
    throw std::invalid_argument("delta must lie in (0, 0.5)");
  if (!(cfg.flip_prob >= 0.0 && cfg.flip_prob <= 1.0))
    throw std::invalid_argument("flip_prob must lie in [0, 1]");
}

// Identity of a tracklet under the strict contract: every detection labeled,
// all labels equal.
int strict_identity(const Tracklet& t) {
  int id = 0;
  bool have = false;
  for (const Detection& d : t.detections()) {
    if (!d.gt_id)
      throw MissingGroundTruthError("detection " + std::to_string(d.det_id) +
                                    " carries no ground-truth id");
    if (!have) {
      id = *d.gt_id;
      have = true;
    } else if (*d.gt_id != id) {
      throw ImpureTrackletError("tracklet " + std::to_string(t.id()) +
                                " mixes ground-truth ids");
    }
  }
  return id;
}

// Most frequent label; ties go to the smaller label.
int dominant_identity(const Tracklet& t) {
  std::map<int, int> counts;
  for (const Detection& d : t.detections()) {
    if (!d.gt_id)
      throw MissingGroundTruthError("detection " + std::to_string(d.det_id) +
                                    " carries no ground-truth id");
    ++counts[*d.gt_id];
  }
  int best_id = 0, best_count = -1;
  for (const auto& [id, count] : counts) {
    if (count > best_count) {
      best_id = id;
      best_count = count;
    }
  }
  return best_id;
}

Affinity oracle_pair_value(const OracleScorerConfig& cfg, int identity_i,
                           int identity_j, int tracklet_i, int tracklet_j) {
  double value = identity_i == identity_j ? 1.0 - cfg.delta : cfg.delta;
  if (cfg.flip_prob > 0.0) {
    const auto lo = static_cast<std::uint64_t>(
        static_cast<std::int64_t>(std::min(tracklet_i, tracklet_j)));
    const auto hi = static_cast<std::uint64_t>(
        static_cast<std::int64_t>(std::max(tracklet_i, tracklet_j)));
    if (unit_from_hash(hash3(cfg.rng_seed, lo, hi)) < cfg.flip_prob)
      value = 1.0 - value;
  }
  return Affinity(value);
}

}  // namespace

Affinity oracle_score(const OracleScorerConfig& cfg, const Tracklet& t_i,
                      const Tracklet& t_j) {
  validate(cfg);
  return oracle_pair_value(cfg, strict_identity(t_i), strict_identity(t_j),
                           t_i.id(), t_j.id());
}

OracleScorer::OracleScorer(OracleScorerConfig cfg) : cfg_(cfg) { validate(cfg_); }

Affinity OracleScorer::score(const Tracklet& t_i, const Tracklet& t_j,
                             const SequenceMeta&) const {
  return oracle_pair_value(cfg_, dominant_identity(t_i), dominant_identity(t_j),
                           t_i.id(), t_j.id());
}

namespace {

void validate(const BaselineScorerConfig& cfg) {
  if (!(cfg.gap_decay >= 0.0))
    throw std::invalid_argument("gap_decay must be >= 0");
  if (!(cfg.descriptor_weight >= 0.0 && cfg.descriptor_weight <= 1.0))
    throw std::invalid_argument("descriptor_weight must lie in [0, 1]");
  if (cfg.velocity_window < 1)
    throw std::invalid_argument("velocity_window must be >= 1");
}

// Least-squares line through (frame, value), evaluated at `at`.
double extrapolate(const std::vector<Detection>& dets, std::size_t start,
                   double (*coord)(const BoundingBox&), int at) {
  const std::size_t n = dets.size() - start;
  double mean_f = 0.0, mean_c = 0.0;
  for (std::size_t i = start; i < dets.size(); ++i) {
    mean_f += dets[i].frame;
    mean_c += coord(dets[i].box);
  }
  mean_f /= static_cast<double>(n);
  mean_c /= static_cast<double>(n);
  double num = 0.0, den = 0.0;
  for (std::size_t i = start; i < dets.size(); ++i) {
    const double df = dets[i].frame - mean_f;
    num += df * (coord(dets[i].box) - mean_c);
    den += df * df;
  }
  const double slope = den > 0.0 ? num / den : 0.0;
  return mean_c + slope * (at - mean_f);
}

// Mean over the detections that carry a descriptor; empty when none do.
std::vector<double> mean_descriptor(const Tracklet& t) {
  std::vector<double> mean;
  std::size_t n = 0;
  for (const Detection& d : t.detections()) {
    if (d.descriptor.empty()) continue;
    if (mean.empty()) mean.assign(d.descriptor.size(), 0.0);
    if (d.descriptor.size() != mean.size())
      throw std::invalid_argument("descriptor dimensions differ within a tracklet");
    for (std::size_t k = 0; k < mean.size(); ++k) mean[k] += d.descriptor[k];
    ++n;
  }
  if (n > 0)
    for (double& v : mean) v /= static_cast<double>(n);
  return mean;
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("descriptor dimensions differ between tracklets");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    dot += a[k] * b[k];
    na += a[k] * a[k];
    nb += b[k] * b[k];
  }
  if (na <= 0.0 || nb <= 0.0) return 0.0;
  return dot / std::sqrt(na * nb);
}

}  // namespace

Affinity baseline_score(const BaselineScorerConfig& cfg, const Tracklet& t_i,
                        const Tracklet& t_j, const SequenceMeta& meta) {
  validate(cfg);
  if (!precedes(t_i, t_j))
    throw NotPrecedingError("baseline_score requires t_i to end before t_j begins");
  if (!(meta.fps > 0.0)) throw std::invalid_argument("fps must be positive");

  if (t_i.length() == 1 && t_j.length() == 1) {
    const double overlap = iou(t_i.last().box, t_j.first().box);
    return Affinity(std::clamp(overlap, 0.0, 1.0));
  }

  const auto& dets = t_i.detections();
  const std::size_t window = std::min<std::size_t>(
      static_cast<std::size_t>(cfg.velocity_window), dets.size());
  const std::size_t start = dets.size() - window;
  const int target = t_j.first().frame;

  BoundingBox predicted = t_i.last().box;
  const double cx = extrapolate(dets, start, [](const BoundingBox& b) { return b.center_x(); }, target);
  const double cy = extrapolate(dets, start, [](const BoundingBox& b) { return b.center_y(); }, target);
  predicted.x = cx - 0.5 * predicted.w;
  predicted.y = cy - 0.5 * predicted.h;

  const double dt = static_cast<double>(target - t_i.last().frame) / meta.fps;
  const double motion = iou(predicted, t_j.first().box) * std::exp(-cfg.gap_decay * dt);

  const auto desc_i = mean_descriptor(t_i);
  const auto desc_j = mean_descriptor(t_j);
  double lambda = cfg.descriptor_weight;
  if (desc_i.empty() || desc_j.empty()) lambda = 0.0;

  double a;
  if (lambda <= 0.0) {
    a = motion;
  } else if (lambda >= 1.0) {
    a = 0.5 * (cosine(desc_i, desc_j) + 1.0);
  } else {
    const double appearance = 0.5 * (cosine(desc_i, desc_j) + 1.0);
    a = std::pow(motion, 1.0 - lambda) * std::pow(appearance, lambda);
  }
  return Affinity(std::clamp(a, 0.0, 1.0));
}

BaselineScorer::BaselineScorer(BaselineScorerConfig cfg) : cfg_(cfg) { validate(cfg_); }

Affinity BaselineScorer::score(const Tracklet& t_i, const Tracklet& t_j,
                               const SequenceMeta& meta) const {
  return baseline_score(cfg_, t_i, t_j, meta);
}

std::unordered_map<int, std::vector<double>> read_descriptor_csv(std::istream& in) {
  std::unordered_map<int, std::vector<double>> out;
  std::string line;
  int lineno = 0;
  long dim = -1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto s = detail::trim(line);
    if (s.empty()) continue;
    if (dim < 0) {
      if (s.substr(0, 5) != "#dim ")
        throw MalformedLineError(lineno, "expected '#dim D' header");
      const auto d = detail::parse_int(s.substr(5));
      if (!d || *d < 1)
        throw MalformedLineError(lineno, "descriptor dimension must be a positive integer");
      dim = static_cast<long>(*d);
      continue;
    }
    const auto fields = detail::split(s, ',');
    if (static_cast<long>(fields.size()) != dim + 1)
      throw MalformedLineError(lineno, "expected det_id plus " + std::to_string(dim) + " values");
    const auto id = detail::parse_int(fields[0]);
    if (!id) throw MalformedLineError(lineno, "bad detection id");
    std::vector<double> vec;
    vec.reserve(static_cast<std::size_t>(dim));
    for (long k = 1; k <= dim; ++k) {
      const auto v = detail::parse_double(fields[static_cast<std::size_t>(k)]);
      if (!v || !std::isfinite(*v))
        throw MalformedLineError(lineno, "bad descriptor value");
      vec.push_back(*v);
    }
    if (!out.emplace(static_cast<int>(*id), std::move(vec)).second)
      throw MalformedLineError(lineno, "duplicate detection id");
  }
  return out;
}

void attach_descriptors(std::vector<Detection>& detections,
                        const std::unordered_map<int, std::vector<double>>& by_id) {
  for (Detection& d : detections) {
    const auto it = by_id.find(d.det_id);
    if (it != by_id.end()) d.descriptor = it->second;
  }
}

}  // namespace trackmc
