#include "trackmc/motio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "trackmc/rng.hpp"
#include "format_util.hpp"
#include "parse_util.hpp"

namespace trackmc {

double iou(const BoundingBox& a, const BoundingBox& b) {
  if (a.w <= 0.0 || a.h <= 0.0 || b.w <= 0.0 || b.h <= 0.0) return 0.0;
  const double ix = std::max(0.0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
  const double iy = std::max(0.0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
  const double inter = ix * iy;
  const double uni = a.w * a.h + b.w * b.h - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

SeqInfo read_seqinfo(std::istream& in) {
  SeqInfo info;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto s = detail::trim(line);
    if (s.empty() || s.front() == '[' || s.front() == ';' || s.front() == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw MalformedLineError(lineno, "expected key=value");
    const auto key = detail::trim(s.substr(0, eq));
    const auto value = detail::trim(s.substr(eq + 1));
    if (key == "name") {
      info.name = std::string(value);
    } else if (key == "frameRate") {
      const auto v = detail::parse_double(value);
      if (!v || !(*v > 0.0)) throw MalformedLineError(lineno, "bad frameRate");
      info.frame_rate = *v;
    } else if (key == "imWidth" || key == "imHeight" || key == "seqLength") {
      const auto v = detail::parse_int(value);
      if (!v || *v < 0) throw MalformedLineError(lineno, std::string("bad ") + std::string(key));
      if (key == "imWidth") info.image_width = static_cast<int>(*v);
      else if (key == "imHeight") info.image_height = static_cast<int>(*v);
      else info.seq_length = static_cast<int>(*v);
    }
    // other keys (imDir, imExt, ...) are irrelevant here
  }
  if (info.image_width <= 0 || info.image_height <= 0)
    throw ConfigError("sequence info must define positive imWidth and imHeight");
  return info;
}

SequenceMeta make_meta(const SeqInfo& info, bool moving_camera, int n_max) {
  SequenceMeta meta;
  meta.image_width = info.image_width;
  meta.image_height = info.image_height;
  meta.fps = info.frame_rate;
  meta.moving_camera = moving_camera;
  meta.n_max = n_max;
  return meta;
}

std::vector<Detection> parse_mot_csv(std::istream& in, MotKind kind) {
  std::vector<Detection> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto s = detail::trim(line);
    if (s.empty() || s.front() == '#') continue;
    const auto fields = detail::split(s, ',');
    if (fields.size() != 10)
      throw MalformedLineError(lineno, "expected 10 comma-separated columns, got " +
                                           std::to_string(fields.size()));
    const auto frame = detail::parse_int(fields[0]);
    const auto id = detail::parse_int(fields[1]);
    const auto left = detail::parse_double(fields[2]);
    const auto top = detail::parse_double(fields[3]);
    const auto width = detail::parse_double(fields[4]);
    const auto height = detail::parse_double(fields[5]);
    const auto conf = detail::parse_double(fields[6]);
    if (!frame || !id || !left || !top || !width || !height || !conf)
      throw MalformedLineError(lineno, "unparseable numeric column");
    if (*frame < 1) throw MalformedLineError(lineno, "frame numbers are 1-based");
    if (!(*width > 0.0) || !(*height > 0.0))
      throw MalformedLineError(lineno, "box extent must be positive");
    Detection d;
    d.det_id = static_cast<int>(out.size());
    d.frame = static_cast<int>(*frame);
    d.box = {*left, *top, *width, *height};
    d.confidence = *conf;
    if (kind == MotKind::GroundTruth) d.gt_id = static_cast<int>(*id);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Tracklet> group_tracks(std::span<const Detection> detections) {
  std::map<int, std::vector<Detection>> by_id;
  for (const Detection& d : detections) {
    if (!d.gt_id)
      throw MissingGroundTruthError("detection " + std::to_string(d.det_id) +
                                    " carries no identity");
    by_id[*d.gt_id].push_back(d);
  }
  std::vector<Tracklet> tracks;
  tracks.reserve(by_id.size());
  for (auto& [id, dets] : by_id) tracks.emplace_back(id, std::move(dets));
  return tracks;
}

void write_tracks(std::ostream& out, std::span<const Tracklet> tracks) {
  struct Row {
    int frame;
    int id;
    const BoundingBox* box;
  };
  std::vector<Row> rows;
  for (const Tracklet& t : tracks)
    for (const Detection& d : t.detections()) rows.push_back({d.frame, t.id(), &d.box});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.frame != b.frame) return a.frame < b.frame;
    return a.id < b.id;
  });
  for (const Row& r : rows)
    out << r.frame << ',' << r.id << ',' << detail::format_double(r.box->x) << ','
        << detail::format_double(r.box->y) << ',' << detail::format_double(r.box->w)
        << ',' << detail::format_double(r.box->h) << ",1,-1,-1,-1\n";
}

namespace {

constexpr double kForbidden = 1e6;

// Minimum-cost assignment on a square matrix (potentials method). Returns
// the column picked for each row.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return {};
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(static_cast<std::size_t>(n) + 1, inf);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      const int i0 = p[static_cast<std::size_t>(j0)];
      int j1 = -1;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const double cur = a[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j - 1)] -
                           u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n; ++j)
    if (p[static_cast<std::size_t>(j)] > 0)
      row_to_col[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)] = j - 1;
  return row_to_col;
}

struct FrameBox {
  int track = 0;  // index into the span
  const BoundingBox* box = nullptr;
};

}  // namespace

ClearReport clear_metrics(std::span<const Tracklet> predicted,
                          std::span<const Tracklet> ground_truth,
                          double iou_threshold) {
  if (!(iou_threshold > 0.0 && iou_threshold <= 1.0))
    throw std::invalid_argument("iou_threshold must lie in (0, 1]");

  std::map<int, std::vector<FrameBox>> gt_at, pred_at;
  for (std::size_t i = 0; i < ground_truth.size(); ++i)
    for (const Detection& d : ground_truth[i].detections())
      gt_at[d.frame].push_back({static_cast<int>(i), &d.box});
  for (std::size_t i = 0; i < predicted.size(); ++i)
    for (const Detection& d : predicted[i].detections())
      pred_at[d.frame].push_back({static_cast<int>(i), &d.box});

  std::set<int> frames;
  for (const auto& [f, boxes] : gt_at) {
    (void)boxes;
    frames.insert(f);
  }
  for (const auto& [f, boxes] : pred_at) {
    (void)boxes;
    frames.insert(f);
  }

  ClearReport report;
  for (const Tracklet& t : ground_truth) report.total_gt += t.length();

  enum Status : char { kUnseen = 0, kMatched, kMissed };
  std::vector<int> last_pred(ground_truth.size(), -1);
  std::vector<char> status(ground_truth.size(), kUnseen);
  std::vector<char> ever_matched(ground_truth.size(), 0);
  std::vector<std::int64_t> covered(ground_truth.size(), 0);
  std::map<int, int> prev_matches;  // gt track -> pred track
  double iou_sum = 0.0;

  for (const int f : frames) {
    const auto git = gt_at.find(f);
    const auto pit = pred_at.find(f);
    const auto* gts = git != gt_at.end() ? &git->second : nullptr;
    const auto* preds = pit != pred_at.end() ? &pit->second : nullptr;

    std::map<int, int> cur_matches;
    std::map<int, double> cur_overlap;
    if (gts != nullptr && preds != nullptr) {
      const auto find_box = [](const std::vector<FrameBox>& boxes, int track) {
        for (const FrameBox& fb : boxes)
          if (fb.track == track) return fb.box;
        return static_cast<const BoundingBox*>(nullptr);
      };

      std::set<int> used_preds;
      for (const auto& [g, p] : prev_matches) {
        const BoundingBox* gb = find_box(*gts, g);
        const BoundingBox* pb = find_box(*preds, p);
        if (gb == nullptr || pb == nullptr) continue;
        const double overlap = iou(*gb, *pb);
        if (overlap >= iou_threshold) {
          cur_matches[g] = p;
          cur_overlap[g] = overlap;
          used_preds.insert(p);
        }
      }

      std::vector<FrameBox> free_gts, free_preds;
      for (const FrameBox& fb : *gts)
        if (!cur_matches.count(fb.track)) free_gts.push_back(fb);
      for (const FrameBox& fb : *preds)
        if (!used_preds.count(fb.track)) free_preds.push_back(fb);

      if (!free_gts.empty() && !free_preds.empty()) {
        const std::size_t side = std::max(free_gts.size(), free_preds.size());
        std::vector<std::vector<double>> cost(side, std::vector<double>(side, kForbidden));
        for (std::size_t r = 0; r < free_gts.size(); ++r)
          for (std::size_t c = 0; c < free_preds.size(); ++c) {
            const double overlap = iou(*free_gts[r].box, *free_preds[c].box);
            if (overlap >= iou_threshold) cost[r][c] = 1.0 - overlap;
          }
        const auto assignment = min_cost_assignment(cost);
        for (std::size_t r = 0; r < free_gts.size(); ++r) {
          const int c = assignment[r];
          if (c < 0 || static_cast<std::size_t>(c) >= free_preds.size()) continue;
          if (cost[r][static_cast<std::size_t>(c)] >= kForbidden * 0.5) continue;
          const int g = free_gts[r].track;
          cur_matches[g] = free_preds[static_cast<std::size_t>(c)].track;
          cur_overlap[g] = 1.0 - cost[r][static_cast<std::size_t>(c)];
        }
      }
    }

    const std::size_t n_gt_here = gts != nullptr ? gts->size() : 0;
    const std::size_t n_pred_here = preds != nullptr ? preds->size() : 0;
    report.fn += static_cast<std::int64_t>(n_gt_here) -
                 static_cast<std::int64_t>(cur_matches.size());
    report.fp += static_cast<std::int64_t>(n_pred_here) -
                 static_cast<std::int64_t>(cur_matches.size());

    if (gts != nullptr) {
      for (const FrameBox& fb : *gts) {
        const auto g = static_cast<std::size_t>(fb.track);
        const auto mit = cur_matches.find(fb.track);
        if (mit == cur_matches.end()) {
          status[g] = kMissed;
          continue;
        }
        const int p = mit->second;
        ++report.matches;
        ++covered[g];
        iou_sum += cur_overlap[fb.track];
        if (last_pred[g] != -1 && last_pred[g] != p) ++report.id_switches;
        if (status[g] == kMissed && ever_matched[g]) ++report.fragmentations;
        last_pred[g] = p;
        status[g] = kMatched;
        ever_matched[g] = 1;
      }
    }
    prev_matches = std::move(cur_matches);
  }

  const double denom = report.total_gt > 0 ? static_cast<double>(report.total_gt) : 1.0;
  report.mota = 1.0 - static_cast<double>(report.fp + report.fn + report.id_switches) / denom;
  report.motp = report.matches > 0 ? iou_sum / static_cast<double>(report.matches) : 0.0;

  if (!ground_truth.empty()) {
    int mt = 0, ml = 0;
    for (std::size_t g = 0; g < ground_truth.size(); ++g) {
      const double coverage = static_cast<double>(covered[g]) /
                              static_cast<double>(ground_truth[g].length());
      if (coverage >= 0.8) ++mt;
      if (coverage <= 0.2) ++ml;
    }
    report.mostly_tracked = static_cast<double>(mt) / static_cast<double>(ground_truth.size());
    report.mostly_lost = static_cast<double>(ml) / static_cast<double>(ground_truth.size());
  }
  return report;
}

void SynthConfig::validate() const {
  if (n_identities < 1) throw ConfigError("n_identities must be >= 1");
  if (n_frames < 1) throw ConfigError("n_frames must be >= 1");
  if (!(image_width > 0.0) || !(image_height > 0.0))
    throw ConfigError("image dimensions must be positive");
  if (!(fps > 0.0)) throw ConfigError("fps must be positive");
  if (!(min_speed >= 0.0) || !(max_speed >= min_speed))
    throw ConfigError("need 0 <= min_speed <= max_speed");
  if (!(box_width > 0.0) || !(box_height > 0.0))
    throw ConfigError("box dimensions must be positive");
  if (!(size_scale_min > 0.0) || !(size_scale_max >= size_scale_min))
    throw ConfigError("need 0 < size_scale_min <= size_scale_max");
  if (!(jitter_sigma >= 0.0) || !(box_noise_sigma >= 0.0))
    throw ConfigError("noise sigmas must be >= 0");
  for (const SynthOcclusion& o : occlusions) {
    if (o.identity < 1 || o.identity > n_identities)
      throw ConfigError("occlusion references unknown identity " + std::to_string(o.identity));
    if (o.first_frame < 1 || o.last_frame > n_frames || o.first_frame > o.last_frame)
      throw ConfigError("occlusion window outside [1, n_frames]");
  }
}

namespace {

struct SynthIdentity {
  double w = 0.0, h = 0.0;
  double cx0 = 0.0, cy0 = 0.0;
  double vx = 0.0, vy = 0.0;
  std::vector<std::pair<double, double>> centers;  // per frame, 0-based
};

// Start interval so the whole linear path keeps the box inside the image
// with `pad` slack for jitter.
std::pair<double, double> start_range(double extent, double image, double v,
                                      int n_frames, double pad) {
  const double travel = v * static_cast<double>(n_frames - 1);
  const double lo = 0.5 * extent + pad - std::min(0.0, travel);
  const double hi = image - 0.5 * extent - pad - std::max(0.0, travel);
  return {lo, hi};
}

}  // namespace

SynthResult synth_generate(const SynthConfig& cfg) {
  cfg.validate();
  SeededRng rng(cfg.rng_seed);

  std::vector<std::vector<std::pair<int, int>>> occluded(
      static_cast<std::size_t>(cfg.n_identities));
  for (const SynthOcclusion& o : cfg.occlusions)
    occluded[static_cast<std::size_t>(o.identity - 1)].emplace_back(o.first_frame,
                                                                    o.last_frame);
  const auto visible = [&](int ident, int frame) {
    for (const auto& [a, b] : occluded[static_cast<std::size_t>(ident)])
      if (frame >= a && frame <= b) return false;
    return true;
  };

  const double pad = 4.0 * (cfg.jitter_sigma + cfg.box_noise_sigma) + 1.0;
  std::vector<SynthIdentity> idents(static_cast<std::size_t>(cfg.n_identities));
  for (int i = 0; i < cfg.n_identities; ++i) {
    SynthIdentity& ident = idents[static_cast<std::size_t>(i)];
    const double scale = rng.uniform_real(cfg.size_scale_min, cfg.size_scale_max);
    ident.w = cfg.box_width * scale;
    ident.h = cfg.box_height * scale;
    const double speed = rng.uniform_real(cfg.min_speed, cfg.max_speed);
    if (cfg.layout == SynthLayout::Lanes) {
      ident.vx = (i % 2 == 0 ? 1.0 : -1.0) * speed;
      ident.vy = 0.0;
      ident.cy0 = (static_cast<double>(i) + 0.5) * cfg.image_height /
                  static_cast<double>(cfg.n_identities);
      const auto [lo, hi] =
          start_range(ident.w, cfg.image_width, ident.vx, cfg.n_frames, pad);
      if (lo > hi)
        throw ConfigError("image too narrow for the configured speed and duration");
      ident.cx0 = rng.uniform_real(lo, hi);
    } else {
      const double angle = rng.uniform_real(0.0, 6.283185307179586);
      ident.vx = speed * std::cos(angle);
      ident.vy = speed * std::sin(angle);
      const auto [xlo, xhi] =
          start_range(ident.w, cfg.image_width, ident.vx, cfg.n_frames, pad);
      const auto [ylo, yhi] =
          start_range(ident.h, cfg.image_height, ident.vy, cfg.n_frames, pad);
      if (xlo > xhi || ylo > yhi)
        throw ConfigError("image too small for the configured speed and duration");
      ident.cx0 = rng.uniform_real(xlo, xhi);
      ident.cy0 = rng.uniform_real(ylo, yhi);
    }
  }

  for (SynthIdentity& ident : idents) {
    ident.centers.reserve(static_cast<std::size_t>(cfg.n_frames));
    for (int f = 1; f <= cfg.n_frames; ++f) {
      double cx = ident.cx0 + ident.vx * static_cast<double>(f - 1);
      double cy = ident.cy0 + ident.vy * static_cast<double>(f - 1);
      if (cfg.jitter_sigma > 0.0) {
        cx += rng.normal(0.0, cfg.jitter_sigma);
        cy += rng.normal(0.0, cfg.jitter_sigma);
      }
      cx = std::clamp(cx, 0.5 * ident.w, cfg.image_width - 0.5 * ident.w);
      cy = std::clamp(cy, 0.5 * ident.h, cfg.image_height - 0.5 * ident.h);
      ident.centers.emplace_back(cx, cy);
    }
  }

  SynthResult result;
  for (int i = 0; i < cfg.n_identities; ++i) {
    const SynthIdentity& ident = idents[static_cast<std::size_t>(i)];
    std::vector<Detection> dets;
    for (int f = 1; f <= cfg.n_frames; ++f) {
      if (!visible(i, f)) continue;
      const auto& [cx, cy] = ident.centers[static_cast<std::size_t>(f - 1)];
      Detection d;
      d.frame = f;
      d.box = {cx - 0.5 * ident.w, cy - 0.5 * ident.h, ident.w, ident.h};
      d.gt_id = i + 1;
      dets.push_back(std::move(d));
    }
    if (!dets.empty()) result.ground_truth.emplace_back(i + 1, std::move(dets));
  }

  for (int f = 1; f <= cfg.n_frames; ++f) {
    for (int i = 0; i < cfg.n_identities; ++i) {
      if (!visible(i, f)) continue;
      const SynthIdentity& ident = idents[static_cast<std::size_t>(i)];
      const auto& [cx, cy] = ident.centers[static_cast<std::size_t>(f - 1)];
      Detection d;
      d.det_id = static_cast<int>(result.detections.size());
      d.frame = f;
      d.box = {cx - 0.5 * ident.w, cy - 0.5 * ident.h, ident.w, ident.h};
      if (cfg.box_noise_sigma > 0.0) {
        d.box.x += rng.normal(0.0, cfg.box_noise_sigma);
        d.box.y += rng.normal(0.0, cfg.box_noise_sigma);
        d.box.w = std::max(1.0, d.box.w + rng.normal(0.0, cfg.box_noise_sigma));
        d.box.h = std::max(1.0, d.box.h + rng.normal(0.0, cfg.box_noise_sigma));
      }
      result.detections.push_back(std::move(d));
    }
  }
  return result;
}

SynthConfig read_synth_config(std::istream& in) {
  SynthConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto s = detail::trim(line);
    if (s.empty() || s.front() == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw MalformedLineError(lineno, "expected key=value");
    const auto key = detail::trim(s.substr(0, eq));
    const auto value = detail::trim(s.substr(eq + 1));

    const auto as_int = [&](int& target) {
      const auto v = detail::parse_int(value);
      if (!v) throw MalformedLineError(lineno, std::string("bad integer for ") + std::string(key));
      target = static_cast<int>(*v);
    };
    const auto as_double = [&](double& target) {
      const auto v = detail::parse_double(value);
      if (!v) throw MalformedLineError(lineno, std::string("bad number for ") + std::string(key));
      target = *v;
    };

    if (key == "n_identities") as_int(cfg.n_identities);
    else if (key == "n_frames") as_int(cfg.n_frames);
    else if (key == "image_width") as_double(cfg.image_width);
    else if (key == "image_height") as_double(cfg.image_height);
    else if (key == "fps") as_double(cfg.fps);
    else if (key == "min_speed") as_double(cfg.min_speed);
    else if (key == "max_speed") as_double(cfg.max_speed);
    else if (key == "box_width") as_double(cfg.box_width);
    else if (key == "box_height") as_double(cfg.box_height);
    else if (key == "size_scale_min") as_double(cfg.size_scale_min);
    else if (key == "size_scale_max") as_double(cfg.size_scale_max);
    else if (key == "jitter_sigma") as_double(cfg.jitter_sigma);
    else if (key == "box_noise_sigma") as_double(cfg.box_noise_sigma);
    else if (key == "rng_seed") {
      const auto v = detail::parse_int(value);
      if (!v || *v < 0) throw MalformedLineError(lineno, "bad rng_seed");
      cfg.rng_seed = static_cast<std::uint64_t>(*v);
    } else if (key == "layout") {
      if (value == "random") cfg.layout = SynthLayout::Random;
      else if (value == "lanes") cfg.layout = SynthLayout::Lanes;
      else throw MalformedLineError(lineno, "layout must be 'random' or 'lanes'");
    } else if (key == "occlusions") {
      if (value.empty()) continue;
      for (const auto entry : detail::split(value, ';')) {
        const auto colon = entry.find(':');
        const auto dash = entry.find('-', colon == std::string_view::npos ? 0 : colon);
        if (colon == std::string_view::npos || dash == std::string_view::npos)
          throw MalformedLineError(lineno, "occlusion entries look like 'id:first-last'");
        const auto ident = detail::parse_int(entry.substr(0, colon));
        const auto first = detail::parse_int(entry.substr(colon + 1, dash - colon - 1));
        const auto last = detail::parse_int(entry.substr(dash + 1));
        if (!ident || !first || !last)
          throw MalformedLineError(lineno, "bad occlusion entry");
        cfg.occlusions.push_back({static_cast<int>(*ident), static_cast<int>(*first),
                                  static_cast<int>(*last)});
      }
    } else {
      throw MalformedLineError(lineno, std::string("unknown key '") + std::string(key) + "'");
    }
  }
  cfg.validate();
  return cfg;
}

}  // namespace trackmc
