#include "trackmc/edgegen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "format_util.hpp"
#include "parse_util.hpp"

namespace trackmc {

MotionStats compute_motion_stats(std::span<const Tracklet> tracks,
                                 const SequenceMeta& meta) {
  if (!(meta.fps > 0.0)) throw std::invalid_argument("fps must be positive");
  double sum = 0.0, sum_sq = 0.0;
  std::int64_t count = 0;
  for (const Tracklet& t : tracks) {
    const auto& dets = t.detections();
    for (std::size_t i = 1; i < dets.size(); ++i) {
      const Detection& prev = dets[i - 1];
      const Detection& cur = dets[i];
      const double dist = std::hypot(cur.box.center_x() - prev.box.center_x(),
                                     cur.box.center_y() - prev.box.center_y());
      const double s = dist / prev.box.diagonal() * meta.fps;
      sum += s;
      sum_sq += s * s;
      ++count;
    }
  }
  if (count == 0)
    throw NoSamplesError("no track has two consecutive detections");
  MotionStats stats;
  MotionClassStats& cls = stats.for_camera(meta.moving_camera);
  cls.sample_count = count;
  cls.mean_disp = sum / static_cast<double>(count);
  const double var = std::max(0.0, sum_sq / static_cast<double>(count) -
                                       cls.mean_disp * cls.mean_disp);
  cls.std_disp = std::sqrt(var);
  return stats;
}

namespace {

MotionClassStats pool(const MotionClassStats& a, const MotionClassStats& b) {
  if (a.sample_count == 0) return b;
  if (b.sample_count == 0) return a;
  MotionClassStats out;
  out.sample_count = a.sample_count + b.sample_count;
  const double wa = static_cast<double>(a.sample_count);
  const double wb = static_cast<double>(b.sample_count);
  out.mean_disp = (wa * a.mean_disp + wb * b.mean_disp) / (wa + wb);
  const double second_a = a.std_disp * a.std_disp + a.mean_disp * a.mean_disp;
  const double second_b = b.std_disp * b.std_disp + b.mean_disp * b.mean_disp;
  const double second = (wa * second_a + wb * second_b) / (wa + wb);
  out.std_disp = std::sqrt(std::max(0.0, second - out.mean_disp * out.mean_disp));
  return out;
}

}  // namespace

MotionStats merge_motion_stats(const MotionStats& a, const MotionStats& b) {
  MotionStats out;
  out.static_camera = pool(a.static_camera, b.static_camera);
  out.moving_camera = pool(a.moving_camera, b.moving_camera);
  return out;
}

double feasible_radius(const Detection& last, int gap, const MotionStats& stats,
                       const SequenceMeta& meta, double inflation) {
  if (gap < 1) throw std::invalid_argument("gap must be >= 1");
  if (!(inflation >= 0.0)) throw std::invalid_argument("inflation must be >= 0");
  if (!(meta.fps > 0.0)) throw std::invalid_argument("fps must be positive");
  const MotionClassStats& cls = stats.for_camera(meta.moving_camera);
  if (cls.sample_count == 0)
    throw NoStatsError(std::string("no displacement samples for the ") +
                       (meta.moving_camera ? "moving" : "static") + " camera class");
  const double per_second = cls.mean_disp + 3.0 * cls.std_disp;
  return inflation * per_second * (static_cast<double>(gap) / meta.fps) *
         last.box.diagonal();
}

std::vector<EdgeCandidate> candidate_edges(std::span<const Tracklet> tracklets,
                                           const GapLimit& gap_limit,
                                           const MotionStats* stats,
                                           const SequenceMeta& meta,
                                           double inflation) {
  std::vector<EdgeCandidate> out;
  for (const Tracklet& u : tracklets) {
    for (const Tracklet& v : tracklets) {
      if (&u == &v || !precedes(u, v)) continue;
      const int gap = v.first_frame() - u.last_frame();
      if (gap > gap_limit(u, v)) continue;
      if (stats != nullptr) {
        const double radius = feasible_radius(u.last(), gap, *stats, meta, inflation);
        const double dist = std::hypot(
            v.first().box.center_x() - u.last().box.center_x(),
            v.first().box.center_y() - u.last().box.center_y());
        if (dist > radius) continue;
      }
      out.push_back({u.id(), v.id(), gap});
    }
  }
  std::sort(out.begin(), out.end(), [](const EdgeCandidate& a, const EdgeCandidate& b) {
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  return out;
}

void write_motion_stats(std::ostream& out, const MotionStats& stats) {
  const auto row = [&](const char* name, const MotionClassStats& cls) {
    out << name << ' ' << detail::format_double(cls.mean_disp) << ' '
        << detail::format_double(cls.std_disp) << ' ' << cls.sample_count << '\n';
  };
  row("static", stats.static_camera);
  row("moving", stats.moving_camera);
}

MotionStats read_motion_stats(std::istream& in) {
  MotionStats stats;
  bool saw_static = false, saw_moving = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto s = detail::trim(line);
    if (s.empty() || s.front() == '#') continue;
    const auto fields = detail::split(s, ' ');
    if (fields.size() != 4)
      throw MalformedLineError(lineno, "expected '<class> <mean> <std> <count>'");
    const auto mean = detail::parse_double(fields[1]);
    const auto sd = detail::parse_double(fields[2]);
    const auto count = detail::parse_int(fields[3]);
    if (!mean || !sd || !count || *count < 0 || !(*sd >= 0.0))
      throw MalformedLineError(lineno, "bad statistics values");
    MotionClassStats cls{*mean, *sd, *count};
    if (fields[0] == "static" && !saw_static) {
      stats.static_camera = cls;
      saw_static = true;
    } else if (fields[0] == "moving" && !saw_moving) {
      stats.moving_camera = cls;
      saw_moving = true;
    } else {
      throw MalformedLineError(lineno, "unknown or repeated camera class");
    }
  }
  if (!saw_static || !saw_moving)
    throw MalformedLineError(lineno, "file must define both camera classes");
  return stats;
}

}  // namespace trackmc
