#pragma once

// Shared fixtures for the unit and acceptance suites.

#include <optional>
#include <vector>

#include "trackmc/core.hpp"
#include "trackmc/multicut.hpp"
#include "trackmc/rng.hpp"

namespace trackmc::testsupport {

// Straight-line tracklet: n detections starting at first_frame, the box
// moving (dx, dy) per frame.
inline Tracklet make_track(int id, int first_frame, int n, double x0, double y0,
                           double dx = 0.0, double dy = 0.0, double w = 10.0,
                           double h = 10.0, std::optional<int> gt_id = std::nullopt) {
  std::vector<Detection> dets;
  dets.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Detection d;
    d.det_id = id * 1000 + k;
    d.frame = first_frame + k;
    d.box = {x0 + k * dx, y0 + k * dy, w, h};
    d.gt_id = gt_id;
    dets.push_back(std::move(d));
  }
  return Tracklet(id, std::move(dets));
}

// Small random multicut instance: 3..7 vertices, edge probability 0.7,
// costs uniform in [-3, 3], up to 3 random constraints.
inline Graph random_instance(SeededRng& rng) {
  const int n = static_cast<int>(rng.uniform_int(3, 7));
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < 0.7) g.add_edge(u, v, rng.uniform_real(-3.0, 3.0));
  const int n_constraints = static_cast<int>(rng.uniform_int(0, 3));
  for (int k = 0; k < n_constraints; ++k) {
    const int u = static_cast<int>(rng.uniform_int(0, n - 1));
    const int v = static_cast<int>(rng.uniform_int(0, n - 1));
    if (u != v) g.add_constraint(u, v);
  }
  return g;
}

}  // namespace trackmc::testsupport
