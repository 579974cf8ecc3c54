#include <sstream>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "trackmc/affinity.hpp"
#include "trackmc/hierarchy.hpp"
#include "trackmc/motio.hpp"

using namespace trackmc;
using testsupport::make_track;

namespace {

SequenceMeta desk_meta() {
  SequenceMeta meta;
  meta.image_width = 1920;
  meta.image_height = 1080;
  meta.fps = 30.0;
  return meta;
}

Detection det(int frame, double x, double y, int gt) {
  Detection d;
  d.frame = frame;
  d.box = {x, y, 10.0, 10.0};
  d.gt_id = gt;
  return d;
}

}  // namespace

TEST_CASE("gap budget per phase") {
  const Schedule s;
  CHECK(max_gap(s, 1, Phase::Fixed, 1, 1) == 1);
  CHECK(max_gap(s, 2, Phase::Fixed, 1, 1) == 2);
  CHECK(max_gap(s, 3, Phase::Fixed, 9, 9) == 4);
  CHECK(max_gap(s, 9, Phase::Fixed, 1, 1) == 4);  // stays at the last entry
  CHECK(max_gap(s, 4, Phase::PhaseA, 5, 7) == 20);
  CHECK(max_gap(s, 4, Phase::PhaseA, 7, 5) == 20);
  CHECK(max_gap(s, 9, Phase::PhaseB, 1, 1) == 6);
  CHECK(max_gap(s, 9, Phase::Converged, 5, 5) == 0);
  CHECK_THROWS_AS(max_gap(s, 0, Phase::Fixed, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(max_gap(s, 1, Phase::Fixed, 0, 1), std::invalid_argument);

  Schedule bad;
  bad.fixed_gaps = {2, 1};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.fixed_gaps = {};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  Schedule swapped;
  swapped.phase_a_multiplier = 7;  // above phase_b
  CHECK_THROWS_AS(swapped.validate(), std::invalid_argument);
}

TEST_CASE("phase names for logs") {
  CHECK(phase_name(Phase::Fixed) == "fixed");
  CHECK(phase_name(Phase::PhaseA) == "phase_a");
  CHECK(phase_name(Phase::PhaseB) == "phase_b");
  CHECK(phase_name(Phase::Converged) == "converged");
}

TEST_CASE("frame-sharing tracklets become cannot-link pairs") {
  const auto a = make_track(5, 1, 3, 0.0, 0.0);    // frames 1..3
  const auto b = make_track(7, 3, 3, 50.0, 0.0);   // frames 3..5, shares 3 with a
  const auto c = make_track(9, 6, 2, 0.0, 0.0);    // frames 6..7, disjoint
  const auto pairs = conflict_constraints(std::vector<Tracklet>{a, b, c});
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == std::pair<int, int>{5, 7});
}

TEST_CASE("initial state: one singleton per detection") {
  std::vector<Detection> dets{det(2, 0, 0, 1), det(1, 5, 5, 2)};
  const auto state = init_state(dets);
  CHECK(state.tracklets.size() == 2);
  CHECK(state.iteration == 0);
  CHECK(state.phase == Phase::Fixed);
  CHECK(state.total_detections == 2);
  CHECK(state.next_tracklet_id == 2);
  CHECK(state.tracklets[0].id() == 0);
  CHECK(state.tracklets[0].first_frame() == 2);  // ids follow input order
  CHECK(state.tracklets[1].id() == 1);
}

TEST_CASE("graph construction: costs from the scorer, constraints from frames") {
  const auto meta = desk_meta();
  std::vector<Detection> dets{det(1, 0, 0, 1), det(1, 500, 0, 2), det(2, 0, 0, 1)};
  const auto state = init_state(dets);
  const OracleScorer scorer(OracleScorerConfig{});  // delta 0.01

  const auto g = build_graph(state, scorer, nullptr, Schedule{}, meta);
  CHECK(g.n_vertices() == 3);
  REQUIRE(g.edges().size() == 2);
  REQUIRE(g.constraints().size() == 1);
  CHECK(g.constrained(0, 1));
  // log(0.99/0.01) for the same identity, the negation for the clash
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(1, 2));
  for (const auto& e : g.edges()) {
    const double expect = (e.u == 0) ? 4.59511985013459 : -4.59511985013459;
    CHECK(e.cost == doctest::Approx(expect).epsilon(1e-12));
  }

  SUBCASE("the first iteration only looks one frame ahead") {
    std::vector<Detection> spread{det(1, 0, 0, 1), det(3, 0, 0, 1)};
    const auto s2 = init_state(spread);
    const auto g2 = build_graph(s2, scorer, nullptr, Schedule{}, meta);
    CHECK(g2.edges().empty());  // gap 2 exceeds the iteration-1 budget
  }
}

TEST_CASE("full run recovers two well-separated identities") {
  const auto meta = desk_meta();
  std::vector<Detection> dets;
  for (int f = 1; f <= 6; ++f) {
    dets.push_back(det(f, 0.0, 0.0, 1));
    dets.push_back(det(f, 500.0, 0.0, 2));
  }
  const OracleScorer scorer(OracleScorerConfig{});

  const auto result = run(dets, scorer, nullptr, Schedule{}, meta);
  REQUIRE(result.tracks.size() == 2);
  CHECK(result.tracks[0].id() == 1);  // final ids are dense, ordered by start
  CHECK(result.tracks[1].id() == 2);
  CHECK(result.tracks[0].length() == 6);
  CHECK(result.tracks[1].length() == 6);

  // evaluation against the identity partition is perfect
  std::vector<Tracklet> gt{
      make_track(1, 1, 6, 0.0, 0.0, 0.0, 0.0, 10.0, 10.0, 1),
      make_track(2, 1, 6, 500.0, 0.0, 0.0, 0.0, 10.0, 10.0, 2)};
  const auto report = clear_metrics(result.tracks, gt);
  CHECK(report.mota == doctest::Approx(1.0));
  CHECK(report.id_switches == 0);

  SUBCASE("history records a contraction then convergence") {
    REQUIRE(!result.history.empty());
    CHECK(result.history.front().iteration == 1);
    CHECK(result.history.front().n_vertices == 12);
    CHECK(result.history.front().phase == Phase::Fixed);
    CHECK(result.history.back().n_merges == 0);
    // bound: initial vertices + fixed stages + one no-merge pass per phase
    CHECK(result.history.size() <= 12 + 3 + 2);
    for (std::size_t i = 0; i < result.history.size(); ++i) {
      CHECK(result.history[i].iteration == static_cast<int>(i) + 1);
      if (i > 0) {
        CHECK(result.history[i].phase >= result.history[i - 1].phase);
        CHECK(result.history[i].n_vertices <= result.history[i - 1].n_vertices);
      }
    }
  }

  SUBCASE("runs are deterministic") {
    const auto again = run(dets, scorer, nullptr, Schedule{}, meta);
    REQUIRE(again.tracks.size() == result.tracks.size());
    for (std::size_t i = 0; i < result.tracks.size(); ++i) {
      CHECK(again.tracks[i].id() == result.tracks[i].id());
      REQUIRE(again.tracks[i].length() == result.tracks[i].length());
      for (int k = 0; k < result.tracks[i].length(); ++k) {
        CHECK(again.tracks[i].detections()[k].frame ==
              result.tracks[i].detections()[k].frame);
        CHECK(again.tracks[i].detections()[k].box.x ==
              result.tracks[i].detections()[k].box.x);
      }
    }
    REQUIRE(again.history.size() == result.history.size());
    for (std::size_t i = 0; i < result.history.size(); ++i)
      CHECK(again.history[i].n_vertices == result.history[i].n_vertices);
  }
}

TEST_CASE("degenerate inputs") {
  const auto meta = desk_meta();
  const OracleScorer scorer(OracleScorerConfig{});
  const auto empty = run({}, scorer, nullptr, Schedule{}, meta);
  CHECK(empty.tracks.empty());
  CHECK(empty.history.empty());

  const auto single = run({det(4, 0, 0, 1)}, scorer, nullptr, Schedule{}, meta);
  REQUIRE(single.tracks.size() == 1);
  CHECK(single.tracks[0].id() == 1);
  CHECK(single.tracks[0].first_frame() == 4);
}

TEST_CASE("history csv layout") {
  std::vector<IterationRecord> history(2);
  history[0] = {1, Phase::Fixed, 10, 9, 4, 0.25};
  history[1] = {2, Phase::PhaseA, 6, 5, 0, 0.5};
  std::ostringstream out;
  write_history_csv(out, history);
  CHECK(out.str() ==
        "iteration,phase,n_vertices,n_edges,n_merges,wall_ms\n"
        "1,fixed,10,9,4,0.25\n"
        "2,phase_a,6,5,0,0.5\n");
}
