#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "trackmc/core.hpp"
#include "trackmc/errors.hpp"

using namespace trackmc;
using testsupport::make_track;

TEST_CASE("tracklet construction sorts and validates") {
  std::vector<Detection> dets;
  for (int f : {3, 1, 2}) {
    Detection d;
    d.frame = f;
    d.box = {double(f), 0.0, 10.0, 10.0};
    dets.push_back(d);
  }
  const Tracklet t(7, dets);
  CHECK(t.id() == 7);
  CHECK(t.first_frame() == 1);
  CHECK(t.last_frame() == 3);
  CHECK(t.detections()[0].box.x == doctest::Approx(1.0));
  CHECK(t.length() == 3);

  CHECK_THROWS_AS(Tracklet(1, {}), EmptyTrackletError);

  auto dup = dets;
  dup.push_back(dets[0]);
  CHECK_THROWS_AS(Tracklet(1, dup), DuplicateFrameError);

  Detection bad;
  bad.frame = 1;
  bad.box = {0.0, 0.0, -1.0, 10.0};
  CHECK_THROWS_AS(Tracklet(1, {bad}), InvalidDetectionError);

  Detection frame0;
  frame0.frame = 0;
  frame0.box = {0.0, 0.0, 10.0, 10.0};
  CHECK_THROWS_AS(Tracklet(1, {frame0}), InvalidDetectionError);
}

TEST_CASE("index_at_frame finds only present frames") {
  const auto t = make_track(1, 5, 3, 0.0, 0.0);
  CHECK(t.index_at_frame(5) == 0);
  CHECK(t.index_at_frame(7) == 2);
  CHECK_FALSE(t.index_at_frame(4).has_value());
  CHECK_FALSE(t.index_at_frame(8).has_value());
}

TEST_CASE("precedes requires a strict frame gap") {
  const auto a = make_track(1, 1, 3, 0.0, 0.0);   // frames 1..3
  const auto b = make_track(2, 4, 2, 0.0, 0.0);   // frames 4..5
  const auto c = make_track(3, 3, 2, 0.0, 0.0);   // frames 3..4, touches a
  CHECK(precedes(a, b));
  CHECK_FALSE(precedes(b, a));
  CHECK_FALSE(precedes(a, c));
  CHECK_FALSE(precedes(c, a));
  CHECK_FALSE(precedes(a, a));
}

TEST_CASE("prune_pair keeps the facing ends") {
  const auto a = make_track(1, 1, 5, 0.0, 0.0, 1.0);   // frames 1..5
  const auto b = make_track(2, 10, 3, 50.0, 0.0, 1.0); // frames 10..12

  const auto [pa, pb] = prune_pair(a, b, 20);
  CHECK(pa.length() == 3);
  CHECK(pb.length() == 3);
  CHECK(pa.id() == 1);
  CHECK(pb.id() == 2);
  CHECK(pa.first_frame() == 3);  // last 3 of a
  CHECK(pa.last_frame() == 5);
  CHECK(pb.first_frame() == 10); // first 3 of b
  CHECK(pb.last_frame() == 12);

  const auto [qa, qb] = prune_pair(a, b, 2);
  CHECK(qa.length() == 2);
  CHECK(qa.first_frame() == 4);
  CHECK(qb.last_frame() == 11);

  CHECK_THROWS_AS(prune_pair(b, a, 3), NotPrecedingError);
}

TEST_CASE("pair_sequence walks inward-out") {
  const auto a = make_track(1, 1, 3, 0.0, 0.0);  // frames 1,2,3
  const auto b = make_track(2, 5, 3, 0.0, 0.0);  // frames 5,6,7
  const auto seq = pair_sequence(a, b);
  REQUIRE(seq.size() == 3);
  // k-th pair: a's k-th detection from the end with b's k-th from the start
  CHECK(seq[0].first.frame == 3);
  CHECK(seq[0].second.frame == 5);
  CHECK(seq[1].first.frame == 2);
  CHECK(seq[1].second.frame == 6);
  CHECK(seq[2].first.frame == 1);
  CHECK(seq[2].second.frame == 7);

  const auto longer = make_track(3, 5, 4, 0.0, 0.0);
  CHECK_THROWS_AS(pair_sequence(a, longer), LengthMismatchError);
  CHECK_THROWS_AS(pair_sequence(b, a), NotPrecedingError);
}

TEST_CASE("normalize_pair measures relative to the earlier tracklet") {
  SequenceMeta meta;
  meta.image_width = 640;
  meta.image_height = 360;
  meta.fps = 10.0;

  std::vector<Detection> da(1), db(1);
  da[0].frame = 1;
  da[0].box = {100.0, 50.0, 32.0, 64.0};
  db[0].frame = 2;
  db[0].box = {120.0, 55.0, 32.0, 64.0};
  const Tracklet a(1, da), b(2, db);

  const auto features = normalize_pair(a, b, meta);
  REQUIRE(features.size() == 1);
  const auto& f = features[0];
  CHECK(f.first.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f.first.y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f.first.w == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(f.first.h == doctest::Approx(0.17777777777777778).epsilon(1e-12));
  CHECK(f.first.t == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f.second.x == doctest::Approx(0.03125).epsilon(1e-12));
  CHECK(f.second.y == doctest::Approx(0.013888888888888888).epsilon(1e-12));
  CHECK(f.second.w == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(f.second.h == doctest::Approx(0.17777777777777778).epsilon(1e-12));
  CHECK(f.second.t == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("merge interleaves and rejects frame collisions") {
  const auto a = make_track(1, 1, 2, 0.0, 0.0);   // frames 1,2
  const auto b = make_track(2, 4, 2, 9.0, 0.0);   // frames 4,5
  const auto m = merge(a, b, 9);
  CHECK(m.id() == 9);
  CHECK(m.length() == 4);
  CHECK(m.first_frame() == 1);
  CHECK(m.last_frame() == 5);

  const auto c = make_track(3, 2, 1, 0.0, 0.0);   // frame 2 collides with a
  CHECK_THROWS_AS(merge(a, c, 10), FrameCollisionError);
}
