#include <map>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "trackmc/errors.hpp"
#include "trackmc/rng.hpp"
#include "trackmc/samplegen.hpp"

using namespace trackmc;
using testsupport::make_track;

namespace {

SequenceMeta small_meta() {
  SequenceMeta meta;
  meta.image_width = 1280;
  meta.image_height = 720;
  meta.fps = 30.0;
  return meta;
}

}  // namespace

TEST_CASE("quadrants split the image with midlines going right and down") {
  const auto meta = small_meta();
  CHECK(quadrant_of(10, 10, meta) == 0);
  CHECK(quadrant_of(1000, 10, meta) == 1);
  CHECK(quadrant_of(10, 700, meta) == 2);
  CHECK(quadrant_of(1000, 700, meta) == 3);
  CHECK(quadrant_of(640, 10, meta) == 1);   // on the vertical midline
  CHECK(quadrant_of(10, 360, meta) == 2);   // on the horizontal midline
  CHECK(quadrant_of(640, 360, meta) == 3);
}

TEST_CASE("positive samples split one track around a gap") {
  const auto track = make_track(1, 1, 10, 0.0, 0.0, 5.0, 0.0, 10.0, 10.0, 7);
  SeededRng rng(3);
  for (int draw = 0; draw < 20; ++draw) {
    const auto s = gen_positive(track, 2, 1, rng);
    CHECK(s.positive);
    CHECK(s.strategy == SampleStrategy::Split);
    CHECK(s.gap == 2);  // one skipped frame
    CHECK(s.first.length() == 2);
    CHECK(s.second.length() == 2);
    CHECK(s.second.first_frame() - s.first.last_frame() == 2);
    CHECK(s.first.detections()[0].gt_id == 7);
    CHECK(s.second.detections()[0].gt_id == 7);
    CHECK(s.first.first_frame() >= 1);
    CHECK(s.second.last_frame() <= 10);
  }

  SUBCASE("start positions cover the whole admissible range") {
    SeededRng r2(9);
    std::map<int, int> starts;
    for (int draw = 0; draw < 300; ++draw)
      ++starts[gen_positive(track, 2, 1, r2).first.first_frame()];
    CHECK(starts.size() == 6);  // frames 1..6 all admissible
    CHECK(starts.begin()->first == 1);
    CHECK(starts.rbegin()->first == 6);
  }

  SUBCASE("oversized requests throw") {
    SeededRng r3(1);
    CHECK_THROWS_AS(gen_positive(track, 6, 1, r3), TrackTooShortError);
    CHECK_THROWS_AS(gen_positive(track, 11, 0, r3), TrackTooShortError);
    CHECK_NOTHROW(gen_positive(track, 5, 0, r3));
  }
}

TEST_CASE("negative samples pick partners at the continuation frame") {
  const auto meta = small_meta();
  // anchor identity 1 in the top-left, partner 2 nearby, partner 3 far
  // bottom-right
  const auto a = make_track(0, 1, 10, 100.0, 100.0, 0.0, 0.0, 10.0, 10.0, 1);
  const auto b = make_track(1, 1, 10, 120.0, 100.0, 0.0, 0.0, 10.0, 10.0, 2);
  const auto c = make_track(2, 1, 10, 1000.0, 600.0, 0.0, 0.0, 10.0, 10.0, 3);
  const std::vector<Tracklet> tracks{a, b, c};

  // anchor segment: frames 3..4 of track a; skip 1 -> reference frame 6
  const Tracklet segment(0, {a.detections()[2], a.detections()[3]});
  SeededRng rng(5);

  const auto nearest = gen_negative_nearest(tracks, 0, segment, 2, 1, meta, rng);
  CHECK_FALSE(nearest.positive);
  CHECK(nearest.strategy == SampleStrategy::Nearest);
  CHECK(nearest.gap == 2);
  CHECK(nearest.second.detections()[0].gt_id == 2);
  CHECK(nearest.second.first_frame() == 6);
  CHECK(nearest.second.length() == 2);

  const auto same = gen_negative_same_quadrant(tracks, 0, segment, 2, 1, meta, rng);
  CHECK(same.strategy == SampleStrategy::SameQuadrant);
  CHECK(same.second.detections()[0].gt_id == 2);  // only track b shares quadrant 0

  const auto other = gen_negative_other_quadrant(tracks, 0, segment, 2, 1, meta, rng);
  CHECK(other.strategy == SampleStrategy::OtherQuadrant);
  CHECK(other.second.detections()[0].gt_id == 3);

  SUBCASE("no continuation detection, no sample") {
    // a segment ending at the anchor's last frame has no reference point
    const Tracklet tail(0, {a.detections()[8], a.detections()[9]});
    SeededRng r2(1);
    CHECK_THROWS_AS(gen_negative_nearest(tracks, 0, tail, 2, 1, meta, r2),
                    NoCandidateError);
  }

  SUBCASE("no partner in the requested quadrant") {
    const std::vector<Tracklet> two{a, b};  // nobody outside quadrant 0
    SeededRng r3(1);
    CHECK_THROWS_AS(gen_negative_other_quadrant(two, 0, segment, 2, 1, meta, r3),
                    NoCandidateError);
  }
}

TEST_CASE("dataset generation hits the configured mix exactly") {
  const auto meta = small_meta();
  // four long identities: two in the top-left quadrant, two in the
  // bottom-right, so every negative strategy always has a candidate
  std::vector<Tracklet> tracks{
      make_track(0, 1, 60, 100.0, 100.0, 1.0, 0.0, 10.0, 10.0, 1),
      make_track(1, 1, 60, 300.0, 100.0, 1.0, 0.0, 10.0, 10.0, 2),
      make_track(2, 1, 60, 900.0, 500.0, 1.0, 0.0, 10.0, 10.0, 3),
      make_track(3, 1, 60, 1100.0, 500.0, 1.0, 0.0, 10.0, 10.0, 4)};

  GenConfig cfg;
  cfg.n_samples = 200;
  cfg.min_len = 1;
  cfg.max_len = 4;
  cfg.gap_factor_max = 2.0;
  cfg.rng_seed = 11;

  const auto [samples, report] = gen_dataset(tracks, cfg, meta);
  REQUIRE(samples.size() == 200);
  CHECK(report.n_positive == 100);
  CHECK(report.n_nearest == 50);
  CHECK(report.n_same_quadrant == 25);
  CHECK(report.n_other_quadrant == 25);

  std::map<SampleStrategy, int> counted;
  for (const auto& s : samples) {
    ++counted[s.strategy];
    CHECK(s.positive == (s.strategy == SampleStrategy::Split));
    CHECK(s.gap >= 1);
    CHECK(s.first.length() == s.second.length());
    CHECK(s.first.last_frame() < s.second.first_frame());
    const int gt_first = *s.first.detections()[0].gt_id;
    const int gt_second = *s.second.detections()[0].gt_id;
    CHECK((gt_first == gt_second) == s.positive);
  }
  CHECK(counted[SampleStrategy::Split] == 100);
  CHECK(counted[SampleStrategy::Nearest] == 50);
  CHECK(counted[SampleStrategy::SameQuadrant] == 25);
  CHECK(counted[SampleStrategy::OtherQuadrant] == 25);

  SUBCASE("the deck order is a pure function of the seed") {
    const auto [again, report2] = gen_dataset(tracks, cfg, meta);
    REQUIRE(again.size() == samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      CHECK(again[i].strategy == samples[i].strategy);
      CHECK(again[i].first.first_frame() == samples[i].first.first_frame());
      CHECK(again[i].second.first_frame() == samples[i].second.first_frame());
    }

    auto reseeded = cfg;
    reseeded.rng_seed = 12;
    const auto [other, report3] = gen_dataset(tracks, reseeded, meta);
    bool any_difference = false;
    for (std::size_t i = 0; i < samples.size(); ++i)
      any_difference = any_difference ||
                       other[i].strategy != samples[i].strategy ||
                       other[i].first.first_frame() != samples[i].first.first_frame();
    CHECK(any_difference);
  }
}

TEST_CASE("dataset generation fails loudly when a strategy cannot be served") {
  const auto meta = small_meta();
  const std::vector<Tracklet> lonely{
      make_track(0, 1, 60, 100.0, 100.0, 1.0, 0.0, 10.0, 10.0, 1)};
  GenConfig cfg;
  cfg.n_samples = 8;
  cfg.max_len = 2;
  cfg.max_retries = 50;
  CHECK_THROWS_AS(gen_dataset(lonely, cfg, meta), ExhaustedError);

  GenConfig bad;
  bad.n_samples = 4;
  bad.mix_nearest = 0.9;  // mix no longer sums to 1
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(gen_dataset(lonely, bad, meta), std::invalid_argument);

  CHECK_THROWS_AS(gen_dataset(std::vector<Tracklet>{}, cfg, meta), ExhaustedError);
}

TEST_CASE("jsonl rows carry label, strategy, gap, and both segments") {
  TrackletPairSample s{
      make_track(1, 1, 1, 0.0, 0.0, 0.0, 0.0, 10.0, 10.0, 1),
      make_track(2, 3, 1, 5.0, 0.0, 0.0, 0.0, 10.0, 10.0, 1), true,
      SampleStrategy::Split, 2};
  std::ostringstream out;
  write_samples_jsonl(out, std::vector<TrackletPairSample>{s});
  CHECK(out.str() ==
        "{\"label\":\"positive\",\"strategy\":\"split\",\"gap\":2,"
        "\"first\":[{\"frame\":1,\"box\":[0.0,0.0,10.0,10.0],\"gt_id\":1}],"
        "\"second\":[{\"frame\":3,\"box\":[5.0,0.0,10.0,10.0],\"gt_id\":1}]}\n");
}
