#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "test_support.hpp"
#include "trackmc/affinity.hpp"
#include "trackmc/errors.hpp"

using namespace trackmc;
using testsupport::make_track;

TEST_CASE("affinity values are confined to [0, 1]") {
  CHECK(Affinity(0.0).value() == 0.0);
  CHECK(Affinity(1.0).value() == 1.0);
  CHECK_THROWS_AS(Affinity(-0.001), std::invalid_argument);
  CHECK_THROWS_AS(Affinity(1.001), std::invalid_argument);
  CHECK_THROWS_AS(Affinity(std::nan("")), std::invalid_argument);
}

TEST_CASE("cost mapping fixed points") {
  CHECK(cost_from_affinity(Affinity(0.5)) == 0.0);
  // log(0.7 / 0.3) and log(0.9 / 0.1)
  CHECK(cost_from_affinity(Affinity(0.7)) ==
        doctest::Approx(0.8472978603872034).epsilon(1e-14));
  CHECK(cost_from_affinity(Affinity(0.9)) ==
        doctest::Approx(2.1972245773362196).epsilon(1e-14));
  // extremes clamp to the eps shoulder
  CHECK(cost_from_affinity(Affinity(0.0)) == cost_from_affinity(Affinity(1e-6)));
  CHECK(cost_from_affinity(Affinity(1.0)) == cost_from_affinity(Affinity(1.0 - 1e-6)));
  CHECK(cost_from_affinity(Affinity(0.0), 1e-3) ==
        doctest::Approx(std::log(1e-3 / (1.0 - 1e-3))).epsilon(1e-14));
  CHECK_THROWS_AS(cost_from_affinity(Affinity(0.5), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(cost_from_affinity(Affinity(0.5), 0.5), std::invalid_argument);
}

TEST_CASE("cost mapping is antisymmetric, monotone, and invertible") {
  double prev = -1e300;
  for (int i = 0; i <= 1000; ++i) {
    const double x = 1e-6 + (1.0 - 2e-6) * i / 1000.0;
    const double c = cost_from_affinity(Affinity(x));
    CHECK(affinity_from_cost(c).value() == doctest::Approx(x).epsilon(1e-12));
    CHECK(c > prev);
    prev = c;
  }
  // Antisymmetry needs inputs that sum to exactly 1. Every double in [0.5, 1)
  // sits on the 2^-53 grid, so 1 - u is exact there; writing 1 - x for x near
  // the lower edge instead rounds the complement by ~1e-17, which the steep
  // tails blow up to ~1e-11 before the mapping even runs.
  const double lo = std::ldexp(std::ceil(std::ldexp(1e-6, 53)), -53);
  const double hi = 1.0 - lo;
  for (int i = 0; i <= 1000; ++i) {
    // interpolation may overshoot hi by an ulp, which would break the pairing
    const double u = std::min(0.5 + (hi - 0.5) * i / 1000.0, hi);
    const double x = 1.0 - u;
    CHECK(std::abs(cost_from_affinity(Affinity(x)) + cost_from_affinity(Affinity(u))) <
          1e-12);
  }
  // inverse stays stable far outside the clamped range
  CHECK(affinity_from_cost(800.0).value() == doctest::Approx(1.0));
  CHECK(affinity_from_cost(-800.0).value() == doctest::Approx(0.0));
  CHECK_THROWS_AS(affinity_from_cost(std::nan("")), std::invalid_argument);
}

TEST_CASE("oracle scoring follows the labels") {
  const auto a = make_track(1, 1, 3, 0.0, 0.0, 0, 0, 10, 10, 7);
  const auto b = make_track(2, 5, 3, 0.0, 0.0, 0, 0, 10, 10, 7);
  const auto c = make_track(3, 5, 3, 0.0, 0.0, 0, 0, 10, 10, 8);

  OracleScorerConfig cfg;
  cfg.delta = 0.01;
  CHECK(oracle_score(cfg, a, b).value() == doctest::Approx(0.99));
  CHECK(oracle_score(cfg, a, c).value() == doctest::Approx(0.01));

  SUBCASE("flip probability one inverts every pair") {
    cfg.flip_prob = 1.0;
    CHECK(oracle_score(cfg, a, b).value() == doctest::Approx(0.01));
    CHECK(oracle_score(cfg, a, c).value() == doctest::Approx(0.99));
  }

  SUBCASE("flips are a pure function of seed and tracklet ids") {
    cfg.flip_prob = 0.5;
    cfg.rng_seed = 42;
    const double first = oracle_score(cfg, a, b).value();
    for (int i = 0; i < 5; ++i) CHECK(oracle_score(cfg, a, b).value() == first);
    // unordered: the pair (b, a) is the same coin
    const auto a_late = make_track(1, 9, 3, 0.0, 0.0, 0, 0, 10, 10, 7);
    CHECK(oracle_score(cfg, b, a_late).value() == first);
  }

  SUBCASE("strict scoring rejects unlabeled or mixed tracklets") {
    const auto unlabeled = make_track(4, 9, 2, 0.0, 0.0);
    CHECK_THROWS_AS(oracle_score(cfg, a, unlabeled), MissingGroundTruthError);
    std::vector<Detection> mixed;
    for (int f : {9, 10}) {
      Detection d;
      d.frame = f;
      d.box = {0, 0, 10, 10};
      d.gt_id = f;  // two different identities
      mixed.push_back(d);
    }
    CHECK_THROWS_AS(oracle_score(cfg, a, Tracklet(5, mixed)), ImpureTrackletError);
  }
}

TEST_CASE("oracle scorer votes by dominant identity") {
  std::vector<Detection> dets;
  for (int f : {1, 2, 3}) {
    Detection d;
    d.frame = f;
    d.box = {0, 0, 10, 10};
    d.gt_id = f == 3 ? 8 : 7;  // majority identity 7
    dets.push_back(d);
  }
  const Tracklet mixed(1, dets);
  const auto same = make_track(2, 5, 2, 0.0, 0.0, 0, 0, 10, 10, 7);
  const auto other = make_track(3, 5, 2, 0.0, 0.0, 0, 0, 10, 10, 8);

  const OracleScorer scorer(OracleScorerConfig{});
  SequenceMeta meta;
  CHECK(scorer.score(mixed, same, meta).value() == doctest::Approx(0.99));
  CHECK(scorer.score(mixed, other, meta).value() == doctest::Approx(0.01));

  // equal counts resolve toward the smaller identity
  std::vector<Detection> tied;
  for (int f : {1, 2}) {
    Detection d;
    d.frame = f;
    d.box = {0, 0, 10, 10};
    d.gt_id = f == 1 ? 8 : 7;
    tied.push_back(d);
  }
  CHECK(scorer.score(Tracklet(4, tied), same, meta).value() == doctest::Approx(0.99));
}

TEST_CASE("baseline score: overlap for singleton pairs") {
  SequenceMeta meta;
  meta.fps = 10.0;
  std::vector<Detection> da(1), db(1);
  da[0].frame = 1;
  da[0].box = {0.0, 0.0, 2.0, 2.0};
  db[0].frame = 2;
  db[0].box = {1.0, 1.0, 2.0, 2.0};
  const Tracklet a(1, da), b(2, db);
  // overlap 1, union 7
  CHECK(baseline_score(BaselineScorerConfig{}, a, b, meta).value() ==
        doctest::Approx(1.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("baseline score: constant-velocity prediction with gap decay") {
  SequenceMeta meta;
  meta.fps = 10.0;
  // centers advance 10 px per frame; the continuation lands exactly on t_j
  const auto a = make_track(1, 1, 5, 0.0, 0.0, 10.0);
  const auto b = make_track(2, 7, 1, 60.0, 0.0);

  BaselineScorerConfig cfg;
  const double got = baseline_score(cfg, a, b, meta).value();
  // perfect overlap decayed over 0.2 s: exp(-0.5 * 0.2)
  CHECK(got == doctest::Approx(0.9048374180359595).epsilon(1e-12));

  SUBCASE("matching descriptors pull the blend up") {
    auto da = a.detections();
    auto db = b.detections();
    for (auto& d : da) d.descriptor = {1.0, 0.0};
    for (auto& d : db) d.descriptor = {2.0, 0.0};  // same direction
    const Tracklet ad(1, da), bd(2, db);
    // motion^0.5 * appearance^0.5 with appearance 1
    CHECK(baseline_score(cfg, ad, bd, meta).value() ==
          doctest::Approx(0.9512294245007140).epsilon(1e-12));
    BaselineScorerConfig app_only;
    app_only.descriptor_weight = 1.0;
    CHECK(baseline_score(app_only, ad, bd, meta).value() == doctest::Approx(1.0));
  }

  SUBCASE("missing descriptors disable the appearance term") {
    BaselineScorerConfig heavy;
    heavy.descriptor_weight = 0.9;
    CHECK(baseline_score(heavy, a, b, meta).value() ==
          doctest::Approx(0.9048374180359595).epsilon(1e-12));
  }

  CHECK_THROWS_AS(baseline_score(cfg, b, a, meta), NotPrecedingError);
}

TEST_CASE("descriptor csv parsing") {
  std::istringstream in("#dim 2\n3,0.5,1.5\n7,-1,0.25\n");
  const auto m = read_descriptor_csv(in);
  REQUIRE(m.size() == 2);
  CHECK(m.at(3) == std::vector<double>{0.5, 1.5});
  CHECK(m.at(7) == std::vector<double>{-1.0, 0.25});

  std::vector<Detection> dets(1);
  dets[0].det_id = 7;
  dets[0].frame = 1;
  dets[0].box = {0, 0, 1, 1};
  attach_descriptors(dets, m);
  CHECK(dets[0].descriptor == std::vector<double>{-1.0, 0.25});

  SUBCASE("header is mandatory") {
    std::istringstream bad("3,0.5,1.5\n");
    CHECK_THROWS_AS(read_descriptor_csv(bad), MalformedLineError);
  }
  SUBCASE("row width must match the header") {
    std::istringstream bad("#dim 2\n3,0.5\n");
    try {
      read_descriptor_csv(bad);
      FAIL("expected a parse error");
    } catch (const MalformedLineError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("duplicate ids are rejected") {
    std::istringstream bad("#dim 1\n3,0.5\n3,0.6\n");
    CHECK_THROWS_AS(read_descriptor_csv(bad), MalformedLineError);
  }
}
