// Command-line front end: tracklet clustering, standalone solving, motion
// statistics, desk-scale evaluation, training-pair generation, and synthetic
// sequences.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "trackmc/affinity.hpp"
#include "trackmc/edgegen.hpp"
#include "trackmc/errors.hpp"
#include "trackmc/hierarchy.hpp"
#include "trackmc/motio.hpp"
#include "trackmc/multicut.hpp"
#include "trackmc/samplegen.hpp"
#include "../src/format_util.hpp"

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw trackmc::IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw trackmc::IoError("cannot open '" + path + "' for writing");
  return out;
}

trackmc::SequenceMeta load_meta(const std::string& seqinfo_path, bool moving,
                                int n_max) {
  auto in = open_input(seqinfo_path);
  return trackmc::make_meta(trackmc::read_seqinfo(in), moving, n_max);
}

struct TrackArgs {
  std::string det_path;
  std::string seqinfo_path;
  std::string out_path;
  std::string history_path;
  std::string stats_path;
  std::string descriptors_path;
  std::string scorer = "oracle";
  bool moving = false;
  int n_max = 20;
  double inflation = 2.0;
  double cost_eps = 1e-6;
  double delta = 0.01;
  double flip_prob = 0.0;
  std::uint64_t seed = 0;
  double gap_decay = 0.5;
  double descriptor_weight = 0.5;
  int velocity_window = 5;
};

int run_track(const TrackArgs& a) {
  const auto meta = load_meta(a.seqinfo_path, a.moving, a.n_max);

  const auto kind = a.scorer == "oracle" ? trackmc::MotKind::GroundTruth
                                         : trackmc::MotKind::Detections;
  auto det_in = open_input(a.det_path);
  auto detections = trackmc::parse_mot_csv(det_in, kind);
  if (!a.descriptors_path.empty()) {
    auto desc_in = open_input(a.descriptors_path);
    trackmc::attach_descriptors(detections, trackmc::read_descriptor_csv(desc_in));
  }

  std::unique_ptr<trackmc::Scorer> scorer;
  if (a.scorer == "oracle") {
    scorer = std::make_unique<trackmc::OracleScorer>(
        trackmc::OracleScorerConfig{a.delta, a.flip_prob, a.seed});
  } else {
    scorer = std::make_unique<trackmc::BaselineScorer>(
        trackmc::BaselineScorerConfig{a.gap_decay, a.descriptor_weight,
                                      a.velocity_window});
  }

  trackmc::MotionStats stats;
  const trackmc::MotionStats* stats_ptr = nullptr;
  if (!a.stats_path.empty()) {
    auto stats_in = open_input(a.stats_path);
    stats = trackmc::read_motion_stats(stats_in);
    stats_ptr = &stats;
  }

  const trackmc::Schedule schedule;
  auto result = trackmc::run(std::move(detections), *scorer, stats_ptr, schedule,
                             meta, a.inflation, a.cost_eps);

  auto out = open_output(a.out_path);
  trackmc::write_tracks(out, result.tracks);
  if (!a.history_path.empty()) {
    auto hist = open_output(a.history_path);
    trackmc::write_history_csv(hist, result.history);
  }
  std::cout << "tracks " << result.tracks.size() << " iterations "
            << result.history.size() << "\n";
  return 0;
}

int run_solve(const std::string& graph_path, const std::string& out_path) {
  auto in = open_input(graph_path);
  const auto g = trackmc::read_instance(in);
  const auto [decomposition, report] = trackmc::cklj_solve(g);
  if (out_path.empty()) {
    trackmc::write_solution(std::cout, decomposition, report.objective);
  } else {
    auto out = open_output(out_path);
    trackmc::write_solution(out, decomposition, report.objective);
    std::cout << "objective " << trackmc::detail::format_double(report.objective)
              << " components " << report.n_components << " passes "
              << report.n_outer_passes << " transformations "
              << report.transformations_applied << "\n";
  }
  return 0;
}

int run_eval(const std::string& pred_path, const std::string& gt_path,
             double iou_thr) {
  auto pred_in = open_input(pred_path);
  auto gt_in = open_input(gt_path);
  const auto pred =
      trackmc::group_tracks(trackmc::parse_mot_csv(pred_in, trackmc::MotKind::GroundTruth));
  const auto gt =
      trackmc::group_tracks(trackmc::parse_mot_csv(gt_in, trackmc::MotKind::GroundTruth));
  const auto r = trackmc::clear_metrics(pred, gt, iou_thr);
  std::cout << "mota " << trackmc::detail::format_double(r.mota) << "\n"
            << "motp " << trackmc::detail::format_double(r.motp) << "\n"
            << "fp " << r.fp << "\n"
            << "fn " << r.fn << "\n"
            << "id_switches " << r.id_switches << "\n"
            << "fragmentations " << r.fragmentations << "\n"
            << "mostly_tracked " << trackmc::detail::format_double(r.mostly_tracked)
            << "\n"
            << "mostly_lost " << trackmc::detail::format_double(r.mostly_lost) << "\n"
            << "total_gt " << r.total_gt << "\n"
            << "matches " << r.matches << "\n";
  return 0;
}

int run_stats(const std::string& gt_path, const std::string& seqinfo_path,
              bool moving, const std::string& out_path) {
  const auto meta = load_meta(seqinfo_path, moving, 20);
  auto in = open_input(gt_path);
  const auto tracks =
      trackmc::group_tracks(trackmc::parse_mot_csv(in, trackmc::MotKind::GroundTruth));
  const auto stats = trackmc::compute_motion_stats(tracks, meta);
  if (out_path.empty()) {
    trackmc::write_motion_stats(std::cout, stats);
  } else {
    auto out = open_output(out_path);
    trackmc::write_motion_stats(out, stats);
  }
  return 0;
}

int run_samples(const std::string& gt_path, const std::string& seqinfo_path,
                const std::string& out_path, const trackmc::GenConfig& cfg) {
  const auto meta = load_meta(seqinfo_path, false, 20);
  auto in = open_input(gt_path);
  const auto tracks =
      trackmc::group_tracks(trackmc::parse_mot_csv(in, trackmc::MotKind::GroundTruth));
  const auto [samples, report] = trackmc::gen_dataset(tracks, cfg, meta);
  auto out = open_output(out_path);
  trackmc::write_samples_jsonl(out, samples);
  std::cout << "positive " << report.n_positive << " nearest " << report.n_nearest
            << " same_quadrant " << report.n_same_quadrant << " other_quadrant "
            << report.n_other_quadrant << " retries " << report.retries << "\n";
  return 0;
}

int run_synth(const std::string& config_path, const std::string& det_path,
              const std::string& gt_path) {
  auto in = open_input(config_path);
  const auto cfg = trackmc::read_synth_config(in);
  const auto result = trackmc::synth_generate(cfg);

  auto det_out = open_output(det_path);
  for (const trackmc::Detection& d : result.detections)
    det_out << d.frame << ",-1," << trackmc::detail::format_double(d.box.x) << ','
            << trackmc::detail::format_double(d.box.y) << ','
            << trackmc::detail::format_double(d.box.w) << ','
            << trackmc::detail::format_double(d.box.h) << ",1,-1,-1,-1\n";

  auto gt_out = open_output(gt_path);
  trackmc::write_tracks(gt_out, result.ground_truth);
  std::cout << "detections " << result.detections.size() << " tracks "
            << result.ground_truth.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tracklet clustering via minimum-cost multicut"};
  app.require_subcommand(1);

  TrackArgs ta;
  auto* track = app.add_subcommand("track", "cluster detections into tracks");
  track->add_option("--det", ta.det_path, "input boxes, MOT CSV")->required();
  track->add_option("--seqinfo", ta.seqinfo_path, "sequence ini file")->required();
  track->add_option("--out", ta.out_path, "output tracks, MOT CSV")->required();
  track->add_option("--history", ta.history_path, "per-iteration CSV log");
  track->add_option("--scorer", ta.scorer, "pair scorer")
      ->check(CLI::IsMember({"oracle", "baseline"}))
      ->capture_default_str();
  track->add_option("--stats", ta.stats_path,
                    "motion statistics file enabling the spatial edge filter");
  track->add_option("--descriptors", ta.descriptors_path,
                    "per-detection appearance vectors, CSV");
  track->add_flag("--moving", ta.moving, "sequence comes from a moving camera");
  track->add_option("--n-max", ta.n_max, "detections kept per side of a pair")
      ->capture_default_str();
  track->add_option("--inflation", ta.inflation, "spatial filter slack factor")
      ->capture_default_str();
  track->add_option("--cost-eps", ta.cost_eps, "affinity clamp width")
      ->capture_default_str();
  track->add_option("--delta", ta.delta, "oracle distance from certainty")
      ->capture_default_str();
  track->add_option("--flip-prob", ta.flip_prob, "oracle corruption rate")
      ->capture_default_str();
  track->add_option("--seed", ta.seed, "oracle corruption seed")
      ->capture_default_str();
  track->add_option("--gap-decay", ta.gap_decay, "baseline motion decay per second")
      ->capture_default_str();
  track->add_option("--descriptor-weight", ta.descriptor_weight,
                    "baseline appearance blend weight")
      ->capture_default_str();
  track->add_option("--velocity-window", ta.velocity_window,
                    "baseline velocity fit window")
      ->capture_default_str();

  std::string graph_path, solve_out;
  auto* solve = app.add_subcommand("solve", "solve one multicut instance");
  solve->add_option("--graph", graph_path, "instance file")->required();
  solve->add_option("--out", solve_out, "solution file (default: stdout)");

  std::string pred_path, eval_gt_path;
  double iou_thr = 0.5;
  auto* eval = app.add_subcommand("eval", "score tracks against ground truth");
  eval->add_option("--pred", pred_path, "predicted tracks, MOT CSV")->required();
  eval->add_option("--gt", eval_gt_path, "ground-truth tracks, MOT CSV")->required();
  eval->add_option("--iou-thr", iou_thr, "match threshold")->capture_default_str();

  std::string stats_gt, stats_seqinfo, stats_out;
  bool stats_moving = false;
  auto* stats = app.add_subcommand("stats", "estimate motion statistics");
  stats->add_option("--gt", stats_gt, "ground-truth tracks, MOT CSV")->required();
  stats->add_option("--seqinfo", stats_seqinfo, "sequence ini file")->required();
  stats->add_flag("--moving", stats_moving, "sequence comes from a moving camera");
  stats->add_option("--out", stats_out, "output file (default: stdout)");

  std::string samples_gt, samples_seqinfo, samples_out;
  trackmc::GenConfig gen_cfg;
  auto* samples = app.add_subcommand("samples", "draw labeled tracklet pairs");
  samples->add_option("--gt", samples_gt, "ground-truth tracks, MOT CSV")->required();
  samples->add_option("--seqinfo", samples_seqinfo, "sequence ini file")->required();
  samples->add_option("--out", samples_out, "output JSONL file")->required();
  samples->add_option("--n", gen_cfg.n_samples, "number of pairs")->required();
  samples->add_option("--seed", gen_cfg.rng_seed, "draw seed")->capture_default_str();
  samples->add_option("--min-len", gen_cfg.min_len, "shortest segment")
      ->capture_default_str();
  samples->add_option("--max-len", gen_cfg.max_len, "longest segment")
      ->capture_default_str();
  samples->add_option("--gap-factor", gen_cfg.gap_factor_max,
                      "skipped frames drawn up to factor * length")
      ->capture_default_str();
  samples->add_option("--max-retries", gen_cfg.max_retries,
                      "draw attempts per sample")
      ->capture_default_str();

  std::string synth_config, synth_det, synth_gt;
  auto* synth = app.add_subcommand("synth", "generate a synthetic sequence");
  synth->add_option("--config", synth_config, "key=value config file")->required();
  synth->add_option("--out-det", synth_det, "output detections, MOT CSV")->required();
  synth->add_option("--out-gt", synth_gt, "output ground truth, MOT CSV")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (track->parsed()) return run_track(ta);
    if (solve->parsed()) return run_solve(graph_path, solve_out);
    if (eval->parsed()) return run_eval(pred_path, eval_gt_path, iou_thr);
    if (stats->parsed()) return run_stats(stats_gt, stats_seqinfo, stats_moving, stats_out);
    if (samples->parsed()) return run_samples(samples_gt, samples_seqinfo, samples_out, gen_cfg);
    if (synth->parsed()) return run_synth(synth_config, synth_det, synth_gt);
  } catch (const trackmc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
