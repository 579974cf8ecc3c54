// Python interface. Stream-based file functions are exposed as path-based
// wrappers; span parameters become lists.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "trackmc/affinity.hpp"
#include "trackmc/edgegen.hpp"
#include "trackmc/errors.hpp"
#include "trackmc/hierarchy.hpp"
#include "trackmc/motio.hpp"
#include "trackmc/multicut.hpp"
#include "trackmc/rng.hpp"
#include "trackmc/samplegen.hpp"

namespace py = pybind11;
using namespace trackmc;

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

class PyScorer : public Scorer {
 public:
  using Scorer::Scorer;
  Affinity score(const Tracklet& t_i, const Tracklet& t_j,
                 const SequenceMeta& meta) const override {
    PYBIND11_OVERRIDE_PURE(Affinity, Scorer, score, t_i, t_j, meta);
  }
};

}  // namespace

PYBIND11_MODULE(_trackmc, m) {
  m.doc() = "tracklet clustering via minimum-cost multicut";

  // ---- core ----
  py::class_<BoundingBox>(m, "BoundingBox")
      .def(py::init<>())
      .def(py::init([](double x, double y, double w, double h) {
             return BoundingBox{x, y, w, h};
           }),
           py::arg("x"), py::arg("y"), py::arg("w"), py::arg("h"))
      .def_readwrite("x", &BoundingBox::x)
      .def_readwrite("y", &BoundingBox::y)
      .def_readwrite("w", &BoundingBox::w)
      .def_readwrite("h", &BoundingBox::h)
      .def("center_x", &BoundingBox::center_x)
      .def("center_y", &BoundingBox::center_y)
      .def("diagonal", &BoundingBox::diagonal)
      .def("valid", &BoundingBox::valid)
      .def("__repr__", [](const BoundingBox& b) {
        std::ostringstream s;
        s << "BoundingBox(x=" << b.x << ", y=" << b.y << ", w=" << b.w
          << ", h=" << b.h << ")";
        return s.str();
      });

  py::class_<Detection>(m, "Detection")
      .def(py::init<>())
      .def(py::init([](int det_id, int frame, BoundingBox box, double confidence,
                       std::optional<int> gt_id, std::vector<double> descriptor) {
             Detection d;
             d.det_id = det_id;
             d.frame = frame;
             d.box = box;
             d.confidence = confidence;
             d.gt_id = gt_id;
             d.descriptor = std::move(descriptor);
             return d;
           }),
           py::arg("det_id"), py::arg("frame"), py::arg("box"),
           py::arg("confidence") = 1.0, py::arg("gt_id") = std::nullopt,
           py::arg("descriptor") = std::vector<double>{})
      .def_readwrite("det_id", &Detection::det_id)
      .def_readwrite("frame", &Detection::frame)
      .def_readwrite("box", &Detection::box)
      .def_readwrite("confidence", &Detection::confidence)
      .def_readwrite("gt_id", &Detection::gt_id)
      .def_readwrite("descriptor", &Detection::descriptor);

  py::class_<SequenceMeta>(m, "SequenceMeta")
      .def(py::init<>())
      .def(py::init([](double width, double height, double fps, bool moving_camera,
                       int n_max) {
             SequenceMeta meta;
             meta.image_width = width;
             meta.image_height = height;
             meta.fps = fps;
             meta.moving_camera = moving_camera;
             meta.n_max = n_max;
             return meta;
           }),
           py::arg("image_width"), py::arg("image_height"), py::arg("fps") = 30.0,
           py::arg("moving_camera") = false, py::arg("n_max") = 20)
      .def_readwrite("image_width", &SequenceMeta::image_width)
      .def_readwrite("image_height", &SequenceMeta::image_height)
      .def_readwrite("fps", &SequenceMeta::fps)
      .def_readwrite("moving_camera", &SequenceMeta::moving_camera)
      .def_readwrite("n_max", &SequenceMeta::n_max);

  py::class_<Tracklet>(m, "Tracklet")
      .def(py::init<int, std::vector<Detection>>(), py::arg("id"),
           py::arg("detections"))
      .def_property_readonly("id", &Tracklet::id)
      .def_property_readonly("detections", &Tracklet::detections)
      .def_property_readonly("length", &Tracklet::length)
      .def_property_readonly("first_frame", &Tracklet::first_frame)
      .def_property_readonly("last_frame", &Tracklet::last_frame)
      .def("index_at_frame", &Tracklet::index_at_frame, py::arg("frame"))
      .def("__len__", &Tracklet::length)
      .def("__repr__", [](const Tracklet& t) {
        std::ostringstream s;
        s << "Tracklet(id=" << t.id() << ", frames " << t.first_frame() << ".."
          << t.last_frame() << ", n=" << t.length() << ")";
        return s.str();
      });

  m.def("precedes", &precedes, py::arg("t_i"), py::arg("t_j"));
  m.def("prune_pair", &prune_pair, py::arg("t_i"), py::arg("t_j"), py::arg("n_max"));
  m.def("pair_sequence", &pair_sequence, py::arg("t_i"), py::arg("t_j"));
  m.def("merge", &merge, py::arg("t_i"), py::arg("t_j"), py::arg("new_id"));

  py::class_<BoxFeature>(m, "BoxFeature")
      .def_readonly("x", &BoxFeature::x)
      .def_readonly("y", &BoxFeature::y)
      .def_readonly("w", &BoxFeature::w)
      .def_readonly("h", &BoxFeature::h)
      .def_readonly("t", &BoxFeature::t);
  py::class_<NormalizedPairFeature>(m, "NormalizedPairFeature")
      .def_readonly("first", &NormalizedPairFeature::first)
      .def_readonly("second", &NormalizedPairFeature::second);
  m.def("normalize_pair", &normalize_pair, py::arg("t_i"), py::arg("t_j"),
        py::arg("meta"));

  // ---- affinity ----
  py::class_<Affinity>(m, "Affinity")
      .def(py::init<double>(), py::arg("value"))
      .def_property_readonly("value", &Affinity::value)
      .def("__float__", &Affinity::value)
      .def("__repr__", [](const Affinity& a) {
        return "Affinity(" + std::to_string(a.value()) + ")";
      });
  py::implicitly_convertible<py::float_, Affinity>();

  m.def("cost_from_affinity", &cost_from_affinity, py::arg("affinity"),
        py::arg("eps") = 1e-6);
  m.def("affinity_from_cost", &affinity_from_cost, py::arg("cost"));

  py::class_<Scorer, PyScorer>(m, "Scorer")
      .def(py::init<>())
      .def("score", &Scorer::score, py::arg("t_i"), py::arg("t_j"), py::arg("meta"));

  py::class_<OracleScorerConfig>(m, "OracleScorerConfig")
      .def(py::init([](double delta, double flip_prob, std::uint64_t rng_seed) {
             return OracleScorerConfig{delta, flip_prob, rng_seed};
           }),
           py::arg("delta") = 0.01, py::arg("flip_prob") = 0.0,
           py::arg("rng_seed") = 0)
      .def_readwrite("delta", &OracleScorerConfig::delta)
      .def_readwrite("flip_prob", &OracleScorerConfig::flip_prob)
      .def_readwrite("rng_seed", &OracleScorerConfig::rng_seed);
  py::class_<OracleScorer, Scorer>(m, "OracleScorer")
      .def(py::init<OracleScorerConfig>(), py::arg("config"))
      .def_property_readonly("config", &OracleScorer::config);
  m.def("oracle_score", &oracle_score, py::arg("config"), py::arg("t_i"),
        py::arg("t_j"));

  py::class_<BaselineScorerConfig>(m, "BaselineScorerConfig")
      .def(py::init([](double gap_decay, double descriptor_weight,
                       int velocity_window) {
             return BaselineScorerConfig{gap_decay, descriptor_weight,
                                         velocity_window};
           }),
           py::arg("gap_decay") = 0.5, py::arg("descriptor_weight") = 0.5,
           py::arg("velocity_window") = 5)
      .def_readwrite("gap_decay", &BaselineScorerConfig::gap_decay)
      .def_readwrite("descriptor_weight", &BaselineScorerConfig::descriptor_weight)
      .def_readwrite("velocity_window", &BaselineScorerConfig::velocity_window);
  py::class_<BaselineScorer, Scorer>(m, "BaselineScorer")
      .def(py::init<BaselineScorerConfig>(), py::arg("config"))
      .def_property_readonly("config", &BaselineScorer::config);
  m.def("baseline_score", &baseline_score, py::arg("config"), py::arg("t_i"),
        py::arg("t_j"), py::arg("meta"));

  m.def("read_descriptor_csv", [](const std::string& path) {
    auto in = open_input(path);
    return read_descriptor_csv(in);
  });
  m.def(
      "attach_descriptors",
      [](std::vector<Detection> detections,
         const std::unordered_map<int, std::vector<double>>& descriptors) {
        attach_descriptors(detections, descriptors);
        return detections;
      },
      py::arg("detections"), py::arg("descriptors"),
      "Returns a copy of the detections with descriptors attached by det_id.");

  // ---- multicut ----
  py::class_<GraphEdge>(m, "GraphEdge")
      .def_readonly("u", &GraphEdge::u)
      .def_readonly("v", &GraphEdge::v)
      .def_readonly("cost", &GraphEdge::cost);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n_vertices"))
      .def_property_readonly("n_vertices", &Graph::n_vertices)
      .def_property_readonly("edges", &Graph::edges)
      .def_property_readonly("constraints", &Graph::constraints)
      .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"), py::arg("cost"))
      .def("add_constraint", &Graph::add_constraint, py::arg("u"), py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("constrained", &Graph::constrained, py::arg("u"), py::arg("v"))
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("constraint_partners", &Graph::constraint_partners, py::arg("v"));

  py::class_<Decomposition>(m, "Decomposition")
      .def(py::init<>())
      .def(py::init([](std::vector<int> labels) {
             return Decomposition{std::move(labels)};
           }),
           py::arg("labels"))
      .def_readwrite("labels", &Decomposition::labels);

  m.def("all_singletons", &all_singletons, py::arg("n_vertices"));
  m.def("canonical_labels", &canonical_labels, py::arg("labels"));
  m.def("objective", &objective, py::arg("graph"), py::arg("decomposition"));
  m.def("feasible", &feasible, py::arg("graph"), py::arg("decomposition"));
  m.def("edge_labels", &edge_labels, py::arg("graph"), py::arg("decomposition"));
  m.def("check_cycle_inequalities",
        py::overload_cast<const Graph&, const std::vector<int>&, int>(
            &check_cycle_inequalities),
        py::arg("graph"), py::arg("y"), py::arg("max_cycle_len"));
  m.def("check_cycle_inequalities",
        py::overload_cast<const Graph&, const Decomposition&, int>(
            &check_cycle_inequalities),
        py::arg("graph"), py::arg("decomposition"), py::arg("max_cycle_len"));
  m.def("brute_force_optimum", &brute_force_optimum, py::arg("graph"),
        py::arg("cap") = 10);

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("objective", &SolveReport::objective)
      .def_readonly("n_components", &SolveReport::n_components)
      .def_readonly("n_outer_passes", &SolveReport::n_outer_passes)
      .def_readonly("transformations_applied", &SolveReport::transformations_applied);

  m.def("cklj_solve", &cklj_solve, py::arg("graph"),
        py::arg("init") = std::nullopt);

  m.def("read_instance", [](const std::string& path) {
    auto in = open_input(path);
    return read_instance(in);
  });
  m.def("write_instance", [](const std::string& path, const Graph& g) {
    auto out = open_output(path);
    write_instance(out, g);
  });
  m.def("write_solution",
        [](const std::string& path, const Decomposition& d, double objective_value) {
          auto out = open_output(path);
          write_solution(out, d, objective_value);
        });

  // ---- edge generation ----
  py::class_<MotionClassStats>(m, "MotionClassStats")
      .def(py::init<>())
      .def_readwrite("mean_disp", &MotionClassStats::mean_disp)
      .def_readwrite("std_disp", &MotionClassStats::std_disp)
      .def_readwrite("sample_count", &MotionClassStats::sample_count);
  py::class_<MotionStats>(m, "MotionStats")
      .def(py::init<>())
      .def_readwrite("static_camera", &MotionStats::static_camera)
      .def_readwrite("moving_camera", &MotionStats::moving_camera);

  m.def(
      "compute_motion_stats",
      [](const std::vector<Tracklet>& tracks, const SequenceMeta& meta) {
        return compute_motion_stats(tracks, meta);
      },
      py::arg("tracks"), py::arg("meta"));
  m.def("merge_motion_stats", &merge_motion_stats, py::arg("a"), py::arg("b"));
  m.def("feasible_radius", &feasible_radius, py::arg("last"), py::arg("gap"),
        py::arg("stats"), py::arg("meta"), py::arg("inflation") = 2.0);

  py::class_<EdgeCandidate>(m, "EdgeCandidate")
      .def_readonly("u", &EdgeCandidate::u)
      .def_readonly("v", &EdgeCandidate::v)
      .def_readonly("gap", &EdgeCandidate::gap);

  m.def(
      "candidate_edges",
      [](const std::vector<Tracklet>& tracklets, const GapLimit& gap_limit,
         const std::optional<MotionStats>& stats, const SequenceMeta& meta,
         double inflation) {
        return candidate_edges(tracklets, gap_limit, stats ? &*stats : nullptr,
                               meta, inflation);
      },
      py::arg("tracklets"), py::arg("gap_limit"), py::arg("stats"), py::arg("meta"),
      py::arg("inflation") = 2.0);

  m.def("write_motion_stats", [](const std::string& path, const MotionStats& stats) {
    auto out = open_output(path);
    write_motion_stats(out, stats);
  });
  m.def("read_motion_stats", [](const std::string& path) {
    auto in = open_input(path);
    return read_motion_stats(in);
  });

  // ---- hierarchy ----
  py::enum_<Phase>(m, "Phase")
      .value("Fixed", Phase::Fixed)
      .value("PhaseA", Phase::PhaseA)
      .value("PhaseB", Phase::PhaseB)
      .value("Converged", Phase::Converged);

  py::class_<Schedule>(m, "Schedule")
      .def(py::init<>())
      .def_readwrite("fixed_gaps", &Schedule::fixed_gaps)
      .def_readwrite("phase_a_multiplier", &Schedule::phase_a_multiplier)
      .def_readwrite("phase_b_multiplier", &Schedule::phase_b_multiplier)
      .def("validate", &Schedule::validate);

  py::class_<IterationRecord>(m, "IterationRecord")
      .def_readonly("iteration", &IterationRecord::iteration)
      .def_readonly("phase", &IterationRecord::phase)
      .def_readonly("n_vertices", &IterationRecord::n_vertices)
      .def_readonly("n_edges", &IterationRecord::n_edges)
      .def_readonly("n_merges", &IterationRecord::n_merges)
      .def_readonly("wall_ms", &IterationRecord::wall_ms);

  m.def("max_gap", &max_gap, py::arg("schedule"), py::arg("iteration"),
        py::arg("phase"), py::arg("len_u"), py::arg("len_v"));
  m.def(
      "conflict_constraints",
      [](const std::vector<Tracklet>& tracklets) {
        return conflict_constraints(tracklets);
      },
      py::arg("tracklets"));

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("tracks", &RunResult::tracks)
      .def_readonly("history", &RunResult::history);

  m.def(
      "run",
      [](std::vector<Detection> detections, const Scorer& scorer,
         const std::optional<MotionStats>& stats, const Schedule& schedule,
         const SequenceMeta& meta, double inflation, double cost_eps) {
        return run(std::move(detections), scorer, stats ? &*stats : nullptr,
                   schedule, meta, inflation, cost_eps);
      },
      py::arg("detections"), py::arg("scorer"), py::arg("stats") = std::nullopt,
      py::arg("schedule") = Schedule{}, py::arg("meta") = SequenceMeta{},
      py::arg("inflation") = 2.0, py::arg("cost_eps") = 1e-6,
      "Clusters detections into tracks; returns them with the iteration history.");

  // ---- sample generation ----
  py::enum_<SampleStrategy>(m, "SampleStrategy")
      .value("Split", SampleStrategy::Split)
      .value("Nearest", SampleStrategy::Nearest)
      .value("SameQuadrant", SampleStrategy::SameQuadrant)
      .value("OtherQuadrant", SampleStrategy::OtherQuadrant);
  m.def("strategy_name", [](SampleStrategy s) { return std::string(strategy_name(s)); });

  py::class_<TrackletPairSample>(m, "TrackletPairSample")
      .def_readonly("first", &TrackletPairSample::first)
      .def_readonly("second", &TrackletPairSample::second)
      .def_readonly("positive", &TrackletPairSample::positive)
      .def_readonly("strategy", &TrackletPairSample::strategy)
      .def_readonly("gap", &TrackletPairSample::gap);

  py::class_<GenConfig>(m, "GenConfig")
      .def(py::init<>())
      .def_readwrite("n_samples", &GenConfig::n_samples)
      .def_readwrite("min_len", &GenConfig::min_len)
      .def_readwrite("max_len", &GenConfig::max_len)
      .def_readwrite("gap_factor_max", &GenConfig::gap_factor_max)
      .def_readwrite("mix_nearest", &GenConfig::mix_nearest)
      .def_readwrite("mix_same_quadrant", &GenConfig::mix_same_quadrant)
      .def_readwrite("mix_other_quadrant", &GenConfig::mix_other_quadrant)
      .def_readwrite("rng_seed", &GenConfig::rng_seed)
      .def_readwrite("max_retries", &GenConfig::max_retries)
      .def("validate", &GenConfig::validate);

  py::class_<GenReport>(m, "GenReport")
      .def_readonly("n_positive", &GenReport::n_positive)
      .def_readonly("n_nearest", &GenReport::n_nearest)
      .def_readonly("n_same_quadrant", &GenReport::n_same_quadrant)
      .def_readonly("n_other_quadrant", &GenReport::n_other_quadrant)
      .def_readonly("retries", &GenReport::retries);

  m.def("quadrant_of", &quadrant_of, py::arg("cx"), py::arg("cy"), py::arg("meta"));
  m.def(
      "gen_dataset",
      [](const std::vector<Tracklet>& tracks, const GenConfig& cfg,
         const SequenceMeta& meta) { return gen_dataset(tracks, cfg, meta); },
      py::arg("tracks"), py::arg("config"), py::arg("meta"));
  m.def("write_samples_jsonl",
        [](const std::string& path, const std::vector<TrackletPairSample>& samples) {
          auto out = open_output(path);
          write_samples_jsonl(out, samples);
        });

  // ---- file formats, metrics, synthetic data ----
  m.def("iou", &iou, py::arg("a"), py::arg("b"));

  py::class_<SeqInfo>(m, "SeqInfo")
      .def(py::init<>())
      .def_readwrite("name", &SeqInfo::name)
      .def_readwrite("frame_rate", &SeqInfo::frame_rate)
      .def_readwrite("image_width", &SeqInfo::image_width)
      .def_readwrite("image_height", &SeqInfo::image_height)
      .def_readwrite("seq_length", &SeqInfo::seq_length);
  m.def("read_seqinfo", [](const std::string& path) {
    auto in = open_input(path);
    return read_seqinfo(in);
  });
  m.def("make_meta", &make_meta, py::arg("info"), py::arg("moving_camera") = false,
        py::arg("n_max") = 20);

  py::enum_<MotKind>(m, "MotKind")
      .value("Detections", MotKind::Detections)
      .value("GroundTruth", MotKind::GroundTruth);
  m.def(
      "parse_mot_csv",
      [](const std::string& path, MotKind kind) {
        auto in = open_input(path);
        return parse_mot_csv(in, kind);
      },
      py::arg("path"), py::arg("kind"));
  m.def(
      "group_tracks",
      [](const std::vector<Detection>& detections) { return group_tracks(detections); },
      py::arg("detections"));
  m.def(
      "write_tracks",
      [](const std::string& path, const std::vector<Tracklet>& tracks) {
        auto out = open_output(path);
        write_tracks(out, tracks);
      },
      py::arg("path"), py::arg("tracks"));

  py::class_<ClearReport>(m, "ClearReport")
      .def_readonly("mota", &ClearReport::mota)
      .def_readonly("motp", &ClearReport::motp)
      .def_readonly("fp", &ClearReport::fp)
      .def_readonly("fn", &ClearReport::fn)
      .def_readonly("id_switches", &ClearReport::id_switches)
      .def_readonly("fragmentations", &ClearReport::fragmentations)
      .def_readonly("mostly_tracked", &ClearReport::mostly_tracked)
      .def_readonly("mostly_lost", &ClearReport::mostly_lost)
      .def_readonly("total_gt", &ClearReport::total_gt)
      .def_readonly("matches", &ClearReport::matches);
  m.def(
      "clear_metrics",
      [](const std::vector<Tracklet>& predicted, const std::vector<Tracklet>& gt,
         double iou_threshold) { return clear_metrics(predicted, gt, iou_threshold); },
      py::arg("predicted"), py::arg("ground_truth"), py::arg("iou_threshold") = 0.5);

  py::enum_<SynthLayout>(m, "SynthLayout")
      .value("Random", SynthLayout::Random)
      .value("Lanes", SynthLayout::Lanes);
  py::class_<SynthOcclusion>(m, "SynthOcclusion")
      .def(py::init([](int identity, int first_frame, int last_frame) {
             return SynthOcclusion{identity, first_frame, last_frame};
           }),
           py::arg("identity"), py::arg("first_frame"), py::arg("last_frame"))
      .def_readwrite("identity", &SynthOcclusion::identity)
      .def_readwrite("first_frame", &SynthOcclusion::first_frame)
      .def_readwrite("last_frame", &SynthOcclusion::last_frame);
  py::class_<SynthConfig>(m, "SynthConfig")
      .def(py::init<>())
      .def(py::init([](int n_identities, int n_frames, double image_width,
                       double image_height, double fps, double min_speed,
                       double max_speed, double box_width, double box_height,
                       double size_scale_min, double size_scale_max,
                       double jitter_sigma, double box_noise_sigma,
                       SynthLayout layout,
                       std::vector<SynthOcclusion> occlusions,
                       std::uint64_t rng_seed) {
             SynthConfig cfg;
             cfg.n_identities = n_identities;
             cfg.n_frames = n_frames;
             cfg.image_width = image_width;
             cfg.image_height = image_height;
             cfg.fps = fps;
             cfg.min_speed = min_speed;
             cfg.max_speed = max_speed;
             cfg.box_width = box_width;
             cfg.box_height = box_height;
             cfg.size_scale_min = size_scale_min;
             cfg.size_scale_max = size_scale_max;
             cfg.jitter_sigma = jitter_sigma;
             cfg.box_noise_sigma = box_noise_sigma;
             cfg.layout = layout;
             cfg.occlusions = std::move(occlusions);
             cfg.rng_seed = rng_seed;
             return cfg;
           }),
           py::arg("n_identities") = 5, py::arg("n_frames") = 60,
           py::arg("image_width") = 1280.0, py::arg("image_height") = 720.0,
           py::arg("fps") = 30.0, py::arg("min_speed") = 2.0,
           py::arg("max_speed") = 6.0, py::arg("box_width") = 50.0,
           py::arg("box_height") = 100.0, py::arg("size_scale_min") = 0.9,
           py::arg("size_scale_max") = 1.1, py::arg("jitter_sigma") = 0.5,
           py::arg("box_noise_sigma") = 1.0,
           py::arg("layout") = SynthLayout::Random,
           py::arg("occlusions") = std::vector<SynthOcclusion>{},
           py::arg("rng_seed") = 0)
      .def_readwrite("n_identities", &SynthConfig::n_identities)
      .def_readwrite("n_frames", &SynthConfig::n_frames)
      .def_readwrite("image_width", &SynthConfig::image_width)
      .def_readwrite("image_height", &SynthConfig::image_height)
      .def_readwrite("fps", &SynthConfig::fps)
      .def_readwrite("min_speed", &SynthConfig::min_speed)
      .def_readwrite("max_speed", &SynthConfig::max_speed)
      .def_readwrite("box_width", &SynthConfig::box_width)
      .def_readwrite("box_height", &SynthConfig::box_height)
      .def_readwrite("size_scale_min", &SynthConfig::size_scale_min)
      .def_readwrite("size_scale_max", &SynthConfig::size_scale_max)
      .def_readwrite("jitter_sigma", &SynthConfig::jitter_sigma)
      .def_readwrite("box_noise_sigma", &SynthConfig::box_noise_sigma)
      .def_readwrite("layout", &SynthConfig::layout)
      .def_readwrite("occlusions", &SynthConfig::occlusions)
      .def_readwrite("rng_seed", &SynthConfig::rng_seed)
      .def("validate", &SynthConfig::validate);
  py::class_<SynthResult>(m, "SynthResult")
      .def_readonly("detections", &SynthResult::detections)
      .def_readonly("ground_truth", &SynthResult::ground_truth);
  m.def("synth_generate", &synth_generate, py::arg("config"));
  m.def("read_synth_config", [](const std::string& path) {
    auto in = open_input(path);
    return read_synth_config(in);
  });
}
