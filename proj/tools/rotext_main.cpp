// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotext/anchors.hpp"
#include "rotext/coding.hpp"
#include "rotext/errors.hpp"
#include "rotext/evalkit.hpp"
#include "rotext/postprocess.hpp"
#include "rotext/textio.hpp"

namespace {

using namespace rotext;

double parse_number(std::string_view field, const std::string& flag) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ConfigError(flag + ": bad number '" + std::string(field) + "'");
  }
  return value;
}

std::vector<double> split_numbers(std::string_view text, char sep,
                                  const std::string& flag) {
  std::vector<double> out;
  while (true) {
    const std::size_t cut = text.find(sep);
    out.push_back(parse_number(text.substr(0, cut), flag));
    if (cut == std::string_view::npos) return out;
    text.remove_prefix(cut + 1);
  }
}

/// "default", or "m,m,m,m,m:s,s,s,s,s" for explicit means and sigmas.
NormalizationParams parse_norm(const std::string& spec) {
  if (spec == "default") return {};
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    throw ConfigError("--norm must be 'default' or 'm,m,m,m,m:s,s,s,s,s'");
  }
  const auto parse5 = [](std::string_view part) {
    const std::vector<double> v = split_numbers(part, ',', "--norm");
    if (v.size() != 5) {
      throw ConfigError("--norm needs 5 values per side, got " +
                        std::to_string(v.size()));
    }
    return std::array<double, 5>{v[0], v[1], v[2], v[3], v[4]};
  };
  const std::string_view sv = spec;
  return {parse5(sv.substr(0, colon)), parse5(sv.substr(colon + 1))};
}

/// "start:stop:step", expanded to an inclusive ascending grid.
std::vector<double> parse_thresholds(const std::string& spec) {
  const std::vector<double> v = split_numbers(spec, ':', "--thresholds");
  if (v.size() != 3) {
    throw ConfigError("--thresholds must be start:stop:step");
  }
  return threshold_range(v[0], v[1], v[2]);
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path.string());
  return out;
}

void write_json_file(const std::filesystem::path& path,
                     const nlohmann::json& value) {
  std::ofstream out = open_for_write(path);
  out << value.dump(2) << '\n';
  if (!out) throw IoError("cannot write file: " + path.string());
}

std::vector<Detection> load_detections(const std::filesystem::path& path) {
  return read_box_csv(path).to_detections();
}

struct GenOpts {
  std::string config;
  std::string out;
  int width = 0;
  int height = 0;
};

struct CoverageOpts {
  std::string manifest;
  std::string anchors;
  std::string learned;
  std::string thresholds = "0.05:0.95:0.05";
  std::string out;
  std::string json;
  bool allow_mlt = false;
};

struct CodeOpts {
  std::string anchors;
  std::string boxes;
  std::string norm = "default";
  std::string out;
};

struct RefineOpts {
  std::string anchors;
  std::vector<std::string> deltas;
  std::string norm = "default";
  std::string out;
};

struct NmsOpts {
  std::string dets;
  std::string out;
  double iou = 0.3;
};

struct EvalOpts {
  std::string manifest;
  std::string dets_dir;
  std::string json;
  double iou = 0.5;
  bool allow_mlt = false;
};

struct DetectOpts {
  std::string anchors;
  std::string refine;
  std::string scores;
  std::string loc;
  std::string norm = "default";
  std::string out;
  double score_thresh = 0.3;
  double nms = 0.3;
  std::size_t cap = 10000;
};

void run_anchors_gen(const GenOpts& o) {
  const AnchorConfig cfg =
      o.config.empty() ? AnchorConfig{} : load_anchor_config(o.config);
  const AnchorGrid grid = generate_anchors(cfg, o.width, o.height);
  write_anchor_csv(o.out, grid, cfg);
  std::cout << grid.size() << " anchors -> " << o.out << '\n';
}

void run_coverage(const CoverageOpts& o) {
  const std::vector<DatasetSample> samples =
      load_manifest(o.manifest, o.allow_mlt);
  std::vector<GroundTruth> gts;
  for (const DatasetSample& s : samples) {
    gts.insert(gts.end(), s.gts.begin(), s.gts.end());
  }

  const std::vector<RotatedBox> anchors = read_box_csv(o.anchors).boxes;
  const std::vector<double> thresholds = parse_thresholds(o.thresholds);
  const CoverageCurve raw = coverage_curve(anchors, gts, thresholds);

  std::optional<CoverageCurve> learned;
  if (!o.learned.empty()) {
    const std::vector<RotatedBox> boxes = read_box_csv(o.learned).boxes;
    learned = coverage_curve(boxes, gts, thresholds);
  }

  std::ofstream out = open_for_write(o.out);
  out << (learned ? "threshold,recall,learned_recall\n" : "threshold,recall\n");
  for (std::size_t i = 0; i < raw.thresholds.size(); ++i) {
    out << format_double(raw.thresholds[i]) << ','
        << format_double(raw.recalls[i]);
    if (learned) out << ',' << format_double(learned->recalls[i]);
    out << '\n';
  }
  if (!out) throw IoError("cannot write file: " + o.out);

  if (!o.json.empty()) {
    nlohmann::json j;
    j["thresholds"] = raw.thresholds;
    j["recall"] = raw.recalls;
    if (learned) j["learned_recall"] = learned->recalls;
    write_json_file(o.json, j);
  }
  std::cout << raw.thresholds.size() << " thresholds over " << gts.size()
            << " boxes -> " << o.out << '\n';
}

void run_encode(const CodeOpts& o) {
  const std::vector<RotatedBox> anchors = read_box_csv(o.anchors).boxes;
  const std::vector<RotatedBox> targets = read_box_csv(o.boxes).boxes;
  if (anchors.size() != targets.size()) {
    throw InvalidInputError("--anchors has " + std::to_string(anchors.size()) +
                            " rows but --boxes has " +
                            std::to_string(targets.size()));
  }
  const NormalizationParams norm = parse_norm(o.norm);
  std::vector<Delta5> deltas;
  deltas.reserve(anchors.size());
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    deltas.push_back(encode(anchors[i], targets[i], norm));
  }
  write_delta5_csv(o.out, deltas);
  std::cout << deltas.size() << " offsets -> " << o.out << '\n';
}

void run_decode(const CodeOpts& o) {
  const std::vector<RotatedBox> anchors = read_box_csv(o.anchors).boxes;
  const std::vector<Delta5> deltas = read_delta5_csv(o.boxes);
  if (anchors.size() != deltas.size()) {
    throw InvalidInputError("--anchors has " + std::to_string(anchors.size()) +
                            " rows but the offset file has " +
                            std::to_string(deltas.size()));
  }
  const NormalizationParams norm = parse_norm(o.norm);
  std::vector<RotatedBox> boxes;
  boxes.reserve(anchors.size());
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    boxes.push_back(decode(anchors[i], deltas[i], norm));
  }
  write_box_csv(o.out, boxes);
  std::cout << boxes.size() << " boxes -> " << o.out << '\n';
}

void run_refine(const RefineOpts& o) {
  const std::vector<RotatedBox> anchors = read_box_csv(o.anchors).boxes;
  std::vector<std::vector<Delta3>> stages;
  stages.reserve(o.deltas.size());
  for (const std::string& path : o.deltas) {
    stages.push_back(read_delta3_csv(path));
    if (stages.back().size() != anchors.size()) {
      throw InvalidInputError(path + " has " +
                              std::to_string(stages.back().size()) +
                              " rows but --anchors has " +
                              std::to_string(anchors.size()));
    }
  }
  const std::vector<RotatedBox> learned =
      apply_refinement_stages(anchors, stages, parse_norm(o.norm));
  write_box_csv(o.out, learned);
  std::cout << learned.size() << " learned anchors (" << stages.size()
            << " stage" << (stages.size() == 1 ? "" : "s") << ") -> " << o.out
            << '\n';
}

void run_nms(const NmsOpts& o) {
  const std::vector<Detection> dets = load_detections(o.dets);
  const std::vector<Detection> kept = rotated_nms(dets, o.iou);
  write_detection_csv(o.out, kept);
  std::cout << kept.size() << " of " << dets.size() << " detections -> "
            << o.out << '\n';
}

void run_eval(const EvalOpts& o) {
  const std::vector<DatasetSample> samples =
      load_manifest(o.manifest, o.allow_mlt);
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t n_gt = 0;
  for (const DatasetSample& s : samples) {
    const std::filesystem::path det_path =
        std::filesystem::path(o.dets_dir) / (s.image_id + ".csv");
    std::vector<Detection> dets;
    if (std::filesystem::exists(det_path)) {
      dets = load_detections(det_path);
    }
    const DetectionMatches m = match_detections(dets, s.gts, o.iou);
    tp += m.tp;
    fp += m.fp;
    for (const GroundTruth& gt : s.gts) {
      if (!gt.ignore) ++n_gt;
    }
  }

  const EvalResult res = prf(tp, fp, n_gt);
  nlohmann::json j;
  j["precision"] = res.precision;
  j["recall"] = res.recall;
  j["fmeasure"] = res.fmeasure;
  j["counts"] = {{"tp", res.tp}, {"fp", res.fp}, {"n_gt", res.n_gt}};
  write_json_file(o.json, j);
  std::cout << "precision=" << format_double(res.precision)
            << " recall=" << format_double(res.recall)
            << " fmeasure=" << format_double(res.fmeasure) << '\n';
}

void run_detect(const DetectOpts& o) {
  const std::vector<RotatedBox> anchors = read_box_csv(o.anchors).boxes;
  std::vector<Delta3> refine(anchors.size());
  if (!o.refine.empty()) refine = read_delta3_csv(o.refine);
  const std::vector<double> scores = read_score_csv(o.scores);
  const std::vector<Delta5> loc = read_delta5_csv(o.loc);

  const std::vector<Detection> dets =
      rotext::detect(anchors, refine, scores, loc, parse_norm(o.norm),
                     o.score_thresh, o.nms, o.cap);
  write_detection_csv(o.out, dets);
  std::cout << dets.size() << " detections -> " << o.out << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"detection-geometry toolkit for rotated text"};
  app.require_subcommand(1);

  GenOpts gen_o;
  auto* anchors_cmd = app.add_subcommand("anchors", "anchor grid utilities");
  anchors_cmd->require_subcommand(1);
  auto* gen = anchors_cmd->add_subcommand(
      "gen", "tile an anchor grid over an image and write it as CSV");
  gen->add_option("--config", gen_o.config,
                  "layout file, key = value or JSON (defaults when omitted)");
  gen->add_option("--width", gen_o.width, "image width in pixels")->required();
  gen->add_option("--height", gen_o.height, "image height in pixels")
      ->required();
  gen->add_option("--out", gen_o.out, "output CSV (cx,cy,w,h,theta,level)")
      ->required();
  gen->callback([&] { run_anchors_gen(gen_o); });

  CoverageOpts cov_o;
  auto* cov = app.add_subcommand(
      "coverage", "recall-vs-IoU curve of an anchor set over a dataset");
  cov->add_option("--manifest", cov_o.manifest, "dataset manifest (JSONL)")
      ->required();
  cov->add_option("--anchors", cov_o.anchors, "anchor CSV")->required();
  cov->add_option("--learned", cov_o.learned,
                  "refined-anchor CSV for a second curve column");
  cov->add_option("--thresholds", cov_o.thresholds, "start:stop:step grid")
      ->capture_default_str();
  cov->add_option("--out", cov_o.out, "output CSV (threshold,recall[,learned_recall])")
      ->required();
  cov->add_option("--json", cov_o.json, "also write the curve as JSON");
  cov->add_flag("--allow-mlt", cov_o.allow_mlt,
                "accept the icdar2017mlt format name");
  cov->callback([&] { run_coverage(cov_o); });

  CodeOpts enc_o;
  auto* enc = app.add_subcommand(
      "encode", "regression offsets mapping anchors onto target boxes");
  enc->add_option("--anchors", enc_o.anchors, "anchor CSV")->required();
  enc->add_option("--boxes", enc_o.boxes, "target box CSV, row-aligned")
      ->required();
  enc->add_option("--norm", enc_o.norm,
                  "'default' or 'm,m,m,m,m:s,s,s,s,s' means:sigmas")
      ->capture_default_str();
  enc->add_option("--out", enc_o.out, "output CSV (dx,dy,dw,dh,dtheta)")
      ->required();
  enc->callback([&] { run_encode(enc_o); });

  CodeOpts dec_o;
  auto* dec = app.add_subcommand(
      "decode", "apply regression offsets to anchors, yielding boxes");
  dec->add_option("--anchors", dec_o.anchors, "anchor CSV")->required();
  dec->add_option("--boxes,--deltas", dec_o.boxes,
                  "offset CSV (dx,dy,dw,dh,dtheta), row-aligned")
      ->required();
  dec->add_option("--norm", dec_o.norm,
                  "'default' or 'm,m,m,m,m:s,s,s,s,s' means:sigmas")
      ->capture_default_str();
  dec->add_option("--out", dec_o.out, "output CSV (cx,cy,w,h,theta)")
      ->required();
  dec->callback([&] { run_decode(dec_o); });

  RefineOpts ref_o;
  auto* ref = app.add_subcommand(
      "refine", "shape-refine anchors with one or more delta stages");
  ref->add_option("--anchors", ref_o.anchors, "anchor CSV")->required();
  ref->add_option("--deltas", ref_o.deltas,
                  "shape-delta CSV (dw,dh,dtheta); repeat for extra stages")
      ->required();
  ref->add_option("--norm", ref_o.norm,
                  "'default' or 'm,m,m,m,m:s,s,s,s,s', reused by every stage")
      ->capture_default_str();
  ref->add_option("--out", ref_o.out, "output CSV (cx,cy,w,h,theta)")
      ->required();
  ref->callback([&] { run_refine(ref_o); });

  NmsOpts nms_o;
  auto* nms = app.add_subcommand(
      "nms", "greedy rotated non-maximum suppression on scored boxes");
  nms->add_option("--dets", nms_o.dets, "detection CSV (cx,cy,w,h,theta,score)")
      ->required();
  nms->add_option("--iou", nms_o.iou, "suppression IoU threshold")
      ->capture_default_str();
  nms->add_option("--out", nms_o.out, "output CSV, score-sorted")->required();
  nms->callback([&] { run_nms(nms_o); });

  EvalOpts eval_o;
  auto* evl = app.add_subcommand(
      "eval", "precision/recall/F against a dataset manifest");
  evl->add_option("--manifest", eval_o.manifest, "dataset manifest (JSONL)")
      ->required();
  evl->add_option("--dets-dir", eval_o.dets_dir,
                  "directory of per-image <image_id>.csv detections; a "
                  "missing file counts as zero detections")
      ->required();
  evl->add_option("--iou", eval_o.iou, "match IoU threshold")
      ->capture_default_str();
  evl->add_option("--json", eval_o.json, "output report path")->required();
  evl->add_flag("--allow-mlt", eval_o.allow_mlt,
                "accept the icdar2017mlt format name");
  evl->callback([&] { run_eval(eval_o); });

  DetectOpts det_o;
  auto* det = app.add_subcommand(
      "detect", "full pipeline: refine, decode, score-filter, NMS");
  det->add_option("--anchors", det_o.anchors, "anchor CSV")->required();
  det->add_option("--refine", det_o.refine,
                  "shape-delta CSV (dw,dh,dtheta); identity when omitted");
  det->add_option("--scores", det_o.scores, "score CSV, one row per anchor")
      ->required();
  det->add_option("--loc", det_o.loc, "offset CSV (dx,dy,dw,dh,dtheta)")
      ->required();
  det->add_option("--norm", det_o.norm,
                  "'default' or 'm,m,m,m,m:s,s,s,s,s' means:sigmas")
      ->capture_default_str();
  det->add_option("--score-thresh", det_o.score_thresh,
                  "minimum score kept before NMS")
      ->capture_default_str();
  det->add_option("--nms", det_o.nms, "suppression IoU threshold")
      ->capture_default_str();
  det->add_option("--cap", det_o.cap, "candidate cap before NMS, 0 disables")
      ->capture_default_str();
  det->add_option("--out", det_o.out, "output CSV (cx,cy,w,h,theta,score)")
      ->required();
  det->callback([&] { run_detect(det_o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
