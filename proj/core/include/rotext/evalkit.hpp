// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rotext/geometry.hpp"
#include "rotext/ground_truth.hpp"
#include "rotext/postprocess.hpp"

namespace rotext {

struct EvalResult {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t n_gt = 0;  // non-ignored ground truths
  double precision = 0.0;
  double recall = 0.0;
  double fmeasure = 0.0;
};

enum class DetectionOutcome : std::uint8_t {
  true_positive,
  false_positive,
  discarded  // overlapped only an ignore region; counts nowhere
};

struct DetectionMatches {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::vector<DetectionOutcome> outcomes;  // aligned with the input order
};

/// Greedy one-to-one protocol. Detections are visited by descending score
/// (input order on ties); each claims the highest-IoU still-unmatched
/// non-ignored ground truth at IoU >= iou_thresh, ground-truth ties going
/// to the lowest index. A detection that fails that but overlaps an
/// ignore-flagged ground truth at IoU >= iou_thresh is discarded; anything
/// else is a false positive.
DetectionMatches match_detections(std::span<const Detection> dets,
                                  std::span<const GroundTruth> gts,
                                  double iou_thresh);

/// precision = tp / max(1, tp + fp); recall = tp / max(1, n_gt);
/// fmeasure = harmonic mean, 0 when both are 0.
EvalResult prf(std::size_t tp, std::size_t fp, std::size_t n_gt);

struct CoverageCurve {
  std::vector<double> thresholds;  // ascending
  std::vector<double> recalls;     // same length, non-increasing
};

/// recall(t) = fraction of non-ignored ground truths whose best rotated
/// IoU over the anchor set reaches t. The anchor list may be a raw grid
/// or refined boxes loaded from file.
CoverageCurve coverage_curve(std::span<const RotatedBox> anchors,
                             std::span<const GroundTruth> gts,
                             std::span<const double> thresholds);

/// Inclusive ascending grid start, start+step, ... capped at stop.
std::vector<double> threshold_range(double start, double stop, double step);

/// 0.50 to 0.95 in 0.05 steps.
std::vector<double> default_thresholds();

/// 0.05 to 0.95 in 0.05 steps, for full-axis coverage plots.
std::vector<double> dense_thresholds();

}  // namespace rotext
