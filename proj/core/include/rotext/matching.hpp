// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rotext/coding.hpp"
#include "rotext/geometry.hpp"
#include "rotext/ground_truth.hpp"

namespace rotext {

enum class MatchLabel : std::uint8_t { negative, positive, ignored };

/// IoU-threshold assignment rule. An anchor is positive when its best
/// rotated IoU against a non-ignored ground truth reaches mu.
struct MatcherConfig {
  double mu = 0.5;

  /// Optional [low, high) IoU band mapped to the ignored label instead of
  /// negative; requires low < high <= mu. Off by default.
  std::optional<std::pair<double, double>> ignore_band;

  /// When set, every non-ignored ground truth claims its best-IoU anchor
  /// as positive even below mu (zero-IoU pairs are never forced). An
  /// anchor already positive keeps the higher-IoU ground truth.
  bool force_best_match = false;

  /// mu = 0.3: the looser threshold used when training the refinement stage.
  static MatcherConfig for_refinement() {
    MatcherConfig cfg;
    cfg.mu = 0.3;
    return cfg;
  }

  void validate() const;
};

struct MatchAssignment {
  std::vector<MatchLabel> labels;
  std::vector<std::optional<std::size_t>> matched_gt;  // set iff positive
  std::vector<double> max_iou;  // best IoU against non-ignored ground truths

  std::size_t positive_count() const;
};

/// Labels every anchor by rotated-IoU thresholding. Argmax ties break to
/// the lowest ground-truth index. Anchors whose best overlap is an
/// ignore-flagged ground truth at IoU >= mu are labeled ignored rather
/// than positive or negative. With no ground truths everything is negative.
MatchAssignment match_targets(std::span<const RotatedBox> anchors,
                              std::span<const GroundTruth> gts,
                              const MatcherConfig& cfg = {});

/// Encoded offsets for the positive anchors, in anchor order.
std::vector<Delta5> regression_targets(const MatchAssignment& assign,
                                       std::span<const RotatedBox> anchors,
                                       std::span<const GroundTruth> gts,
                                       const NormalizationParams& norm = {});

/// Shape-only variant feeding the refinement stage.
std::vector<Delta3> shape_targets(const MatchAssignment& assign,
                                  std::span<const RotatedBox> anchors,
                                  std::span<const GroundTruth> gts,
                                  const NormalizationParams& norm = {});

}  // namespace rotext
