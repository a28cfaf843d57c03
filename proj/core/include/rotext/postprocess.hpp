// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rotext/anchors.hpp"
#include "rotext/coding.hpp"
#include "rotext/geometry.hpp"

namespace rotext {

struct Detection {
  RotatedBox box;
  double score = 0.0;
};

/// Keeps detections with score >= tau, preserving relative order.
std::vector<Detection> filter_by_score(std::span<const Detection> dets,
                                       double tau);

/// Greedy suppression: walk detections by descending score (ties keep
/// input order) and keep one iff its rotated IoU with every already-kept
/// detection stays below tau_nms. Output is score-sorted.
std::vector<Detection> rotated_nms(std::span<const Detection> dets,
                                   double tau_nms);

/// Full inference path: shape-refine the grid anchors, decode the
/// localization deltas on the refined anchors, drop low scores, then NMS.
/// candidate_cap bounds the survivor count entering NMS (top scores win,
/// ties by index); 0 disables the cap.
std::vector<Detection> detect(const AnchorGrid& grid,
                              std::span<const Delta3> refine,
                              std::span<const double> scores,
                              std::span<const Delta5> loc,
                              const NormalizationParams& norm = {},
                              double tau_score = 0.3, double tau_nms = 0.3,
                              std::size_t candidate_cap = 10000);

std::vector<Detection> detect(std::span<const RotatedBox> anchors,
                              std::span<const Delta3> refine,
                              std::span<const double> scores,
                              std::span<const Delta5> loc,
                              const NormalizationParams& norm = {},
                              double tau_score = 0.3, double tau_nms = 0.3,
                              std::size_t candidate_cap = 10000);

}  // namespace rotext
