// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#include "rotext/matching.hpp"

#include <algorithm>
#include <limits>

#include "rotext/errors.hpp"

namespace rotext {

void MatcherConfig::validate() const {
  if (!(mu > 0.0) || !(mu <= 1.0)) {
    throw ConfigError("matcher mu must lie in (0, 1]");
  }
  if (ignore_band) {
    const auto [low, high] = *ignore_band;
    if (!(low >= 0.0) || !(low < high) || !(high <= mu)) {
      throw ConfigError("ignore band must satisfy 0 <= low < high <= mu");
    }
  }
}

std::size_t MatchAssignment::positive_count() const {
  return static_cast<std::size_t>(
      std::count(labels.begin(), labels.end(), MatchLabel::positive));
}

MatchAssignment match_targets(std::span<const RotatedBox> anchors,
                              std::span<const GroundTruth> gts,
                              const MatcherConfig& cfg) {
  cfg.validate();

  const std::size_t n = anchors.size();
  const std::size_t m = gts.size();

  MatchAssignment out;
  out.labels.assign(n, MatchLabel::negative);
  out.matched_gt.assign(n, std::nullopt);
  out.max_iou.assign(n, 0.0);
  if (m == 0) return out;

  // Row i holds anchor i against every ground truth, ignored ones included.
  std::vector<RotatedBox> gt_boxes;
  gt_boxes.reserve(m);
  for (const auto& gt : gts) gt_boxes.push_back(gt.box);
  const IouMatrix ious = iou_matrix(anchors, gt_boxes);

  for (std::size_t i = 0; i < n; ++i) {
    double best_pos = 0.0;
    std::size_t best_pos_j = m;
    double best_ign = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double v = ious(i, j);
      if (gts[j].ignore) {
        best_ign = std::max(best_ign, v);
      } else if (v > best_pos) {
        best_pos = v;
        best_pos_j = j;
      }
    }
    out.max_iou[i] = best_pos;

    if (best_pos >= cfg.mu && best_pos >= best_ign) {
      out.labels[i] = MatchLabel::positive;
      out.matched_gt[i] = best_pos_j;
    } else if (best_ign >= cfg.mu) {
      out.labels[i] = MatchLabel::ignored;
    } else if (cfg.ignore_band) {
      const auto [low, high] = *cfg.ignore_band;
      if (best_pos >= low && best_pos < high) {
        out.labels[i] = MatchLabel::ignored;
      }
    }
  }

  if (cfg.force_best_match) {
    for (std::size_t j = 0; j < m; ++j) {
      if (gts[j].ignore) continue;
      double best = 0.0;
      std::size_t best_i = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (ious(i, j) > best) {
          best = ious(i, j);
          best_i = i;
        }
      }
      if (best_i == n) continue;  // all-zero column
      if (out.labels[best_i] == MatchLabel::positive &&
          out.max_iou[best_i] > best) {
        continue;
      }
      out.labels[best_i] = MatchLabel::positive;
      out.matched_gt[best_i] = j;
      out.max_iou[best_i] = std::max(out.max_iou[best_i], best);
    }
  }

  return out;
}

namespace {

template <typename DeltaT, typename EncodeFn>
std::vector<DeltaT> gather_targets(const MatchAssignment& assign,
                                   std::span<const RotatedBox> anchors,
                                   std::span<const GroundTruth> gts,
                                   EncodeFn&& encode_fn) {
  if (assign.labels.size() != anchors.size()) {
    throw ContractError("assignment size does not match anchor count");
  }
  std::vector<DeltaT> out;
  out.reserve(assign.positive_count());
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    if (assign.labels[i] != MatchLabel::positive) continue;
    const auto j = assign.matched_gt[i];
    if (!j || *j >= gts.size()) {
      throw ContractError("positive anchor lacks a valid ground-truth index");
    }
    out.push_back(encode_fn(anchors[i], gts[*j].box));
  }
  return out;
}

}  // namespace

std::vector<Delta5> regression_targets(const MatchAssignment& assign,
                                       std::span<const RotatedBox> anchors,
                                       std::span<const GroundTruth> gts,
                                       const NormalizationParams& norm) {
  return gather_targets<Delta5>(
      assign, anchors, gts,
      [&](const RotatedBox& a, const RotatedBox& g) { return encode(a, g, norm); });
}

std::vector<Delta3> shape_targets(const MatchAssignment& assign,
                                  std::span<const RotatedBox> anchors,
                                  std::span<const GroundTruth> gts,
                                  const NormalizationParams& norm) {
  return gather_targets<Delta3>(
      assign, anchors, gts,
      [&](const RotatedBox& a, const RotatedBox& g) {
        return encode_shape(a, g, norm);
      });
}

}  // namespace rotext
