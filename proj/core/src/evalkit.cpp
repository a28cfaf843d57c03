// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#include "rotext/evalkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rotext/errors.hpp"

namespace rotext {

DetectionMatches match_detections(std::span<const Detection> dets,
                                  std::span<const GroundTruth> gts,
                                  double iou_thresh) {
  const std::size_t n = dets.size();
  const std::size_t m = gts.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dets[a].score > dets[b].score;
  });

  DetectionMatches out;
  out.outcomes.assign(n, DetectionOutcome::false_positive);

  std::vector<bool> gt_taken(m, false);
  for (const std::size_t di : order) {
    double best_pos = 0.0;
    std::size_t best_j = m;
    double best_ign = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double v = rotated_iou(dets[di].box, gts[j].box);
      if (gts[j].ignore) {
        best_ign = std::max(best_ign, v);
      } else if (!gt_taken[j] && v > best_pos) {
        best_pos = v;
        best_j = j;
      }
    }
    if (best_j < m && best_pos >= iou_thresh) {
      gt_taken[best_j] = true;
      out.outcomes[di] = DetectionOutcome::true_positive;
      ++out.tp;
    } else if (best_ign >= iou_thresh) {
      out.outcomes[di] = DetectionOutcome::discarded;
    } else {
      ++out.fp;
    }
  }
  return out;
}

EvalResult prf(std::size_t tp, std::size_t fp, std::size_t n_gt) {
  EvalResult out;
  out.tp = tp;
  out.fp = fp;
  out.n_gt = n_gt;
  out.precision =
      static_cast<double>(tp) / static_cast<double>(std::max<std::size_t>(1, tp + fp));
  out.recall =
      static_cast<double>(tp) / static_cast<double>(std::max<std::size_t>(1, n_gt));
  const double sum = out.precision + out.recall;
  out.fmeasure = sum > 0.0 ? 2.0 * out.precision * out.recall / sum : 0.0;
  return out;
}

CoverageCurve coverage_curve(std::span<const RotatedBox> anchors,
                             std::span<const GroundTruth> gts,
                             std::span<const double> thresholds) {
  if (thresholds.empty()) {
    throw ConfigError("coverage curve needs at least one threshold");
  }
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    const double t = thresholds[i];
    if (!(t > 0.0) || !(t < 1.0)) {
      throw ConfigError("coverage thresholds must lie in (0, 1)");
    }
    if (i > 0 && !(t > thresholds[i - 1])) {
      throw ConfigError("coverage thresholds must be strictly ascending");
    }
  }

  std::vector<double> best;
  for (const auto& gt : gts) {
    if (gt.ignore) continue;
    double b = 0.0;
    for (const auto& a : anchors) {
      b = std::max(b, rotated_iou(a, gt.box));
      if (b >= 1.0) break;
    }
    best.push_back(b);
  }
  if (best.empty()) {
    throw InvalidInputError(
        "coverage curve needs at least one non-ignored ground truth");
  }

  CoverageCurve out;
  out.thresholds.assign(thresholds.begin(), thresholds.end());
  out.recalls.reserve(thresholds.size());
  const double denom = static_cast<double>(best.size());
  for (const double t : thresholds) {
    const auto hit = std::count_if(best.begin(), best.end(),
                                   [&](double b) { return b >= t; });
    out.recalls.push_back(static_cast<double>(hit) / denom);
  }
  return out;
}

std::vector<double> threshold_range(double start, double stop, double step) {
  if (!(step > 0.0) || !(start <= stop)) {
    throw ConfigError("threshold range needs start <= stop and step > 0");
  }
  std::vector<double> out;
  // Rounding each point to a step multiple keeps grids like 0.05:0.95:0.05
  // free of accumulated float drift.
  const long long count = std::llround((stop - start) / step);
  for (long long k = 0; k <= count; ++k) {
    const double t = start + static_cast<double>(k) * step;
    if (t > stop + 0.5 * step) break;
    out.push_back(t);
  }
  return out;
}

std::vector<double> default_thresholds() { return threshold_range(0.50, 0.95, 0.05); }

std::vector<double> dense_thresholds() { return threshold_range(0.05, 0.95, 0.05); }

}  // namespace rotext
