// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#include "rotext/postprocess.hpp"

#include <algorithm>
#include <numeric>

#include "rotext/errors.hpp"

namespace rotext {

std::vector<Detection> filter_by_score(std::span<const Detection> dets,
                                       double tau) {
  std::vector<Detection> out;
  out.reserve(dets.size());
  for (const auto& d : dets) {
    if (d.score >= tau) out.push_back(d);
  }
  return out;
}

std::vector<Detection> rotated_nms(std::span<const Detection> dets,
                                   double tau_nms) {
  if (!(tau_nms > 0.0) || !(tau_nms <= 1.0)) {
    throw ConfigError("nms threshold must lie in (0, 1]");
  }

  std::vector<std::size_t> order(dets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dets[a].score > dets[b].score;
  });

  std::vector<Detection> kept;
  for (const std::size_t idx : order) {
    const Detection& cand = dets[idx];
    bool suppressed = false;
    for (const Detection& k : kept) {
      if (rotated_iou(k.box, cand.box) >= tau_nms) {
        suppressed = true;
        break;
      }
    }
    if (!suppressed) kept.push_back(cand);
  }
  return kept;
}

std::vector<Detection> detect(const AnchorGrid& grid,
                              std::span<const Delta3> refine,
                              std::span<const double> scores,
                              std::span<const Delta5> loc,
                              const NormalizationParams& norm, double tau_score,
                              double tau_nms, std::size_t candidate_cap) {
  return detect(std::span<const RotatedBox>(grid.boxes), refine, scores, loc,
                norm, tau_score, tau_nms, candidate_cap);
}

std::vector<Detection> detect(std::span<const RotatedBox> anchors,
                              std::span<const Delta3> refine,
                              std::span<const double> scores,
                              std::span<const Delta5> loc,
                              const NormalizationParams& norm, double tau_score,
                              double tau_nms, std::size_t candidate_cap) {
  const std::size_t n = anchors.size();
  if (refine.size() != n || scores.size() != n || loc.size() != n) {
    throw ContractError("detect inputs must all match the anchor count");
  }

  const std::vector<RotatedBox> learned = apply_refinement(anchors, refine, norm);

  std::vector<Detection> candidates;
  candidates.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (scores[i] < tau_score) continue;
    candidates.push_back({decode(learned[i], loc[i], norm), scores[i]});
  }

  if (candidate_cap > 0 && candidates.size() > candidate_cap) {
    // Keep the highest-scored survivors but put them back in input order
    // so NMS tie-breaking stays index-stable.
    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::nth_element(order.begin(), order.begin() + candidate_cap, order.end(),
                     [&](std::size_t a, std::size_t b) {
                       if (candidates[a].score != candidates[b].score) {
                         return candidates[a].score > candidates[b].score;
                       }
                       return a < b;
                     });
    order.resize(candidate_cap);
    std::sort(order.begin(), order.end());
    std::vector<Detection> capped;
    capped.reserve(candidate_cap);
    for (const std::size_t idx : order) capped.push_back(candidates[idx]);
    candidates = std::move(capped);
  }

  return rotated_nms(candidates, tau_nms);
}

}  // namespace rotext
