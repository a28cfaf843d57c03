// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rotext/coding.hpp"
#include "rotext/matching.hpp"

namespace rotext {

/// alpha-balanced focal scaling for the binary text/background head.
struct FocalParams {
  double alpha = 0.25;
  double gamma = 2.0;

  void validate() const;
};

/// Weights for the three-part training objective.
struct LossWeights {
  double refinement = 0.5;
  double localization = 0.5;
  double classification = 1.0;
};

struct LossValue {
  double value = 0.0;
  std::vector<double> grad;  // d value / d input, matching the input span
};

double sigmoid(double x);

/// -alpha_t (1 - p_t)^gamma log(p_t) on probabilities p in (0, 1), summed
/// and divided by max(1, #positives). Anchors labeled ignored contribute
/// nothing. grad is with respect to p.
LossValue focal_loss(std::span<const double> probs,
                     std::span<const MatchLabel> labels,
                     const FocalParams& params = {});

/// Same loss on raw scores through a fused sigmoid; grad is with respect
/// to the scores and stays finite for any input magnitude.
LossValue focal_loss_logits(std::span<const double> scores,
                            std::span<const MatchLabel> labels,
                            const FocalParams& params = {});

/// Elementwise 0.5 x^2 for |x| < 1, |x| - 0.5 beyond; summed over all
/// components and divided by max(1, #positives), where each Delta counts
/// as one positive sample.
LossValue smooth_l1(std::span<const double> diffs, std::size_t positives);

/// Same on pairwise differences pred - target; grad is with respect to pred.
LossValue smooth_l1(std::span<const double> pred, std::span<const double> target,
                    std::size_t positives);

/// Smooth-L1 over (pred - target) pairs for the 5-term localization head,
/// normalized by max(1, pairs). grad is per predicted component, laid out
/// [dx, dy, dw, dh, dtheta] per pair.
LossValue localization_loss(std::span<const Delta5> pred,
                            std::span<const Delta5> target);

/// Shape-only counterpart for the 3-term refinement head.
LossValue refinement_loss(std::span<const Delta3> pred,
                          std::span<const Delta3> target);

struct TotalLoss {
  double refinement = 0.0;
  double localization = 0.0;
  double classification = 0.0;
  double total = 0.0;
};

/// total = w.refinement * l_ref + w.localization * l_loc
///       + w.classification * l_cls; the parts come back pre-weighted.
TotalLoss total_loss(double l_ref, double l_loc, double l_cls,
                     const LossWeights& weights = {});

}  // namespace rotext
