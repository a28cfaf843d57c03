// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#include "rotext/losses.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "rotext/errors.hpp"

namespace rotext {

namespace {

// log(1 + exp(x)) without overflow for large |x|.
double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

std::size_t count_positives(std::span<const MatchLabel> labels) {
  return static_cast<std::size_t>(
      std::count(labels.begin(), labels.end(), MatchLabel::positive));
}

}  // namespace

void FocalParams::validate() const {
  if (!(alpha > 0.0) || !(alpha <= 1.0)) {
    throw ConfigError("focal alpha must lie in (0, 1]");
  }
  if (!(gamma >= 0.0)) {
    throw ConfigError("focal gamma must be non-negative");
  }
}

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

LossValue focal_loss(std::span<const double> probs,
                     std::span<const MatchLabel> labels,
                     const FocalParams& params) {
  params.validate();
  if (probs.size() != labels.size()) {
    throw ContractError("probability count does not match label count");
  }

  const double norm =
      static_cast<double>(std::max<std::size_t>(1, count_positives(labels)));

  LossValue out;
  out.grad.assign(probs.size(), 0.0);

  double sum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (labels[i] == MatchLabel::ignored) continue;
    const double p = probs[i];
    if (!std::isfinite(p) || !(p > 0.0) || !(p < 1.0)) {
      throw InvalidInputError("probabilities must lie strictly in (0, 1)");
    }
    const bool pos = labels[i] == MatchLabel::positive;
    const double at = pos ? params.alpha : 1.0 - params.alpha;
    const double pt = pos ? p : 1.0 - p;
    const double one_minus = 1.0 - pt;
    const double mod = std::pow(one_minus, params.gamma);
    sum += -at * mod * std::log(pt);

    // d/dpt, then chain through pt = p or pt = 1 - p.
    const double dpt =
        at * params.gamma * std::pow(one_minus, params.gamma - 1.0) *
            std::log(pt) -
        at * mod / pt;
    out.grad[i] = (pos ? dpt : -dpt) / norm;
  }

  out.value = sum / norm;
  return out;
}

LossValue focal_loss_logits(std::span<const double> scores,
                            std::span<const MatchLabel> labels,
                            const FocalParams& params) {
  params.validate();
  if (scores.size() != labels.size()) {
    throw ContractError("score count does not match label count");
  }

  const double norm =
      static_cast<double>(std::max<std::size_t>(1, count_positives(labels)));

  LossValue out;
  out.grad.assign(scores.size(), 0.0);

  double sum = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (labels[i] == MatchLabel::ignored) continue;
    const double s = scores[i];
    if (!std::isfinite(s)) {
      throw InvalidInputError("scores must be finite");
    }
    const bool pos = labels[i] == MatchLabel::positive;
    const double at = pos ? params.alpha : 1.0 - params.alpha;
    // pt is the predicted probability of the labeled class.
    const double pt = pos ? sigmoid(s) : sigmoid(-s);
    const double one_minus = pos ? sigmoid(-s) : sigmoid(s);
    const double log_pt = pos ? -softplus(-s) : -softplus(s);
    const double mod = std::pow(one_minus, params.gamma);
    sum += -at * mod * log_pt;

    // d/ds of the labeled-class loss; flips sign for the negative class.
    const double ds =
        at * params.gamma * mod * pt * log_pt -
        at * std::pow(one_minus, params.gamma + 1.0);
    out.grad[i] = (pos ? ds : -ds) / norm;
  }

  out.value = sum / norm;
  return out;
}

LossValue smooth_l1(std::span<const double> pred, std::span<const double> target,
                    std::size_t positives) {
  if (pred.size() != target.size()) {
    throw ContractError("prediction count does not match target count");
  }
  std::vector<double> diffs(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) diffs[i] = pred[i] - target[i];
  return smooth_l1(diffs, positives);
}

LossValue smooth_l1(std::span<const double> diffs, std::size_t positives) {
  const double norm = static_cast<double>(std::max<std::size_t>(1, positives));

  LossValue out;
  out.grad.assign(diffs.size(), 0.0);

  double sum = 0.0;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    const double x = diffs[i];
    if (!std::isfinite(x)) {
      throw InvalidInputError("smooth-l1 inputs must be finite");
    }
    const double ax = std::abs(x);
    if (ax < 1.0) {
      sum += 0.5 * x * x;
      out.grad[i] = x / norm;
    } else {
      sum += ax - 0.5;
      out.grad[i] = (x > 0.0 ? 1.0 : -1.0) / norm;
    }
  }

  out.value = sum / norm;
  return out;
}

namespace {

template <typename DeltaT, std::size_t N>
LossValue delta_loss(std::span<const DeltaT> pred, std::span<const DeltaT> target,
                     const std::array<double DeltaT::*, N>& members) {
  if (pred.size() != target.size()) {
    throw ContractError("prediction count does not match target count");
  }
  std::vector<double> diffs;
  diffs.reserve(pred.size() * N);
  for (std::size_t i = 0; i < pred.size(); ++i) {
    for (auto member : members) {
      diffs.push_back(pred[i].*member - target[i].*member);
    }
  }
  return smooth_l1(diffs, pred.size());
}

}  // namespace

LossValue localization_loss(std::span<const Delta5> pred,
                            std::span<const Delta5> target) {
  static constexpr std::array<double Delta5::*, 5> members = {
      &Delta5::dx, &Delta5::dy, &Delta5::dw, &Delta5::dh, &Delta5::dtheta};
  return delta_loss<Delta5, 5>(pred, target, members);
}

LossValue refinement_loss(std::span<const Delta3> pred,
                          std::span<const Delta3> target) {
  static constexpr std::array<double Delta3::*, 3> members = {
      &Delta3::dw, &Delta3::dh, &Delta3::dtheta};
  return delta_loss<Delta3, 3>(pred, target, members);
}

TotalLoss total_loss(double l_ref, double l_loc, double l_cls,
                     const LossWeights& weights) {
  TotalLoss out;
  out.refinement = weights.refinement * l_ref;
  out.localization = weights.localization * l_loc;
  out.classification = weights.classification * l_cls;
  out.total = out.refinement + out.localization + out.classification;
  return out;
}

}  // namespace rotext
