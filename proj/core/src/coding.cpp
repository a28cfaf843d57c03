// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#include "rotext/coding.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rotext {

namespace {

constexpr double kAngleLimit = std::numbers::pi / 2.0 - 1e-3;
constexpr double kMaxLogExtentDelta = 50.0;

void require_tan_safe(const RotatedBox& box, const char* role) {
  if (std::abs(box.theta()) >= kAngleLimit) {
    throw AngleDomainError(std::string(role) +
                           " angle too close to +-pi/2 for tan coding: theta=" +
                           std::to_string(box.theta()));
  }
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw InvalidInputError(std::string("non-finite delta component ") + name);
  }
}

}  // namespace

NormalizationParams::NormalizationParams(const std::array<double, 5>& mean,
                                         const std::array<double, 5>& sigma)
    : mean_(mean), sigma_(sigma) {
  for (int i = 0; i < 5; ++i) {
    if (!std::isfinite(mean_[i]) || !std::isfinite(sigma_[i])) {
      throw ConfigError("normalization params must be finite");
    }
    if (!(sigma_[i] > 0.0)) {
      throw ConfigError("normalization sigma components must be positive");
    }
  }
}

Delta5 encode(const RotatedBox& anchor, const RotatedBox& target,
              const NormalizationParams& norm) {
  require_tan_safe(anchor, "anchor");
  require_tan_safe(target, "target");
  const double raw_dx = (target.cx() - anchor.cx()) / anchor.w();
  const double raw_dy = (target.cy() - anchor.cy()) / anchor.h();
  const double raw_dw = std::log(target.w() / anchor.w());
  const double raw_dh = std::log(target.h() / anchor.h());
  const double raw_dt = std::tan(target.theta()) - std::tan(anchor.theta());
  const auto& m = norm.mean();
  const auto& s = norm.sigma();
  return {(raw_dx - m[0]) / s[0], (raw_dy - m[1]) / s[1],
          (raw_dw - m[2]) / s[2], (raw_dh - m[3]) / s[3],
          (raw_dt - m[4]) / s[4]};
}

RotatedBox decode(const RotatedBox& anchor, const Delta5& delta,
                  const NormalizationParams& norm) {
  require_finite(delta.dx, "dx");
  require_finite(delta.dy, "dy");
  require_finite(delta.dw, "dw");
  require_finite(delta.dh, "dh");
  require_finite(delta.dtheta, "dtheta");
  require_tan_safe(anchor, "anchor");
  const auto& m = norm.mean();
  const auto& s = norm.sigma();
  const double raw_dx = delta.dx * s[0] + m[0];
  const double raw_dy = delta.dy * s[1] + m[1];
  const double raw_dw = delta.dw * s[2] + m[2];
  const double raw_dh = delta.dh * s[3] + m[3];
  const double raw_dt = delta.dtheta * s[4] + m[4];
  if (std::abs(raw_dw) > kMaxLogExtentDelta || std::abs(raw_dh) > kMaxLogExtentDelta) {
    throw NumericRangeError("decode: log-extent delta overflows exp()");
  }
  return canonicalize(RotatedBox(anchor.cx() + raw_dx * anchor.w(),
                                 anchor.cy() + raw_dy * anchor.h(),
                                 anchor.w() * std::exp(raw_dw),
                                 anchor.h() * std::exp(raw_dh),
                                 std::atan(std::tan(anchor.theta()) + raw_dt)));
}

Delta3 encode_shape(const RotatedBox& anchor, const RotatedBox& target,
                    const NormalizationParams& norm) {
  require_tan_safe(anchor, "anchor");
  require_tan_safe(target, "target");
  const double raw_dw = std::log(target.w() / anchor.w());
  const double raw_dh = std::log(target.h() / anchor.h());
  const double raw_dt = std::tan(target.theta()) - std::tan(anchor.theta());
  const auto& m = norm.mean();
  const auto& s = norm.sigma();
  return {(raw_dw - m[2]) / s[2], (raw_dh - m[3]) / s[3], (raw_dt - m[4]) / s[4]};
}

}  // namespace rotext
