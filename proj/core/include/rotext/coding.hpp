// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "rotext/geometry.hpp"

namespace rotext {

/// Full regression offsets (dx, dy, dw, dh, dtheta), normalized
/// network-space values unless stated otherwise.
struct Delta5 {
  double dx = 0.0;
  double dy = 0.0;
  double dw = 0.0;
  double dh = 0.0;
  double dtheta = 0.0;
};

/// Shape-only refinement offsets (dw, dh, dtheta). Centers are never
/// regressed so refined anchors stay aligned with their grid cells.
struct Delta3 {
  double dw = 0.0;
  double dh = 0.0;
  double dtheta = 0.0;
};

/// Componentwise normalization applied to raw deltas: (raw - mean) / sigma.
/// Component order is (x, y, w, h, theta).
class NormalizationParams {
 public:
  /// Shipped defaults: mean = 0, sigma = (0.1, 0.1, 0.2, 0.2, 0.1).
  NormalizationParams() = default;
  NormalizationParams(const std::array<double, 5>& mean,
                      const std::array<double, 5>& sigma);

  const std::array<double, 5>& mean() const { return mean_; }
  const std::array<double, 5>& sigma() const { return sigma_; }

 private:
  std::array<double, 5> mean_{0.0, 0.0, 0.0, 0.0, 0.0};
  std::array<double, 5> sigma_{0.1, 0.1, 0.2, 0.2, 0.1};
};

/// Offsets from anchor to target:
///   dx = (gx - bx)/bw, dy = (gy - by)/bh,
///   dw = log(gw/bw),   dh = log(gh/bh),
///   dtheta = tan(g_theta) - tan(b_theta),
/// then normalized componentwise. Both boxes must have |theta| below
/// pi/2 - 1e-3 so the tan term stays bounded; canonical boxes always do.
Delta5 encode(const RotatedBox& anchor, const RotatedBox& target,
              const NormalizationParams& norm = {});

/// Exact inverse of encode; the decoded box is canonicalized.
/// Throws NumericRangeError when a de-normalized log-extent delta
/// exceeds 50 in magnitude.
RotatedBox decode(const RotatedBox& anchor, const Delta5& delta,
                  const NormalizationParams& norm = {});

/// encode restricted to the (w, h, theta) components.
Delta3 encode_shape(const RotatedBox& anchor, const RotatedBox& target,
                    const NormalizationParams& norm = {});

}  // namespace rotext
