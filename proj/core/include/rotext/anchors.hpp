// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rotext/coding.hpp"
#include "rotext/geometry.hpp"

namespace rotext {

struct AnchorLevel {
  std::string name;
  double stride = 0.0;     // pixels between neighbouring cell centers
  double base_size = 0.0;  // side of the square base anchor, pixels
};

/// Pyramid anchor layout: one anchor per (cell, scale, ratio) triple.
/// Ratio convention is r = w/h with area preserved: w = base*scale*sqrt(r),
/// h = base*scale/sqrt(r).
struct AnchorConfig {
  std::vector<AnchorLevel> levels = default_levels();
  std::vector<double> scales{1.0};
  std::vector<double> ratios{1.0};
  double center_offset = 0.5;  // fraction of the stride, cell centers by default

  /// P3..P7 with strides 8..128 and base sizes 16..256.
  static std::vector<AnchorLevel> default_levels();

  /// Ablation-style grid: num_scales in 1..3 chosen from 2^(k/3),
  /// num_ratios in {1, 3, 5} chosen from {0.25, 0.5, 1, 2, 4}
  /// (nested subsets centered on 1).
  static AnchorConfig with_grid(int num_scales, int num_ratios);

  /// Throws ConfigError when strides are not strictly increasing, any
  /// size/scale/ratio is non-positive, or center_offset is outside [0, 1).
  void validate() const;
};

/// Materialized anchor set. Anchors are ordered level-major, then row,
/// then column, then scale, then ratio; all have theta = 0.
struct AnchorGrid {
  struct Cell {
    std::int32_t row = 0;
    std::int32_t col = 0;
  };

  std::vector<RotatedBox> boxes;
  std::vector<std::uint32_t> level_index;  // index into the config's levels
  std::vector<Cell> grid_coord;

  std::size_t size() const { return boxes.size(); }
};

/// Tiles anchors over ceil(image/stride) cells per level. Anchors may
/// extend beyond the image borders; they are deliberately not clipped so
/// encode/decode stays symmetric for border text.
/// Throws ConfigError when the image is smaller than one cell of the
/// coarsest level.
AnchorGrid generate_anchors(const AnchorConfig& config, int image_w, int image_h);

/// Shape-only anchor refinement. For each anchor (cx, cy, w, h, theta) and
/// de-normalized offsets (dw, dh, dt):
///   (cx, cy, w*exp(dw), h*exp(dh), atan(tan(theta) + dt)).
/// Centers are copied bit-exactly and the anchor count never changes.
std::vector<RotatedBox> apply_refinement(std::span<const RotatedBox> anchors,
                                         std::span<const Delta3> deltas,
                                         const NormalizationParams& norm = {});
std::vector<RotatedBox> apply_refinement(const AnchorGrid& grid,
                                         std::span<const Delta3> deltas,
                                         const NormalizationParams& norm = {});

/// Cascade variant: applies one delta set per stage in order, reusing the
/// same normalization for every stage.
std::vector<RotatedBox> apply_refinement_stages(
    std::span<const RotatedBox> anchors,
    std::span<const std::vector<Delta3>> stages,
    const NormalizationParams& norm = {});

}  // namespace rotext
