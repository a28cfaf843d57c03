// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#include "rotext/anchors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rotext {

namespace {

constexpr double kAngleLimit = std::numbers::pi / 2.0 - 1e-3;
constexpr double kMaxLogExtentDelta = 50.0;

RotatedBox refine_one(const RotatedBox& anchor, const Delta3& d,
                      const NormalizationParams& norm) {
  if (!std::isfinite(d.dw) || !std::isfinite(d.dh) || !std::isfinite(d.dtheta)) {
    throw InvalidInputError("apply_refinement: non-finite delta");
  }
  if (std::abs(anchor.theta()) >= kAngleLimit) {
    throw AngleDomainError("apply_refinement: anchor angle too close to +-pi/2");
  }
  const auto& m = norm.mean();
  const auto& s = norm.sigma();
  const double raw_dw = d.dw * s[2] + m[2];
  const double raw_dh = d.dh * s[3] + m[3];
  const double raw_dt = d.dtheta * s[4] + m[4];
  if (std::abs(raw_dw) > kMaxLogExtentDelta || std::abs(raw_dh) > kMaxLogExtentDelta) {
    throw NumericRangeError("apply_refinement: log-extent delta overflows exp()");
  }
  return RotatedBox(anchor.cx(), anchor.cy(), anchor.w() * std::exp(raw_dw),
                    anchor.h() * std::exp(raw_dh),
                    std::atan(std::tan(anchor.theta()) + raw_dt));
}

}  // namespace

std::vector<AnchorLevel> AnchorConfig::default_levels() {
  return {{"P3", 8.0, 16.0},
          {"P4", 16.0, 32.0},
          {"P5", 32.0, 64.0},
          {"P6", 64.0, 128.0},
          {"P7", 128.0, 256.0}};
}

AnchorConfig AnchorConfig::with_grid(int num_scales, int num_ratios) {
  if (num_scales < 1 || num_scales > 3) {
    throw ConfigError("with_grid: num_scales must be in 1..3");
  }
  if (num_ratios != 1 && num_ratios != 3 && num_ratios != 5) {
    throw ConfigError("with_grid: num_ratios must be 1, 3 or 5");
  }
  AnchorConfig cfg;
  cfg.scales.clear();
  for (int k = 0; k < num_scales; ++k) {
    cfg.scales.push_back(std::pow(2.0, k / 3.0));
  }
  switch (num_ratios) {
    case 1: cfg.ratios = {1.0}; break;
    case 3: cfg.ratios = {0.5, 1.0, 2.0}; break;
    case 5: cfg.ratios = {0.25, 0.5, 1.0, 2.0, 4.0}; break;
  }
  return cfg;
}

void AnchorConfig::validate() const {
  if (levels.empty()) throw ConfigError("anchor config has no levels");
  double prev_stride = 0.0;
  for (const auto& lvl : levels) {
    if (!(lvl.stride > prev_stride)) {
      throw ConfigError("level strides must be positive and strictly increasing");
    }
    if (!(lvl.base_size > 0.0)) {
      throw ConfigError("level base sizes must be positive");
    }
    prev_stride = lvl.stride;
  }
  if (scales.empty() || ratios.empty()) {
    throw ConfigError("need at least one scale and one ratio");
  }
  for (double s : scales) {
    if (!(s > 0.0) || !std::isfinite(s)) throw ConfigError("scales must be positive");
  }
  for (double r : ratios) {
    if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError("ratios must be positive");
  }
  if (!std::isfinite(center_offset) || center_offset < 0.0 || center_offset >= 1.0) {
    throw ConfigError("center_offset must lie in [0, 1)");
  }
}

AnchorGrid generate_anchors(const AnchorConfig& config, int image_w, int image_h) {
  config.validate();
  const double max_stride = config.levels.back().stride;
  if (image_w < max_stride || image_h < max_stride) {
    throw ConfigError("image " + std::to_string(image_w) + "x" +
                      std::to_string(image_h) +
                      " smaller than one cell of the coarsest level");
  }

  // Per-(scale, ratio) extents are shared by every cell of a level.
  AnchorGrid grid;
  std::size_t total = 0;
  for (const auto& lvl : config.levels) {
    const auto rows = static_cast<std::size_t>(std::ceil(image_h / lvl.stride));
    const auto cols = static_cast<std::size_t>(std::ceil(image_w / lvl.stride));
    total += rows * cols * config.scales.size() * config.ratios.size();
  }
  grid.boxes.reserve(total);
  grid.level_index.reserve(total);
  grid.grid_coord.reserve(total);

  for (std::uint32_t li = 0; li < config.levels.size(); ++li) {
    const auto& lvl = config.levels[li];
    const auto rows = static_cast<std::int32_t>(std::ceil(image_h / lvl.stride));
    const auto cols = static_cast<std::int32_t>(std::ceil(image_w / lvl.stride));
    std::vector<std::pair<double, double>> extents;
    extents.reserve(config.scales.size() * config.ratios.size());
    for (double scale : config.scales) {
      for (double ratio : config.ratios) {
        const double root = std::sqrt(ratio);
        extents.emplace_back(lvl.base_size * scale * root,
                             lvl.base_size * scale / root);
      }
    }
    for (std::int32_t row = 0; row < rows; ++row) {
      const double cy = (row + config.center_offset) * lvl.stride;
      for (std::int32_t col = 0; col < cols; ++col) {
        const double cx = (col + config.center_offset) * lvl.stride;
        for (const auto& [w, h] : extents) {
          grid.boxes.emplace_back(cx, cy, w, h, 0.0);
          grid.level_index.push_back(li);
          grid.grid_coord.push_back({row, col});
        }
      }
    }
  }
  return grid;
}

std::vector<RotatedBox> apply_refinement(std::span<const RotatedBox> anchors,
                                         std::span<const Delta3> deltas,
                                         const NormalizationParams& norm) {
  if (anchors.size() != deltas.size()) {
    throw ContractError("apply_refinement: " + std::to_string(anchors.size()) +
                        " anchors vs " + std::to_string(deltas.size()) + " deltas");
  }
  std::vector<RotatedBox> out;
  out.reserve(anchors.size());
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    out.push_back(refine_one(anchors[i], deltas[i], norm));
  }
  return out;
}

std::vector<RotatedBox> apply_refinement(const AnchorGrid& grid,
                                         std::span<const Delta3> deltas,
                                         const NormalizationParams& norm) {
  return apply_refinement(std::span<const RotatedBox>(grid.boxes), deltas, norm);
}

std::vector<RotatedBox> apply_refinement_stages(
    std::span<const RotatedBox> anchors,
    std::span<const std::vector<Delta3>> stages,
    const NormalizationParams& norm) {
  std::vector<RotatedBox> current(anchors.begin(), anchors.end());
  for (const auto& stage : stages) {
    current = apply_refinement(current, stage, norm);
  }
  return current;
}

}  // namespace rotext
