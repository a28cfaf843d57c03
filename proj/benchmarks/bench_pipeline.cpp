// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#include <cstddef>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "rotext/anchors.hpp"
#include "rotext/coding.hpp"
#include "rotext/evalkit.hpp"
#include "rotext/matching.hpp"
#include "rotext/postprocess.hpp"

namespace {

using namespace rotext;

std::vector<GroundTruth> random_gts(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(40.0, 760.0);
  std::uniform_real_distribution<double> extent(16.0, 120.0);
  std::uniform_real_distribution<double> angle(-0.7, 0.7);
  std::vector<GroundTruth> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({RotatedBox(pos(rng), pos(rng), extent(rng), extent(rng),
                              angle(rng)),
                   false});
  }
  return out;
}

std::vector<Delta3> random_shape_deltas(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<Delta3> out(n);
  for (Delta3& d : out) d = {unif(rng), unif(rng), unif(rng)};
  return out;
}

void BM_GenerateAnchors(benchmark::State& state) {
  const AnchorConfig cfg = AnchorConfig::with_grid(
      static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_anchors(cfg, 800, 800));
  }
}
BENCHMARK(BM_GenerateAnchors)->Args({1, 1})->Args({3, 5});

void BM_ApplyRefinement(benchmark::State& state) {
  const AnchorGrid grid = generate_anchors(AnchorConfig::with_grid(1, 1), 800, 800);
  const auto deltas = random_shape_deltas(grid.size(), 37);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_refinement(grid, deltas));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_ApplyRefinement);

void BM_MatchTargets(benchmark::State& state) {
  const AnchorGrid grid = generate_anchors(AnchorConfig::with_grid(1, 1), 256, 256);
  const auto gts = random_gts(20, 41);
  for (auto _ : state) {
    benchmark::DoNotOptimize(match_targets(grid.boxes, gts));
  }
}
BENCHMARK(BM_MatchTargets);

void BM_RotatedNms(benchmark::State& state) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> pos(0.0, 400.0);
  std::uniform_real_distribution<double> jitter(-6.0, 6.0);
  std::uniform_real_distribution<double> score(0.0, 1.0);
  // Clusters of four jittered copies apiece, the shape NMS is built for.
  std::vector<Detection> dets;
  for (int c = 0; c < 125; ++c) {
    const RotatedBox seed(pos(rng), pos(rng), 60, 24, 0.2);
    for (int k = 0; k < 4; ++k) {
      dets.push_back({RotatedBox(seed.cx() + jitter(rng),
                                 seed.cy() + jitter(rng), seed.w(), seed.h(),
                                 seed.theta()),
                      score(rng)});
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(rotated_nms(dets, 0.3));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(dets.size()));
}
BENCHMARK(BM_RotatedNms);

void BM_DetectFullImage(benchmark::State& state) {
  const AnchorGrid grid = generate_anchors(AnchorConfig::with_grid(1, 1), 800, 800);
  const std::size_t n = grid.size();
  const auto refine = random_shape_deltas(n, 47);

  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> low(0.0, 0.2);
  std::uniform_real_distribution<double> unif(-0.5, 0.5);
  std::vector<double> scores(n);
  std::vector<Delta5> loc(n);
  for (std::size_t i = 0; i < n; ++i) {
    scores[i] = low(rng);
    loc[i] = {unif(rng), unif(rng), unif(rng), unif(rng), unif(rng)};
  }
  for (std::size_t i = 0; i < n; i += 97) scores[i] = 0.5 + low(rng);

  for (auto _ : state) {
    benchmark::DoNotOptimize(detect(grid, refine, scores, loc));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_DetectFullImage);

void BM_CoverageCurve(benchmark::State& state) {
  const AnchorGrid grid = generate_anchors(AnchorConfig::with_grid(1, 1), 256, 256);
  const auto gts = random_gts(50, 59);
  const std::vector<double> thresholds = dense_thresholds();
  for (auto _ : state) {
    benchmark::DoNotOptimize(coverage_curve(grid.boxes, gts, thresholds));
  }
}
BENCHMARK(BM_CoverageCurve);

}  // namespace
