// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include <benchmark/benchmark.h>

#include "rotext/coding.hpp"
#include "rotext/geometry.hpp"

namespace {

using namespace rotext;

constexpr double kPi = 3.141592653589793238462643383279502884;

std::vector<RotatedBox> random_boxes(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(0.0, 800.0);
  std::uniform_real_distribution<double> extent(8.0, 120.0);
  std::uniform_real_distribution<double> angle(-kPi / 4, kPi / 4);
  std::vector<RotatedBox> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(pos(rng), pos(rng), extent(rng), extent(rng), angle(rng));
  }
  return out;
}

// Pairs built by jittering a base box, so the polygons genuinely clip.
std::vector<std::pair<RotatedBox, RotatedBox>> overlapping_pairs(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> shift(-10.0, 10.0);
  std::uniform_real_distribution<double> angle(-0.3, 0.3);
  std::vector<std::pair<RotatedBox, RotatedBox>> out;
  out.reserve(n);
  for (const RotatedBox& a : random_boxes(n, 11)) {
    out.emplace_back(a, RotatedBox(a.cx() + shift(rng), a.cy() + shift(rng),
                                   a.w(), a.h(), angle(rng)));
  }
  return out;
}

void BM_RotatedIouOverlapping(benchmark::State& state) {
  const auto pairs = overlapping_pairs(512);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rotated_iou(pairs[i].first, pairs[i].second));
    i = (i + 1) % pairs.size();
  }
}
BENCHMARK(BM_RotatedIouOverlapping);

void BM_RotatedIouDisjoint(benchmark::State& state) {
  const auto boxes = random_boxes(512, 13);
  std::size_t i = 0;
  for (auto _ : state) {
    const RotatedBox& a = boxes[i];
    const RotatedBox far(a.cx() + 2000.0, a.cy(), a.w(), a.h(), a.theta());
    benchmark::DoNotOptimize(rotated_iou(a, far));
    i = (i + 1) % boxes.size();
  }
}
BENCHMARK(BM_RotatedIouDisjoint);

void BM_IouMatrix(benchmark::State& state) {
  const auto as = random_boxes(static_cast<std::size_t>(state.range(0)), 17);
  const auto bs = random_boxes(50, 19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iou_matrix(as, bs));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(as.size() * bs.size()));
}
BENCHMARK(BM_IouMatrix)->Arg(64)->Arg(256);

void BM_PolygonClip(benchmark::State& state) {
  const ConvexPolygon subject = to_polygon(RotatedBox(0, 0, 40, 20, 0.35));
  const ConvexPolygon clipper = to_polygon(RotatedBox(5, 3, 30, 25, -0.2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(clip(subject, clipper));
  }
}
BENCHMARK(BM_PolygonClip);

void BM_Canonicalize(benchmark::State& state) {
  const RotatedBox spun(10, 10, 30, 12, 11.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize(spun));
  }
}
BENCHMARK(BM_Canonicalize);

void BM_MinAreaRect(benchmark::State& state) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<Vec2> points;
  for (int i = 0; i < 100; ++i) {
    points.push_back({50.0 * unif(rng) + 10.0 * unif(rng),
                      20.0 * unif(rng) + 10.0 * unif(rng)});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_area_rect(points));
  }
}
BENCHMARK(BM_MinAreaRect);

void BM_EncodeDecode(benchmark::State& state) {
  const auto anchors = random_boxes(512, 29);
  const auto targets = random_boxes(512, 31);
  std::size_t i = 0;
  for (auto _ : state) {
    const Delta5 d = encode(anchors[i], targets[i]);
    benchmark::DoNotOptimize(decode(anchors[i], d));
    i = (i + 1) % anchors.size();
  }
}
BENCHMARK(BM_EncodeDecode);

}  // namespace

BENCHMARK_MAIN();
