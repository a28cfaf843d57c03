// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "rotext/coding.hpp"
#include "rotext/errors.hpp"
#include "support/oracles.hpp"

using namespace rotext;
using rotext::testing::random_box;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("coding") {

TEST_CASE("normalization defaults") {
  const NormalizationParams norm;
  for (double m : norm.mean()) CHECK(m == 0.0);
  CHECK(norm.sigma() == std::array<double, 5>{0.1, 0.1, 0.2, 0.2, 0.1});

  CHECK_THROWS_AS(NormalizationParams({0, 0, 0, 0, 0}, {0.1, 0.1, 0, 0.2, 0.1}),
                  ConfigError);
  CHECK_THROWS_AS(
      NormalizationParams({0, 0, 0, 0, 0}, {0.1, 0.1, -0.2, 0.2, 0.1}),
      ConfigError);
}

TEST_CASE("identical pair encodes to zero") {
  const RotatedBox b(3, -7, 5, 2, 0.3);
  const Delta5 d = encode(b, b);
  CHECK(d.dx == 0.0);
  CHECK(d.dy == 0.0);
  CHECK(d.dw == 0.0);
  CHECK(d.dh == 0.0);
  CHECK(d.dtheta == 0.0);
}

TEST_CASE("hand-computed offsets") {
  const RotatedBox anchor(0, 0, 2, 2, 0);

  SUBCASE("translation and scale") {
    const Delta5 d = encode(anchor, RotatedBox(1, 1, 4, 4, 0));
    CHECK(d.dx == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(d.dy == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(d.dw == doctest::Approx(std::log(2.0) / 0.2).epsilon(1e-12));
    CHECK(d.dh == doctest::Approx(std::log(2.0) / 0.2).epsilon(1e-12));
    CHECK(d.dtheta == 0.0);
  }

  SUBCASE("pure rotation goes through tan") {
    const Delta5 d = encode(anchor, RotatedBox(0, 0, 2, 2, kPi / 6));
    CHECK(d.dx == 0.0);
    CHECK(d.dy == 0.0);
    CHECK(d.dw == 0.0);
    CHECK(d.dh == 0.0);
    CHECK(d.dtheta == doctest::Approx(std::tan(kPi / 6) / 0.1).epsilon(1e-12));
  }
}

TEST_CASE("unit normalization reproduces the raw formulas") {
  const NormalizationParams unit({0, 0, 0, 0, 0}, {1, 1, 1, 1, 1});
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const RotatedBox a = random_box(rng, -20, 20, 1, 15);
    const RotatedBox g = random_box(rng, -20, 20, 1, 15);
    const Delta5 d = encode(a, g, unit);
    CHECK(d.dx == doctest::Approx((g.cx() - a.cx()) / a.w()).epsilon(1e-14));
    CHECK(d.dy == doctest::Approx((g.cy() - a.cy()) / a.h()).epsilon(1e-14));
    CHECK(d.dw == doctest::Approx(std::log(g.w() / a.w())).epsilon(1e-14));
    CHECK(d.dh == doctest::Approx(std::log(g.h() / a.h())).epsilon(1e-14));
    CHECK(d.dtheta ==
          doctest::Approx(std::tan(g.theta()) - std::tan(a.theta())).epsilon(1e-14));
  }
}

TEST_CASE("decode inverts encode") {
  SUBCASE("hand case") {
    const RotatedBox anchor(0, 0, 2, 2, 0);
    const RotatedBox target(1, 1, 4, 4, 0);
    const RotatedBox back = decode(anchor, encode(anchor, target));
    CHECK(back.cx() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(back.cy() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(back.w() == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(back.h() == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(std::abs(back.theta()) <= 1e-12);
  }

  SUBCASE("random canonical pairs") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 2000; ++i) {
      const RotatedBox a = random_box(rng, -50, 50, 0.5, 30);
      const RotatedBox g = random_box(rng, -50, 50, 0.5, 30);
      const RotatedBox back = decode(a, encode(a, g));
      CHECK(back.cx() == doctest::Approx(g.cx()).epsilon(1e-12));
      CHECK(back.cy() == doctest::Approx(g.cy()).epsilon(1e-12));
      CHECK(back.w() == doctest::Approx(g.w()).epsilon(1e-12));
      CHECK(back.h() == doctest::Approx(g.h()).epsilon(1e-12));
      CHECK(std::abs(back.theta() - g.theta()) <= 1e-12);
    }
  }

  SUBCASE("custom normalization round-trips too") {
    const NormalizationParams norm({0.01, -0.02, 0.1, 0.0, 0.005},
                                   {0.15, 0.2, 0.25, 0.3, 0.12});
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
      const RotatedBox a = random_box(rng, -20, 20, 1, 10);
      const RotatedBox g = random_box(rng, -20, 20, 1, 10);
      const RotatedBox back = decode(a, encode(a, g, norm), norm);
      CHECK(back.w() == doctest::Approx(g.w()).epsilon(1e-11));
      CHECK(std::abs(back.theta() - g.theta()) <= 1e-11);
    }
  }
}

TEST_CASE("decoded boxes come back canonical") {
  // Raw angle delta of 1 lands on atan(1) = pi/4, which wraps to -pi/4.
  const RotatedBox anchor(0, 0, 2, 2, 0);
  const RotatedBox out = decode(anchor, {0, 0, 0, 0, 10.0});
  CHECK(out.w() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(out.h() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(out.theta() + kPi / 4) <= 1e-12);
}

TEST_CASE("shape-only subset") {
  const RotatedBox a(4, 4, 16, 16, 0);

  SUBCASE("matches the tail of the full encoding") {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 100; ++i) {
      const RotatedBox g = random_box(rng, -20, 20, 1, 30);
      const Delta5 full = encode(a, g);
      const Delta3 shape = encode_shape(a, g);
      CHECK(shape.dw == full.dw);
      CHECK(shape.dh == full.dh);
      CHECK(shape.dtheta == full.dtheta);
    }
  }

  SUBCASE("height doubling") {
    const Delta3 d = encode_shape(a, RotatedBox(4, 4, 16, 32, 0));
    CHECK(d.dw == 0.0);
    CHECK(d.dh == doctest::Approx(std::log(2.0) / 0.2).epsilon(1e-12));
    CHECK(d.dtheta == 0.0);
  }

  SUBCASE("centers are deliberately invisible") {
    const Delta3 d = encode_shape(a, RotatedBox(0, 0, 16, 16, 0));
    CHECK(d.dw == 0.0);
    CHECK(d.dh == 0.0);
    CHECK(d.dtheta == 0.0);
  }
}

TEST_CASE("angle domain is enforced at the boundary") {
  const RotatedBox near_vertical(0, 0, 2, 2, kPi / 2 - 1e-4);
  const RotatedBox ok(0, 0, 2, 2, 0);
  CHECK_THROWS_AS(encode(near_vertical, ok), AngleDomainError);
  CHECK_THROWS_AS(encode(ok, near_vertical), AngleDomainError);
  CHECK_THROWS_AS(encode_shape(ok, near_vertical), AngleDomainError);
  // Slightly tilted boxes outside canonical range but inside the tan
  // domain still encode.
  CHECK_NOTHROW(encode(ok, RotatedBox(0, 0, 2, 2, 1.0)));
}

TEST_CASE("decode guards against overflow and garbage") {
  const RotatedBox anchor(0, 0, 2, 2, 0);
  // Default sigma_w = 0.2, so a normalized 300 de-normalizes to 60 > 50.
  CHECK_THROWS_AS(decode(anchor, {0, 0, 300.0, 0, 0}), NumericRangeError);
  CHECK_THROWS_AS(decode(anchor, {0, 0, 0, -300.0, 0}), NumericRangeError);
  const double nan = std::nan("");
  CHECK_THROWS_AS(decode(anchor, {nan, 0, 0, 0, 0}), InvalidInputError);
  CHECK_THROWS_AS(decode(anchor, {0, 0, 0, 0, INFINITY}), InvalidInputError);
}

}  // TEST_SUITE
