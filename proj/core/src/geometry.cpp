// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#include "rotext/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace rotext {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;
constexpr double kQuarterPi = kPi / 4.0;

double coordinate_scale(std::span<const Vec2> vertices) {
  double scale = 1.0;
  for (const auto& v : vertices) {
    scale = std::max({scale, std::abs(v.x), std::abs(v.y)});
  }
  return scale;
}

double shoelace(const std::vector<Vec2>& vs) {
  if (vs.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0, n = vs.size(); i < n; ++i) {
    twice += cross(vs[i], vs[(i + 1) % n]);
  }
  return 0.5 * twice;
}

}  // namespace

RotatedBox::RotatedBox(double cx, double cy, double w, double h, double theta)
    : cx_(cx), cy_(cy), w_(w), h_(h), theta_(theta) {
  if (!std::isfinite(cx) || !std::isfinite(cy) || !std::isfinite(w) ||
      !std::isfinite(h) || !std::isfinite(theta)) {
    throw InvalidBoxError("rotated box has non-finite fields");
  }
  if (!(w > 0.0) || !(h > 0.0)) {
    throw InvalidBoxError("rotated box extents must be positive, got w=" +
                          std::to_string(w) + " h=" + std::to_string(h));
  }
}

ConvexPolygon::ConvexPolygon(std::vector<Vec2> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) return;
  if (vertices_.size() < 3) {
    throw DegenerateGeometryError("polygon needs 0 or >= 3 vertices");
  }
  const double scale = coordinate_scale(vertices_);
  const double eps = 1e-9 * scale * scale;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = vertices_[(i + 1) % n] - vertices_[i];
    const Vec2 e1 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
    if (cross(e0, e1) < -eps) {
      throw DegenerateGeometryError("polygon is not convex/CCW");
    }
  }
}

double ConvexPolygon::area() const { return shoelace(vertices_); }

RotatedBox canonicalize(const RotatedBox& box) {
  // remainder() lands in [-pi/2, pi/2]; the rectangle is pi-periodic.
  double t = std::remainder(box.theta(), kPi);
  double w = box.w();
  double h = box.h();
  if (t >= kHalfPi) t -= kPi;
  if (t >= kQuarterPi) {
    t -= kHalfPi;
    std::swap(w, h);
  } else if (t < -kQuarterPi) {
    t += kHalfPi;
    std::swap(w, h);
  }
  return RotatedBox(box.cx(), box.cy(), w, h, t);
}

ConvexPolygon to_polygon(const RotatedBox& box) {
  const double c = std::cos(box.theta());
  const double s = std::sin(box.theta());
  const double hw = 0.5 * box.w();
  const double hh = 0.5 * box.h();
  const Vec2 local[4] = {{-hw, -hh}, {hw, -hh}, {hw, hh}, {-hw, hh}};
  std::vector<Vec2> world;
  world.reserve(4);
  for (const auto& p : local) {
    world.push_back({box.cx() + c * p.x - s * p.y, box.cy() + s * p.x + c * p.y});
  }
  return ConvexPolygon(std::move(world));
}

ConvexPolygon clip(const ConvexPolygon& subject, const ConvexPolygon& clipper) {
  if (subject.empty() || clipper.empty()) return {};

  const double scale = std::max(coordinate_scale(subject.vertices()),
                                coordinate_scale(clipper.vertices()));
  const double eps = 1e-9 * scale * scale;  // cross products scale as area
  const double dedup_eps = 1e-9 * scale;

  std::vector<Vec2> output = subject.vertices();
  const auto& cv = clipper.vertices();
  for (std::size_t e = 0, m = cv.size(); e < m && !output.empty(); ++e) {
    const Vec2 a = cv[e];
    const Vec2 edge = cv[(e + 1) % m] - a;
    std::vector<Vec2> input = std::move(output);
    output.clear();
    const std::size_t n = input.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& prev = input[(i + n - 1) % n];
      const Vec2& cur = input[i];
      const double side_prev = cross(edge, prev - a);
      const double side_cur = cross(edge, cur - a);
      const bool in_prev = side_prev >= -eps;
      const bool in_cur = side_cur >= -eps;
      if (in_cur) {
        if (!in_prev) {
          const double t = side_prev / (side_prev - side_cur);
          output.push_back(prev + (cur - prev) * t);
        }
        output.push_back(cur);
      } else if (in_prev) {
        const double t = side_prev / (side_prev - side_cur);
        output.push_back(prev + (cur - prev) * t);
      }
    }
  }

  // Drop repeated consecutive vertices introduced by on-edge intersections.
  std::vector<Vec2> dedup;
  dedup.reserve(output.size());
  for (const auto& v : output) {
    if (dedup.empty() || std::abs(v.x - dedup.back().x) > dedup_eps ||
        std::abs(v.y - dedup.back().y) > dedup_eps) {
      dedup.push_back(v);
    }
  }
  while (dedup.size() > 1 && std::abs(dedup.front().x - dedup.back().x) <= dedup_eps &&
         std::abs(dedup.front().y - dedup.back().y) <= dedup_eps) {
    dedup.pop_back();
  }
  if (dedup.size() < 3) return {};
  return ConvexPolygon(std::move(dedup));
}

double rotated_iou(const RotatedBox& a, const RotatedBox& b) {
  // Circumcircle reject: disjoint pairs are exact zeros.
  const double dx = a.cx() - b.cx();
  const double dy = a.cy() - b.cy();
  const double ra = 0.5 * std::hypot(a.w(), a.h());
  const double rb = 0.5 * std::hypot(b.w(), b.h());
  if (dx * dx + dy * dy > (ra + rb) * (ra + rb)) return 0.0;

  const ConvexPolygon pa = to_polygon(a);
  const ConvexPolygon pb = to_polygon(b);
  const double inter = clip(pa, pb).area();
  if (inter <= 0.0) return 0.0;
  // Shoelace areas on both sides keep iou(a, a) exactly 1.
  const double uni = pa.area() + pb.area() - inter;
  return std::clamp(inter / uni, 0.0, 1.0);
}

IouMatrix iou_matrix(std::span<const RotatedBox> as, std::span<const RotatedBox> bs) {
  IouMatrix m(as.size(), bs.size());
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (std::size_t j = 0; j < bs.size(); ++j) {
      m(i, j) = rotated_iou(as[i], bs[j]);
    }
  }
  return m;
}

std::vector<Vec2> convex_hull(std::span<const Vec2> points) {
  std::vector<Vec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2& a, const Vec2& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;

  std::vector<Vec2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
    while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

RotatedBox min_area_rect(std::span<const Vec2> points) {
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InvalidInputError("min_area_rect: non-finite point");
    }
  }
  if (points.size() < 3) {
    throw DegenerateGeometryError("min_area_rect needs at least 3 points");
  }
  const std::vector<Vec2> hull = convex_hull(points);
  if (hull.size() < 3) {
    throw DegenerateGeometryError("min_area_rect: points are collinear");
  }

  bool have_best = false;
  double best_area = 0.0;
  RotatedBox best;
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = hull[(i + 1) % n] - hull[i];
    const double len = std::hypot(e.x, e.y);
    if (len == 0.0) continue;
    const Vec2 u{e.x / len, e.y / len};
    const Vec2 v{-u.y, u.x};
    double umin = dot(hull[0], u), umax = umin;
    double vmin = dot(hull[0], v), vmax = vmin;
    for (const auto& p : hull) {
      const double pu = dot(p, u);
      const double pv = dot(p, v);
      umin = std::min(umin, pu);
      umax = std::max(umax, pu);
      vmin = std::min(vmin, pv);
      vmax = std::max(vmax, pv);
    }
    const double w = umax - umin;
    const double h = vmax - vmin;
    const double area = w * h;
    if (!(w > 0.0) || !(h > 0.0)) continue;
    const double cu = 0.5 * (umin + umax);
    const double cv2 = 0.5 * (vmin + vmax);
    const RotatedBox candidate = canonicalize(
        RotatedBox(u.x * cu + v.x * cv2, u.y * cu + v.y * cv2, w, h,
                   std::atan2(u.y, u.x)));
    const double tol = 1e-9 * std::max(1.0, std::max(area, best_area));
    if (!have_best || area < best_area - tol ||
        (std::abs(area - best_area) <= tol &&
         std::abs(candidate.theta()) < std::abs(best.theta()))) {
      have_best = true;
      best_area = area;
      best = candidate;
    }
  }
  if (!have_best) {
    throw DegenerateGeometryError("min_area_rect: degenerate hull");
  }
  return best;
}

}  // namespace rotext
