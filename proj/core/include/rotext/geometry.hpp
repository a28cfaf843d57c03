// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rotext/errors.hpp"

namespace rotext {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {x * k, y * k}; }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Rotated rectangle (cx, cy, w, h, theta): center in pixels, extents in
/// pixels, theta in radians measured against the horizontal axis.
///
/// Construction rejects non-finite fields and non-positive extents. Any
/// finite angle is allowed; canonicalize() maps it into [-pi/4, pi/4).
class RotatedBox {
 public:
  RotatedBox() = default;  // unit square at the origin
  RotatedBox(double cx, double cy, double w, double h, double theta);

  double cx() const { return cx_; }
  double cy() const { return cy_; }
  double w() const { return w_; }
  double h() const { return h_; }
  double theta() const { return theta_; }
  double area() const { return w_ * h_; }

 private:
  double cx_ = 0.0;
  double cy_ = 0.0;
  double w_ = 1.0;
  double h_ = 1.0;
  double theta_ = 0.0;
};

/// Convex polygon with counter-clockwise vertices (positive shoelace area).
/// Either empty or at least a triangle; convexity is checked with a
/// tolerance that scales with the squared coordinate magnitude, since
/// cross products are areas.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;  // empty
  explicit ConvexPolygon(std::vector<Vec2> vertices);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  std::size_t size() const { return vertices_.size(); }

  /// Shoelace area; 0 for the empty polygon.
  double area() const;

 private:
  std::vector<Vec2> vertices_;
};

/// Rectangular IoU values for a pair of box lists, row = first list.
class IouMatrix {
 public:
  IouMatrix() = default;
  IouMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Returns the geometrically identical box with theta in [-pi/4, pi/4).
/// Each +-pi/2 step of the angle swaps the extents. The reduced range keeps
/// tan(theta) inside (-1, 1) for the delta transforms.
RotatedBox canonicalize(const RotatedBox& box);

/// Four CCW corners of the box; polygon area equals w*h.
ConvexPolygon to_polygon(const RotatedBox& box);

/// Sutherland-Hodgman intersection of two convex polygons.
/// Returns an empty polygon when the inputs are disjoint.
ConvexPolygon clip(const ConvexPolygon& subject, const ConvexPolygon& clipper);

/// Exact intersection-over-union of two rotated rectangles, in [0, 1].
/// A zero-area intersection yields exactly 0.0; iou(a, a) is exactly 1.0.
double rotated_iou(const RotatedBox& a, const RotatedBox& b);

/// Pairwise rotated IoU; entry (i, j) = rotated_iou(as[i], bs[j]).
IouMatrix iou_matrix(std::span<const RotatedBox> as, std::span<const RotatedBox> bs);

/// Convex hull (CCW, collinear points dropped) via monotone chain.
std::vector<Vec2> convex_hull(std::span<const Vec2> points);

/// Minimum-area enclosing rotated rectangle of a point set, canonicalized.
/// The optimal rectangle has a side collinear with a hull edge, so the hull
/// edges are scanned caliper-style. Among equal-area candidates the one
/// with the smallest canonical |theta| wins.
/// Throws DegenerateGeometryError for collinear or insufficient input.
RotatedBox min_area_rect(std::span<const Vec2> points);

}  // namespace rotext
