// Copyright 2026 The SphereHull Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spherehull/geometry.hpp"

namespace spherehull {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr bool operator==(const Vec2&) const = default;
};

using Point2 = Vec2;
using PointCloud2 = std::vector<Point2>;

constexpr double Dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
/// z component of (a x b).
constexpr double Cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double Length(const Vec2& v) { return std::sqrt(Dot(v, v)); }

/// Counter-clockwise convex polygon over cloud indices.
struct Polygon {
  std::vector<std::size_t> vertices;
};

/// Same pipeline as the 3D build in the plane: dedup, centroid, radial
/// support culling, projection to the unit circle (which fixes the angular
/// insertion order), edge-by-edge expansion and a containment repair.
/// Collinear boundary points are dropped. Throws kInsufficientPoints
/// (< 3 distinct) and kDegenerateCloud (collinear).
Polygon BuildHull2d(std::span<const Point2> cloud, const ToleranceConfig& config = {});

/// Shoelace area; positive for counter-clockwise order.
double SignedArea(std::span<const Point2> cloud, const Polygon& polygon);

/// Consecutive edge turns are all >= -eps (scaled by edge lengths) and the
/// polygon is counter-clockwise.
bool IsConvexPolygon(std::span<const Point2> cloud, const Polygon& polygon, double eps);

/// Every point lies within eps inside every edge line.
bool PolygonContains(std::span<const Point2> cloud, const Polygon& polygon, const Point2& p,
                     double eps);

}  // namespace spherehull
