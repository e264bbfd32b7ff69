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

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "spherehull/errors.hpp"

namespace spherehull {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Evaluation order is fixed (left to right); the kd-tree bound relies on it.
constexpr double Dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr Vec3 Cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double Length(const Vec3& v) { return std::sqrt(Dot(v, v)); }
inline double Distance(const Vec3& a, const Vec3& b) { return Length(a - b); }
inline bool IsFinite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

using Point3 = Vec3;
using PointCloud = std::vector<Point3>;

/// Unit-length vector. Only constructible through Normalize / FromUnit so
/// the unit-norm invariant holds for every instance.
class Direction3 {
 public:
  static constexpr double kUnitTolerance = 1e-9;

  /// Throws kDegeneratePoint when |v| <= min_length.
  static Direction3 Normalize(const Vec3& v, double min_length = 0.0);
  /// Accepts an already-unit vector; throws kInvalidArgument otherwise.
  static Direction3 FromUnit(const Vec3& v);

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  Direction3 operator-() const { return Direction3(-v_); }

 private:
  explicit Direction3(const Vec3& v) : v_(v) {}
  Vec3 v_;
};

/// The four epsilons of the pipeline. All are absolute distances in model
/// units except degeneracy_eps, which bounds cross-product norms.
struct ToleranceConfig {
  double dedup_eps = 1e-8;
  double plane_eps = 1e-9;
  double degeneracy_eps = 1e-12;
  double expansion_eps = 1e-9;

  /// Throws kInvalidArgument unless all values are positive and
  /// expansion_eps >= plane_eps.
  void Validate() const;
};

/// Arithmetic mean of the points.
Point3 Centroid(std::span<const Point3> points);
/// Mean over a subset given by indices.
Point3 Centroid(std::span<const Point3> points, std::span<const std::size_t> indices);

/// Index of the point maximizing d·p; ties go to the lowest index.
std::size_t SupportPoint(std::span<const Point3> points, const Direction3& d);

/// center + (p - center)/|p - center|.
Point3 ProjectToSphere(const Point3& p, const Point3& center,
                       double degeneracy_eps = ToleranceConfig{}.degeneracy_eps);

/// Unit normal of (b-a)x(c-a). Throws kDegenerateTriangle when the cross
/// product norm is <= degeneracy_eps.
Direction3 TriangleNormal(const Point3& a, const Point3& b, const Point3& c,
                          double degeneracy_eps = ToleranceConfig{}.degeneracy_eps);

/// n·p - n·v: positive when p is in front of the plane through v.
inline double PlaneSide(const Direction3& n, const Point3& v, const Point3& p) {
  return Dot(n.vec(), p) - Dot(n.vec(), v);
}

/// ((b-a)x(c-a))·(d-a) / 6; positive when d is in front of face (a,b,c).
double SignedTetVolume(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

}  // namespace spherehull
