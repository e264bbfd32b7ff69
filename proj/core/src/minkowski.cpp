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

#include "spherehull/minkowski.hpp"

#include <cmath>
#include <numbers>

namespace spherehull {

Mat3 Mat3::RotationZ(double degrees) {
  const double t = degrees * std::numbers::pi / 180.0;
  const double c = std::cos(t);
  const double s = std::sin(t);
  Mat3 r;
  r.m = {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
  return r;
}

bool Mat3::IsOrthonormal(double tol) const {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double dot = 0.0;
      for (int k = 0; k < 3; ++k) dot += m[k][i] * m[k][j];
      if (std::abs(dot - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

PointCloud MinkowskiCloud(std::span<const Point3> a, std::span<const Point3> b,
                          const Mat3& rotation) {
  if (a.empty() || b.empty()) throw HullError(ErrorCode::kEmptyInput, "Minkowski sum of an empty cloud");
  if (!rotation.IsOrthonormal()) {
    throw HullError(ErrorCode::kInvalidArgument, "rotation matrix is not orthonormal");
  }
  PointCloud rotated;
  rotated.reserve(b.size());
  for (const Point3& q : b) rotated.push_back(rotation * q);
  PointCloud out;
  out.reserve(a.size() * b.size());
  for (const Point3& p : a) {
    for (const Point3& q : rotated) out.push_back(p + q);
  }
  return out;
}

}  // namespace spherehull
