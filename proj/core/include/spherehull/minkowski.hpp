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

#include <array>
#include <span>

#include "spherehull/geometry.hpp"

namespace spherehull {

/// Row-major 3x3 matrix.
struct Mat3 {
  std::array<std::array<double, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

  static Mat3 Identity() { return {}; }
  /// Counter-clockwise rotation about +z.
  static Mat3 RotationZ(double degrees);

  Vec3 operator*(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }

  /// |R^T R - I| <= tol entrywise.
  bool IsOrthonormal(double tol = 1e-9) const;
};

/// All sums a_i + R b_j in (i, j) lexicographic order. The result is
/// deliberately redundant: it is a degeneracy stress cloud, not a hull.
/// Throws kEmptyInput or kInvalidArgument (R not orthonormal).
PointCloud MinkowskiCloud(std::span<const Point3> a, std::span<const Point3> b,
                          const Mat3& rotation = Mat3::Identity());

}  // namespace spherehull
