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

// Mutable working state shared by the 3D build, repair and dynamic
// operations. Not part of the installed interface.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spherehull/geometry.hpp"
#include "spherehull/hull_mesh.hpp"
#include "spherehull/support_tree.hpp"

namespace spherehull::detail {

using Coord3 = SupportTree<3>::Coord;

inline Coord3 ToCoord(const Vec3& v) { return {v.x, v.y, v.z}; }

/// Two unit vectors completing d to a right-handed orthonormal frame.
std::array<Coord3, 2> TiebreakFrame(const Vec3& d);

/// Max-spread pivot over `indices` of `coords`: p0 = first, p1 farthest
/// from p0, p2 farthest from line(p0,p1), p3 farthest from their plane.
/// nullopt when every candidate lies within `flat_eps` of a plane.
std::optional<std::array<std::size_t, 4>> PivotQuadruple(std::span<const Point3> coords,
                                                         std::span<const std::size_t> indices,
                                                         double flat_eps);

/// True when (a,b,c,d) spans a tetrahedron whose fourth vertex is more than
/// flat_eps off the plane of the other three.
bool IsSolidQuadruple(std::span<const Point3> coords, const std::array<std::size_t, 4>& q,
                      double flat_eps, double degeneracy_eps);

/// Incremental hull over a point array. Faces are index triples; plane
/// tests use `geometry`.
class HullBuilder {
 public:
  HullBuilder(std::span<const Point3> geometry, double degeneracy_eps);

  void Seed(const std::array<std::size_t, 4>& q);
  void Load(std::span<const HullFace> faces);

  /// Expands over point `index` if it sees any face by more than eps.
  /// Returns false when the point is absorbed. Throws kBrokenHorizon and
  /// leaves the state untouched if the horizon is not one cycle.
  bool Insert(std::size_t index, double eps);

  /// Per-face support queries until no point of `tree` lies more than eps
  /// in front of any face. Returns the number of inserted points.
  std::size_t Repair(const SupportTree<3>& tree, double eps);

  /// Faces created by the last successful Insert.
  const std::vector<std::uint32_t>& last_created() const { return last_created_; }
  std::size_t num_faces() const { return alive_.size(); }

  /// Alive faces. Normals are taken from `normal_source` via TriangleNormal
  /// unless it is the builder's own geometry.
  std::vector<HullFace> Export(std::span<const Point3> normal_source) const;

 private:
  struct WorkFace {
    Triangle v;
    Vec3 n;
    double offset;
    std::int64_t alive_pos;
  };

  double Side(const WorkFace& f, const Point3& p) const { return Dot(f.n, p) - f.offset; }
  Vec3 ComputeNormal(const Triangle& t) const;
  std::uint32_t AddFace(const Triangle& t, const Vec3& n);
  void KillFace(std::uint32_t id);

  std::span<const Point3> geometry_;
  double degeneracy_eps_;
  std::vector<WorkFace> faces_;
  std::vector<std::uint32_t> alive_;
  std::vector<std::uint32_t> visible_;
  std::vector<std::uint32_t> last_created_;
};

}  // namespace spherehull::detail
