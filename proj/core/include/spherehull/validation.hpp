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

#include <span>
#include <string>
#include <vector>

#include "spherehull/geometry.hpp"
#include "spherehull/hull_mesh.hpp"

namespace spherehull {

/// Any triangle soup over a point array (e.g. a mesh read from disk).
struct MeshView {
  std::span<const Point3> points;
  std::span<const Triangle> triangles;
};

/// True iff p is behind every face plane by at least -eps.
bool ContainsPoint(const HullMesh& hull, const Point3& p, double eps);

/// Every vertex lies within eps behind every face plane.
bool IsConvex(const HullMesh& hull, double eps);
bool IsConvex(const MeshView& mesh, double eps);

/// Every edge shared by exactly two faces in opposite directions, and
/// V - E + F = 2.
bool IsClosedManifold(const HullMesh& hull);
bool IsClosedManifold(std::span<const Triangle> triangles);

/// Every face normal points away from the mean of the mesh vertices.
bool IsOutwardOriented(const HullMesh& hull);
bool IsOutwardOriented(const MeshView& mesh);

/// V - E + F over the vertices referenced by the triangles.
long EulerCharacteristic(std::span<const Triangle> triangles);

/// O(n^4) reference hull. A triangle becomes a facet candidate when all
/// remaining points are on one side of its plane (within plane_eps);
/// coplanar facets are triangulated as a fan from their lowest index
/// vertex. Intended for n up to about 60. Throws kInsufficientPoints and
/// kDegenerateCloud.
HullMesh BruteForceHull(std::span<const Point3> cloud, double plane_eps = ToleranceConfig{}.plane_eps);

/// Enclosed volume from tetrahedra against the vertex centroid.
double Volume(const HullMesh& hull);
double Volume(const MeshView& mesh);
double SurfaceArea(const HullMesh& hull);

struct ValidationReport {
  bool convex = false;
  bool manifold = false;
  bool outward = false;
  bool euler = false;
  bool contains_all = false;
  std::size_t first_outside = 0;

  bool ok() const { return convex && manifold && outward && euler && contains_all; }
  std::string Summary() const;
};

/// Full check used by tests and the benchmark gate: convexity and
/// containment at `eps` over every non-removed source point.
ValidationReport ValidateHull(const HullMesh& hull, double eps);

}  // namespace spherehull
