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

#include <chrono>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "spherehull/geometry.hpp"
#include "spherehull/hull_mesh.hpp"

namespace spherehull {

struct BuildStats {
  std::size_t input_count = 0;
  std::size_t dedup_count = 0;
  /// Culled surface points plus points added by the containment repair.
  std::size_t surface_count = 0;
  std::size_t repaired_count = 0;
  std::size_t hull_vertex_count = 0;
  std::size_t hull_face_count = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct BuildResult {
  HullMesh hull;
  BuildStats stats;
};

/// Coordinates used by the visibility and horizon tests during expansion.
enum class PredicateSpace {
  /// Original point coordinates. Output is convex in the coordinates it
  /// indexes and passes the containment repair.
  kOriginal,
  /// Sphere-projected coordinates, no repair. The sphere hull's
  /// triangulation can differ from the true hull's, so the result indexed
  /// back to original points is not guaranteed convex. Kept for study.
  kSphere,
};

struct BuildOptions {
  PredicateSpace space = PredicateSpace::kOriginal;
  bool repair = true;
};

/// Indices of a maximal subset whose pairwise distances exceed dedup_eps.
/// The first occurrence wins and input order is preserved.
std::vector<std::size_t> DedupPoints(std::span<const Point3> cloud, double dedup_eps);

/// Radial support culling: for every candidate, the support point along
/// centroid->candidate. Returns the distinct support indices in discovery
/// order. Exact ties along a direction are broken by two further
/// orthogonal directions so each result is an extreme point of the cloud.
/// Throws kDegenerateCloud if every candidate coincides with the centroid.
std::vector<std::size_t> CullInterior(std::span<const Point3> cloud,
                                      std::span<const std::size_t> candidates,
                                      const Point3& centroid,
                                      const ToleranceConfig& config = {});
std::vector<std::size_t> CullInterior(std::span<const Point3> cloud, const Point3& centroid,
                                      const ToleranceConfig& config = {});

/// Seed tetrahedron over four of the surface points. Candidates are picked
/// by a max-spread pivot scan on the sphere points (p0, farthest from p0,
/// farthest from their line, farthest from their plane) and must also be
/// non-degenerate in the original coordinates. Faces are wound outward.
/// Throws kInsufficientPoints (< 4) or kDegenerateCloud (flat).
HullMesh InitialTetrahedron(std::shared_ptr<const PointCloud> cloud,
                            std::span<const Point3> sphere_points,
                            std::span<const std::size_t> original_indices,
                            const ToleranceConfig& config = {});

/// Ids (positions in hull.faces()) of faces with PlaneSide(n, v, p) > eps.
std::vector<std::size_t> VisibleFaces(const HullMesh& hull, const Point3& p, double eps);

/// Edges used exactly once by `faces`, in their original winding.
std::vector<DirectedEdge> HorizonEdges(std::span<const Triangle> faces);

/// True iff the directed edges form one closed loop through distinct
/// vertices.
bool IsSingleCycle(std::span<const DirectedEdge> edges);

/// Adds cloud point `p_index` to the hull: removes the faces it sees by more
/// than `eps` and fans new faces from it over the horizon. Returns the hull
/// unchanged when nothing is visible. Throws kBrokenHorizon when the
/// horizon is not a single cycle.
HullMesh Expand(const HullMesh& hull, std::size_t p_index, double eps,
                const ToleranceConfig& config = {});

/// Full pipeline: dedup, centroid, support culling, sphere projection,
/// seed tetrahedron, expansion over the surface points, containment repair.
/// Throws kInsufficientPoints, kDegenerateCloud or kInvalidArgument.
BuildResult BuildHull(std::span<const Point3> cloud, const ToleranceConfig& config = {},
                      const BuildOptions& options = {});
BuildResult BuildHull(std::shared_ptr<const PointCloud> cloud, const ToleranceConfig& config = {},
                      const BuildOptions& options = {});

/// Inserts every non-removed cloud point lying more than expansion_eps
/// outside some face. Works face by face: the point farthest in front of a
/// face is found with a support query along its normal.
HullMesh RepairContainment(const HullMesh& hull, const ToleranceConfig& config = {});

/// Appends p to the source cloud and expands the hull if p lies outside.
HullMesh InsertPoint(const HullMesh& hull, const Point3& p, const ToleranceConfig& config = {});

/// Marks `index` removed. Interior points leave the faces untouched; hull
/// vertices trigger a rebuild from the remaining points. Throws
/// kUnknownIndex for out-of-range or already removed indices.
HullMesh RemovePoint(const HullMesh& hull, std::size_t index, const ToleranceConfig& config = {});

}  // namespace spherehull
