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
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "spherehull/geometry.hpp"

namespace spherehull {

using Triangle = std::array<std::size_t, 3>;

/// Triangle of indices into the source cloud, wound outward.
struct HullFace {
  Triangle v;
  Direction3 normal;

  std::size_t a() const { return v[0]; }
  std::size_t b() const { return v[1]; }
  std::size_t c() const { return v[2]; }
};

/// Undirected edge in canonical order (u < v) with the number of faces
/// using it.
struct Edge {
  std::size_t u;
  std::size_t v;
  int multiplicity = 1;

  static Edge Canonical(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
};

/// Directed edge as it appears in a face's winding.
struct DirectedEdge {
  std::size_t from;
  std::size_t to;
  bool operator==(const DirectedEdge&) const = default;
};

/// Closed triangulated convex surface over a point cloud. Faces reference
/// cloud indices only; the mesh never owns coordinates of its own.
///
/// Immutable once constructed. The source cloud is shared, so copies are
/// cheap in the cloud and linear in the face count.
class HullMesh {
 public:
  HullMesh() = default;

  /// Faces must already carry normals consistent with the source points.
  HullMesh(std::shared_ptr<const PointCloud> source, std::vector<HullFace> faces,
           std::vector<std::size_t> removed = {});

  /// Computes normals with TriangleNormal; throws kDegenerateTriangle.
  static HullMesh FromTriangles(std::shared_ptr<const PointCloud> source,
                                std::span<const Triangle> triangles,
                                double degeneracy_eps = ToleranceConfig{}.degeneracy_eps);

  const std::vector<HullFace>& faces() const { return faces_; }
  /// Sorted, unique indices appearing in faces.
  const std::vector<std::size_t>& vertex_indices() const { return vertex_indices_; }
  /// Mean of the hull vertices; strictly interior for a valid hull.
  const Point3& centroid() const { return centroid_; }
  const std::shared_ptr<const PointCloud>& source() const { return source_; }
  std::span<const Point3> points() const {
    return source_ ? std::span<const Point3>(*source_) : std::span<const Point3>();
  }
  const Point3& point(std::size_t i) const { return (*source_)[i]; }

  /// Cloud indices deleted through RemovePoint; they take no part in
  /// containment or rebuilds.
  const std::vector<std::size_t>& removed() const { return removed_; }
  bool IsRemoved(std::size_t index) const;
  bool IsVertex(std::size_t index) const;

  std::size_t num_vertices() const { return vertex_indices_.size(); }
  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_edges() const;
  bool empty() const { return faces_.empty(); }

  std::vector<Triangle> triangles() const;

 private:
  std::shared_ptr<const PointCloud> source_;
  std::vector<HullFace> faces_;
  std::vector<std::size_t> vertex_indices_;
  std::vector<std::size_t> removed_;
  Point3 centroid_;
};

/// Edges used by the given faces with their multiplicities, sorted.
std::vector<Edge> CountEdges(std::span<const Triangle> faces);

}  // namespace spherehull
