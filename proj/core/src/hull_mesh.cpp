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

#include "spherehull/hull_mesh.hpp"

#include <algorithm>

namespace spherehull {

HullMesh::HullMesh(std::shared_ptr<const PointCloud> source, std::vector<HullFace> faces,
                   std::vector<std::size_t> removed)
    : source_(std::move(source)), faces_(std::move(faces)), removed_(std::move(removed)) {
  std::sort(removed_.begin(), removed_.end());
  removed_.erase(std::unique(removed_.begin(), removed_.end()), removed_.end());
  vertex_indices_.reserve(faces_.size() / 2 + 2);
  for (const HullFace& f : faces_) {
    vertex_indices_.insert(vertex_indices_.end(), f.v.begin(), f.v.end());
  }
  std::sort(vertex_indices_.begin(), vertex_indices_.end());
  vertex_indices_.erase(std::unique(vertex_indices_.begin(), vertex_indices_.end()),
                        vertex_indices_.end());
  if (!vertex_indices_.empty()) centroid_ = Centroid(*source_, vertex_indices_);
}

HullMesh HullMesh::FromTriangles(std::shared_ptr<const PointCloud> source,
                                 std::span<const Triangle> triangles, double degeneracy_eps) {
  std::vector<HullFace> faces;
  faces.reserve(triangles.size());
  for (const Triangle& t : triangles) {
    const PointCloud& pts = *source;
    faces.push_back({t, TriangleNormal(pts[t[0]], pts[t[1]], pts[t[2]], degeneracy_eps)});
  }
  return HullMesh(std::move(source), std::move(faces));
}

bool HullMesh::IsRemoved(std::size_t index) const {
  return std::binary_search(removed_.begin(), removed_.end(), index);
}

bool HullMesh::IsVertex(std::size_t index) const {
  return std::binary_search(vertex_indices_.begin(), vertex_indices_.end(), index);
}

std::size_t HullMesh::num_edges() const {
  const auto tris = triangles();
  return CountEdges(tris).size();
}

std::vector<Triangle> HullMesh::triangles() const {
  std::vector<Triangle> out;
  out.reserve(faces_.size());
  for (const HullFace& f : faces_) out.push_back(f.v);
  return out;
}

std::vector<Edge> CountEdges(std::span<const Triangle> faces) {
  std::vector<Edge> all;
  all.reserve(faces.size() * 3);
  for (const Triangle& t : faces) {
    for (int k = 0; k < 3; ++k) all.push_back(Edge::Canonical(t[k], t[(k + 1) % 3]));
  }
  std::sort(all.begin(), all.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  std::vector<Edge> out;
  for (const Edge& e : all) {
    if (!out.empty() && out.back() == e) {
      ++out.back().multiplicity;
    } else {
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace spherehull
