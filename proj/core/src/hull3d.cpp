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

#include "spherehull/hull3d.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "hull_builder.hpp"

namespace spherehull {
namespace {

using detail::Coord3;
using detail::HullBuilder;
using detail::ToCoord;

std::vector<Coord3> ToCoords(std::span<const Point3> cloud) {
  std::vector<Coord3> out;
  out.reserve(cloud.size());
  for (const Point3& p : cloud) out.push_back(ToCoord(p));
  return out;
}

std::vector<std::size_t> AllIndices(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

void CheckFinite(std::span<const Point3> cloud) {
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (!IsFinite(cloud[i])) {
      throw HullError(ErrorCode::kInvalidArgument,
                      "point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
}

std::vector<std::size_t> CullWithTree(std::span<const Point3> cloud,
                                      std::span<const std::size_t> candidates,
                                      const Point3& centroid, const SupportTree<3>& tree,
                                      const ToleranceConfig& config) {
  std::vector<std::size_t> out;
  std::vector<char> seen(cloud.size(), 0);
  bool any_direction = false;
  for (std::size_t i : candidates) {
    const Vec3 r = cloud[i] - centroid;
    const double len = Length(r);
    if (!(len > config.degeneracy_eps)) continue;
    any_direction = true;
    const Vec3 d = r / len;
    const std::size_t s = tree.Query(ToCoord(d), detail::TiebreakFrame(d));
    if (!seen[s]) {
      seen[s] = 1;
      out.push_back(s);
    }
  }
  if (!any_direction) {
    throw HullError(ErrorCode::kDegenerateCloud, "all points coincide with the centroid");
  }
  return out;
}

// Seed choice shared by InitialTetrahedron and the build: sphere pivot,
// validated in original coordinates, falling back to an original-space
// pivot over `fallback`.
std::array<std::size_t, 4> ChooseSeed(std::span<const Point3> originals,
                                      std::span<const Point3> sphere_by_index,
                                      std::span<const std::size_t> surface,
                                      std::span<const std::size_t> fallback,
                                      const ToleranceConfig& config) {
  if (auto q = detail::PivotQuadruple(sphere_by_index, surface, config.plane_eps)) {
    if (detail::IsSolidQuadruple(originals, *q, config.plane_eps, config.degeneracy_eps)) return *q;
  }
  if (auto q = detail::PivotQuadruple(originals, fallback, config.plane_eps)) {
    if (detail::IsSolidQuadruple(originals, *q, config.plane_eps, config.degeneracy_eps)) return *q;
  }
  throw HullError(ErrorCode::kDegenerateCloud,
                  "input is coplanar or collinear; use the 2D hull for flat point sets");
}

BuildResult BuildFromIndices(std::shared_ptr<const PointCloud> cloud_ptr,
                             std::span<const std::size_t> candidates,
                             const ToleranceConfig& config, const BuildOptions& options,
                             std::vector<std::size_t> removed) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  config.Validate();
  const PointCloud& cloud = *cloud_ptr;
  CheckFinite(cloud);

  BuildStats stats;
  stats.input_count = candidates.size();

  // Dedup among the candidates, keeping original indices.
  std::vector<std::size_t> survivors;
  {
    PointCloud sub;
    sub.reserve(candidates.size());
    for (std::size_t i : candidates) sub.push_back(cloud[i]);
    for (std::size_t k : DedupPoints(sub, config.dedup_eps)) survivors.push_back(candidates[k]);
  }
  stats.dedup_count = survivors.size();
  if (survivors.size() < 4) {
    throw HullError(ErrorCode::kInsufficientPoints,
                    "need at least 4 distinct points, got " + std::to_string(survivors.size()));
  }

  const Point3 centroid = Centroid(cloud, survivors);
  const std::vector<Coord3> coords = ToCoords(cloud);
  const SupportTree<3> tree(coords, survivors);

  std::vector<std::size_t> surface = CullWithTree(cloud, survivors, centroid, tree, config);

  PointCloud sphere(cloud.size());
  for (std::size_t i : surface) {
    sphere[i] = ProjectToSphere(cloud[i], centroid, config.degeneracy_eps);
  }

  const std::array<std::size_t, 4> seed = ChooseSeed(cloud, sphere, surface, survivors, config);

  const bool sphere_space = options.space == PredicateSpace::kSphere;
  if (sphere_space) {
    // Seed vertices from the fallback pivot need a projection too.
    for (std::size_t i : seed) sphere[i] = ProjectToSphere(cloud[i], centroid, config.degeneracy_eps);
  }
  const std::span<const Point3> geometry = sphere_space ? std::span<const Point3>(sphere)
                                                        : std::span<const Point3>(cloud);
  HullBuilder builder(geometry, config.degeneracy_eps);
  builder.Seed(seed);
  for (std::size_t i : surface) {
    if (std::find(seed.begin(), seed.end(), i) != seed.end()) continue;
    builder.Insert(i, config.expansion_eps);
  }
  if (!sphere_space && options.repair) {
    stats.repaired_count = builder.Repair(tree, config.expansion_eps);
  }
  stats.surface_count = surface.size() + stats.repaired_count;

  HullMesh hull(cloud_ptr, builder.Export(cloud), std::move(removed));
  stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  stats.hull_vertex_count = hull.num_vertices();
  stats.hull_face_count = hull.num_faces();
  // A fallback seed may hold a non-surface point that later got enclosed.
  stats.surface_count = std::max(stats.surface_count, stats.hull_vertex_count);
  return {std::move(hull), stats};
}

std::vector<std::size_t> ActiveIndices(const HullMesh& hull) {
  std::vector<std::size_t> out;
  out.reserve(hull.points().size());
  for (std::size_t i = 0; i < hull.points().size(); ++i) {
    if (!hull.IsRemoved(i)) out.push_back(i);
  }
  return out;
}

struct CellKey {
  std::int64_t x, y, z;
  bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const {
    std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(k.y) * 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(k.z) * 0x165667B19E3779F9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

std::int64_t Cell(double v, double size) {
  const double c = std::floor(v / size);
  constexpr double kLimit = 4.0e18;
  return static_cast<std::int64_t>(std::clamp(c, -kLimit, kLimit));
}

}  // namespace

std::vector<std::size_t> DedupPoints(std::span<const Point3> cloud, double dedup_eps) {
  if (!(dedup_eps > 0.0)) throw HullError(ErrorCode::kInvalidArgument, "dedup_eps must be positive");
  std::unordered_map<CellKey, std::vector<std::size_t>, CellKeyHash> grid;
  grid.reserve(cloud.size());
  std::vector<std::size_t> kept;
  kept.reserve(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const Point3& p = cloud[i];
    const CellKey key{Cell(p.x, dedup_eps), Cell(p.y, dedup_eps), Cell(p.z, dedup_eps)};
    bool duplicate = false;
    for (std::int64_t dx = -1; dx <= 1 && !duplicate; ++dx) {
      for (std::int64_t dy = -1; dy <= 1 && !duplicate; ++dy) {
        for (std::int64_t dz = -1; dz <= 1 && !duplicate; ++dz) {
          auto it = grid.find({key.x + dx, key.y + dy, key.z + dz});
          if (it == grid.end()) continue;
          for (std::size_t j : it->second) {
            if (Distance(cloud[j], p) <= dedup_eps) {
              duplicate = true;
              break;
            }
          }
        }
      }
    }
    if (!duplicate) {
      grid[key].push_back(i);
      kept.push_back(i);
    }
  }
  return kept;
}

std::vector<std::size_t> CullInterior(std::span<const Point3> cloud,
                                      std::span<const std::size_t> candidates,
                                      const Point3& centroid, const ToleranceConfig& config) {
  if (candidates.empty()) throw HullError(ErrorCode::kEmptyInput, "no points to cull");
  const std::vector<Coord3> coords = ToCoords(cloud);
  const SupportTree<3> tree(coords, candidates);
  return CullWithTree(cloud, candidates, centroid, tree, config);
}

std::vector<std::size_t> CullInterior(std::span<const Point3> cloud, const Point3& centroid,
                                      const ToleranceConfig& config) {
  const std::vector<std::size_t> all = AllIndices(cloud.size());
  return CullInterior(cloud, all, centroid, config);
}

HullMesh InitialTetrahedron(std::shared_ptr<const PointCloud> cloud,
                            std::span<const Point3> sphere_points,
                            std::span<const std::size_t> original_indices,
                            const ToleranceConfig& config) {
  if (sphere_points.size() != original_indices.size()) {
    throw HullError(ErrorCode::kInvalidArgument, "sphere points and indices differ in length");
  }
  if (original_indices.size() < 4) {
    throw HullError(ErrorCode::kInsufficientPoints, "a tetrahedron needs 4 surface points");
  }
  // Scatter the sphere points so they can be addressed by original index.
  PointCloud sphere(cloud->size());
  for (std::size_t k = 0; k < original_indices.size(); ++k) {
    sphere[original_indices[k]] = sphere_points[k];
  }
  const auto seed = ChooseSeed(*cloud, sphere, original_indices, original_indices, config);
  HullBuilder builder(*cloud, config.degeneracy_eps);
  builder.Seed(seed);
  return HullMesh(cloud, builder.Export(*cloud));
}

std::vector<std::size_t> VisibleFaces(const HullMesh& hull, const Point3& p, double eps) {
  std::vector<std::size_t> out;
  const auto& faces = hull.faces();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (PlaneSide(faces[f].normal, hull.point(faces[f].a()), p) > eps) out.push_back(f);
  }
  return out;
}

std::vector<DirectedEdge> HorizonEdges(std::span<const Triangle> faces) {
  struct Entry {
    Edge key;
    DirectedEdge edge;
    std::size_t order;
  };
  std::vector<Entry> entries;
  entries.reserve(faces.size() * 3);
  for (const Triangle& t : faces) {
    for (int k = 0; k < 3; ++k) {
      const std::size_t a = t[k];
      const std::size_t b = t[(k + 1) % 3];
      entries.push_back({Edge::Canonical(a, b), {a, b}, entries.size()});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    return x.key.u != y.key.u ? x.key.u < y.key.u : x.key.v < y.key.v;
  });
  std::vector<Entry> single;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i + 1;
    while (j < entries.size() && entries[j].key == entries[i].key) ++j;
    if (j - i == 1) single.push_back(entries[i]);
    i = j;
  }
  std::sort(single.begin(), single.end(),
            [](const Entry& x, const Entry& y) { return x.order < y.order; });
  std::vector<DirectedEdge> out;
  out.reserve(single.size());
  for (const Entry& e : single) out.push_back(e.edge);
  return out;
}

bool IsSingleCycle(std::span<const DirectedEdge> edges) {
  if (edges.size() < 3) return false;
  std::unordered_map<std::size_t, std::size_t> next;
  next.reserve(edges.size());
  for (const DirectedEdge& e : edges) {
    if (e.from == e.to) return false;
    if (!next.emplace(e.from, e.to).second) return false;
  }
  const std::size_t start = edges.front().from;
  std::size_t at = start;
  for (std::size_t steps = 1; steps <= edges.size(); ++steps) {
    auto it = next.find(at);
    if (it == next.end()) return false;
    at = it->second;
    if (at == start) return steps == edges.size();
  }
  return false;
}

HullMesh Expand(const HullMesh& hull, std::size_t p_index, double eps,
                const ToleranceConfig& config) {
  if (p_index >= hull.points().size()) {
    throw HullError(ErrorCode::kUnknownIndex, "point index " + std::to_string(p_index) +
                                                  " is outside the source cloud");
  }
  HullBuilder builder(hull.points(), config.degeneracy_eps);
  builder.Load(hull.faces());
  if (!builder.Insert(p_index, eps)) return hull;
  return HullMesh(hull.source(), builder.Export(hull.points()), hull.removed());
}

BuildResult BuildHull(std::shared_ptr<const PointCloud> cloud, const ToleranceConfig& config,
                      const BuildOptions& options) {
  const std::vector<std::size_t> all = AllIndices(cloud->size());
  return BuildFromIndices(std::move(cloud), all, config, options, {});
}

BuildResult BuildHull(std::span<const Point3> cloud, const ToleranceConfig& config,
                      const BuildOptions& options) {
  return BuildHull(std::make_shared<const PointCloud>(cloud.begin(), cloud.end()), config,
                   options);
}

HullMesh RepairContainment(const HullMesh& hull, const ToleranceConfig& config) {
  config.Validate();
  const std::vector<std::size_t> active = ActiveIndices(hull);
  const std::vector<Coord3> coords = ToCoords(hull.points());
  const SupportTree<3> tree(coords, active);
  HullBuilder builder(hull.points(), config.degeneracy_eps);
  builder.Load(hull.faces());
  if (builder.Repair(tree, config.expansion_eps) == 0) return hull;
  return HullMesh(hull.source(), builder.Export(hull.points()), hull.removed());
}

HullMesh InsertPoint(const HullMesh& hull, const Point3& p, const ToleranceConfig& config) {
  config.Validate();
  if (!IsFinite(p)) throw HullError(ErrorCode::kInvalidArgument, "inserted point is not finite");
  auto cloud = std::make_shared<PointCloud>(hull.points().begin(), hull.points().end());
  cloud->push_back(p);
  const std::size_t index = cloud->size() - 1;
  std::shared_ptr<const PointCloud> shared = std::move(cloud);

  bool outside = false;
  for (const HullFace& f : hull.faces()) {
    if (PlaneSide(f.normal, hull.point(f.a()), p) > config.expansion_eps) {
      outside = true;
      break;
    }
  }
  if (outside) {
    for (std::size_t v : hull.vertex_indices()) {
      if (Distance(hull.point(v), p) <= config.dedup_eps) {
        outside = false;
        break;
      }
    }
  }
  HullMesh grown(shared, hull.faces(), hull.removed());
  if (!outside) return grown;
  return Expand(grown, index, config.expansion_eps, config);
}

HullMesh RemovePoint(const HullMesh& hull, std::size_t index, const ToleranceConfig& config) {
  if (index >= hull.points().size() || hull.IsRemoved(index)) {
    throw HullError(ErrorCode::kUnknownIndex, "point index " + std::to_string(index) +
                                                  " is not in the cloud");
  }
  std::vector<std::size_t> removed = hull.removed();
  removed.push_back(index);
  if (!hull.IsVertex(index)) return HullMesh(hull.source(), hull.faces(), std::move(removed));

  std::vector<std::size_t> remaining;
  for (std::size_t i = 0; i < hull.points().size(); ++i) {
    if (i != index && !hull.IsRemoved(i)) remaining.push_back(i);
  }
  return BuildFromIndices(hull.source(), remaining, config, {}, std::move(removed)).hull;
}

}  // namespace spherehull
