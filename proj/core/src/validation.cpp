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

#include "spherehull/validation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace spherehull {
namespace {

std::vector<std::size_t> UsedVertices(std::span<const Triangle> triangles) {
  std::vector<std::size_t> out;
  for (const Triangle& t : triangles) out.insert(out.end(), t.begin(), t.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Plane {
  Vec3 n;
  Point3 v;
  bool valid;
};

Plane FacePlane(std::span<const Point3> pts, const Triangle& t) {
  const Vec3 n = Cross(pts[t[1]] - pts[t[0]], pts[t[2]] - pts[t[0]]);
  const double len = Length(n);
  if (!(len > 0.0)) return {{}, pts[t[0]], false};
  return {n / len, pts[t[0]], true};
}

double Side(const Plane& pl, const Point3& p) { return Dot(pl.n, p) - Dot(pl.n, pl.v); }

double Cross2(const Vec3& o, const Vec3& a, const Vec3& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Strictly convex CCW hull of planar points given as (u, v, 0); returns
// positions into `uv`. Andrew's monotone chain.
std::vector<std::size_t> PlanarHull(const std::vector<Vec3>& uv, double eps) {
  std::vector<std::size_t> order(uv.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return uv[a].x != uv[b].x ? uv[a].x < uv[b].x : uv[a].y < uv[b].y;
  });
  std::vector<std::size_t> h(2 * order.size());
  std::size_t k = 0;
  auto keep = [&](std::size_t a, std::size_t b, std::size_t c) {
    const double len = Distance(uv[a], uv[c]);
    return Cross2(uv[a], uv[b], uv[c]) > eps * len;
  };
  for (std::size_t i : order) {
    while (k >= 2 && !keep(h[k - 2], h[k - 1], i)) --k;
    h[k++] = i;
  }
  for (std::size_t j = order.size() - 1, t = k + 1; j-- > 0;) {
    const std::size_t i = order[j];
    while (k >= t && !keep(h[k - 2], h[k - 1], i)) --k;
    h[k++] = i;
  }
  h.resize(k > 0 ? k - 1 : 0);
  return h;
}

}  // namespace

bool ContainsPoint(const HullMesh& hull, const Point3& p, double eps) {
  for (const HullFace& f : hull.faces()) {
    if (PlaneSide(f.normal, hull.point(f.a()), p) > eps) return false;
  }
  return true;
}

bool IsConvex(const HullMesh& hull, double eps) {
  for (const HullFace& f : hull.faces()) {
    const Point3& v = hull.point(f.a());
    for (std::size_t w : hull.vertex_indices()) {
      if (PlaneSide(f.normal, v, hull.point(w)) > eps) return false;
    }
  }
  return true;
}

bool IsConvex(const MeshView& mesh, double eps) {
  const std::vector<std::size_t> verts = UsedVertices(mesh.triangles);
  for (const Triangle& t : mesh.triangles) {
    const Plane pl = FacePlane(mesh.points, t);
    if (!pl.valid) return false;
    for (std::size_t w : verts) {
      if (Side(pl, mesh.points[w]) > eps) return false;
    }
  }
  return true;
}

long EulerCharacteristic(std::span<const Triangle> triangles) {
  const auto v = static_cast<long>(UsedVertices(triangles).size());
  const auto e = static_cast<long>(CountEdges(triangles).size());
  return v - e + static_cast<long>(triangles.size());
}

bool IsClosedManifold(std::span<const Triangle> triangles) {
  if (triangles.empty()) return false;
  std::set<std::pair<std::size_t, std::size_t>> directed;
  for (const Triangle& t : triangles) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return false;
    for (int k = 0; k < 3; ++k) {
      // A repeated directed edge means two faces disagree on orientation.
      if (!directed.emplace(t[k], t[(k + 1) % 3]).second) return false;
    }
  }
  for (const auto& [a, b] : directed) {
    if (!directed.count({b, a})) return false;
  }
  return EulerCharacteristic(triangles) == 2;
}

bool IsClosedManifold(const HullMesh& hull) {
  const auto tris = hull.triangles();
  return IsClosedManifold(tris);
}

bool IsOutwardOriented(const HullMesh& hull) {
  if (hull.empty()) return false;
  for (const HullFace& f : hull.faces()) {
    if (!(PlaneSide(f.normal, hull.point(f.a()), hull.centroid()) < 0.0)) return false;
  }
  return true;
}

bool IsOutwardOriented(const MeshView& mesh) {
  const std::vector<std::size_t> verts = UsedVertices(mesh.triangles);
  if (verts.empty()) return false;
  const Point3 c = Centroid(mesh.points, verts);
  for (const Triangle& t : mesh.triangles) {
    const Plane pl = FacePlane(mesh.points, t);
    if (!pl.valid || !(Side(pl, c) < 0.0)) return false;
  }
  return true;
}

HullMesh BruteForceHull(std::span<const Point3> cloud, double plane_eps) {
  // Collapse coincident points; the first occurrence represents them.
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    bool dup = false;
    for (std::size_t j : ids) {
      if (Distance(cloud[i], cloud[j]) <= plane_eps) {
        dup = true;
        break;
      }
    }
    if (!dup) ids.push_back(i);
  }
  if (ids.size() < 4) {
    throw HullError(ErrorCode::kInsufficientPoints, "brute-force hull needs 4 distinct points");
  }

  std::map<std::vector<std::size_t>, Vec3> facets;
  const std::size_t m = ids.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        const Point3& pa = cloud[ids[a]];
        Vec3 n = Cross(cloud[ids[b]] - pa, cloud[ids[c]] - pa);
        const double len = Length(n);
        if (!(len > 1e-300)) continue;
        n = n / len;
        bool pos = false;
        bool neg = false;
        std::vector<std::size_t> on_plane;
        for (std::size_t k = 0; k < m && !(pos && neg); ++k) {
          const double s = Dot(n, cloud[ids[k]]) - Dot(n, pa);
          if (s > plane_eps) {
            pos = true;
          } else if (s < -plane_eps) {
            neg = true;
          } else {
            on_plane.push_back(ids[k]);
          }
        }
        if (pos && neg) continue;
        if (!pos && !neg) continue;  // everything coplanar with this triple
        if (pos) n = -n;
        facets.emplace(std::move(on_plane), n);
      }
    }
  }
  if (facets.empty()) {
    throw HullError(ErrorCode::kDegenerateCloud, "brute-force hull of a flat point set");
  }

  std::vector<Triangle> tris;
  for (const auto& [members, n] : facets) {
    Vec3 axis = std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 e1 = Cross(axis, n);
    e1 = e1 / Length(e1);
    const Vec3 e2 = Cross(n, e1);  // (e1, e2, n) right-handed
    std::vector<Vec3> uv;
    for (std::size_t i : members) uv.push_back({Dot(e1, cloud[i]), Dot(e2, cloud[i]), 0.0});
    std::vector<std::size_t> poly = PlanarHull(uv, plane_eps);
    if (poly.size() < 3) continue;
    std::vector<std::size_t> ring;
    for (std::size_t k : poly) ring.push_back(members[k]);
    const auto lowest = std::min_element(ring.begin(), ring.end());
    std::rotate(ring.begin(), lowest, ring.end());
    for (std::size_t k = 1; k + 1 < ring.size(); ++k) tris.push_back({ring[0], ring[k], ring[k + 1]});
  }
  auto source = std::make_shared<const PointCloud>(cloud.begin(), cloud.end());
  return HullMesh::FromTriangles(std::move(source), tris, 0.0);
}

double Volume(const HullMesh& hull) {
  double v = 0.0;
  for (const HullFace& f : hull.faces()) {
    v -= SignedTetVolume(hull.point(f.a()), hull.point(f.b()), hull.point(f.c()), hull.centroid());
  }
  return v;
}

double Volume(const MeshView& mesh) {
  const std::vector<std::size_t> verts = UsedVertices(mesh.triangles);
  if (verts.empty()) return 0.0;
  const Point3 c = Centroid(mesh.points, verts);
  double v = 0.0;
  for (const Triangle& t : mesh.triangles) {
    v -= SignedTetVolume(mesh.points[t[0]], mesh.points[t[1]], mesh.points[t[2]], c);
  }
  return v;
}

double SurfaceArea(const HullMesh& hull) {
  double area = 0.0;
  for (const HullFace& f : hull.faces()) {
    const Point3& a = hull.point(f.a());
    area += 0.5 * Length(Cross(hull.point(f.b()) - a, hull.point(f.c()) - a));
  }
  return area;
}

std::string ValidationReport::Summary() const {
  std::ostringstream os;
  os << "convexity: " << (convex ? "PASS" : "FAIL") << '\n'
     << "manifold: " << (manifold ? "PASS" : "FAIL") << '\n'
     << "orientation: " << (outward ? "PASS" : "FAIL") << '\n'
     << "euler: " << (euler ? "PASS" : "FAIL") << '\n'
     << "containment: " << (contains_all ? "PASS" : "FAIL");
  if (!contains_all) os << " (first outside point " << first_outside << ")";
  return os.str();
}

ValidationReport ValidateHull(const HullMesh& hull, double eps) {
  ValidationReport r;
  r.convex = IsConvex(hull, eps);
  r.manifold = IsClosedManifold(hull);
  r.outward = IsOutwardOriented(hull);
  r.euler = EulerCharacteristic(hull.triangles()) == 2;
  r.contains_all = true;
  for (std::size_t i = 0; i < hull.points().size(); ++i) {
    if (hull.IsRemoved(i)) continue;
    if (!ContainsPoint(hull, hull.point(i), eps)) {
      r.contains_all = false;
      r.first_outside = i;
      break;
    }
  }
  return r;
}

}  // namespace spherehull
