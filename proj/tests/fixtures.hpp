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

#include <algorithm>
#include <filesystem>
#include <map>
#include <memory>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "spherehull/spherehull.hpp"

namespace spherehull::testing {

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("spherehull_" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

/// Corners of [0,s]^3 in binary order.
inline PointCloud CubeCorners(double s = 1.0, const Vec3& offset = {}) {
  PointCloud out;
  for (int i = 0; i < 8; ++i) {
    out.push_back(Vec3{s * (i & 1), s * ((i >> 1) & 1), s * ((i >> 2) & 1)} + offset);
  }
  return out;
}

inline std::shared_ptr<const PointCloud> Share(PointCloud cloud) {
  return std::make_shared<const PointCloud>(std::move(cloud));
}

using Key = std::tuple<double, double, double>;

/// Sorted coordinates of the given indices; duplicates collapse.
inline std::vector<Key> CoordSet(std::span<const Point3> pts, std::span<const std::size_t> idx) {
  std::vector<Key> out;
  for (std::size_t i : idx) out.emplace_back(pts[i].x, pts[i].y, pts[i].z);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Key> VertexCoords(const HullMesh& hull) {
  return CoordSet(hull.points(), hull.vertex_indices());
}

inline bool NearRel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + 1e-15;
}

struct TriMesh {
  PointCloud points;
  std::vector<Triangle> faces;
};

/// Subdivided icosahedron with every vertex pushed along its direction by
/// a smooth bump field, so the surface has both bulges and dents. Closed,
/// outward wound. Level 4 has 2562 vertices.
inline TriMesh BumpySphere(int level, double amplitude = 0.2) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  PointCloud v{{-1, t, 0}, {1, t, 0},  {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
               {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1}};
  std::vector<Triangle> f{{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                          {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                          {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                          {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7}, {9, 8, 1}};
  for (Point3& p : v) p = p / Length(p);
  for (int l = 0; l < level; ++l) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> mid;
    auto midpoint = [&](std::size_t a, std::size_t b) {
      const auto key = std::minmax(a, b);
      auto [it, fresh] = mid.try_emplace({key.first, key.second}, v.size());
      if (fresh) {
        const Point3 m = (v[a] + v[b]) * 0.5;
        v.push_back(m / Length(m));
      }
      return it->second;
    };
    std::vector<Triangle> next;
    for (const Triangle& tri : f) {
      const std::size_t ab = midpoint(tri[0], tri[1]);
      const std::size_t bc = midpoint(tri[1], tri[2]);
      const std::size_t ca = midpoint(tri[2], tri[0]);
      next.push_back({tri[0], ab, ca});
      next.push_back({tri[1], bc, ab});
      next.push_back({tri[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    f = std::move(next);
  }
  for (Point3& p : v) {
    const double bump = std::sin(5.0 * p.x) * std::sin(4.0 * p.y) * std::cos(3.0 * p.z);
    p = p * (1.0 + amplitude * bump);
  }
  return {std::move(v), std::move(f)};
}

}  // namespace spherehull::testing
