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

#include "spherehull/hull2d.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "spherehull/hull3d.hpp"
#include "spherehull/support_tree.hpp"

namespace spherehull {
namespace {

using Coord2 = SupportTree<2>::Coord;

// Signed distance of p to the left of the directed line a->b.
double LeftOf(const Point2& a, const Point2& b, const Point2& p) {
  const Vec2 e = b - a;
  return Cross(e, p - a) / Length(e);
}

std::optional<std::array<std::size_t, 3>> PivotTriple(std::span<const Point2> pts,
                                                      std::span<const std::size_t> ids,
                                                      double eps) {
  if (ids.size() < 3) return std::nullopt;
  const std::size_t i0 = ids[0];
  std::size_t i1 = i0;
  double best = -1.0;
  for (std::size_t i : ids) {
    const double d = Length(pts[i] - pts[i0]);
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  if (!(best > eps)) return std::nullopt;
  std::size_t i2 = i0;
  best = -1.0;
  for (std::size_t i : ids) {
    const double d = std::abs(LeftOf(pts[i0], pts[i1], pts[i]));
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (!(best > eps)) return std::nullopt;
  if (LeftOf(pts[i0], pts[i1], pts[i2]) < 0.0) std::swap(i1, i2);
  return std::array<std::size_t, 3>{i0, i1, i2};
}

class PolygonBuilder {
 public:
  explicit PolygonBuilder(std::span<const Point2> pts) : pts_(pts) {}

  void Seed(const std::array<std::size_t, 3>& t) { ring_.assign(t.begin(), t.end()); }

  // Replaces the chain of edges that see p by more than eps with p.
  bool Insert(std::size_t index, double eps) {
    const Point2& p = pts_[index];
    const std::size_t n = ring_.size();
    std::vector<char> visible(n, 0);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (-LeftOf(pts_[ring_[i]], pts_[ring_[(i + 1) % n]], p) > eps) {
        visible[i] = 1;
        ++count;
      }
    }
    if (count == 0) return false;
    if (count == n) {
      throw HullError(ErrorCode::kBrokenHorizon, "point sees every polygon edge");
    }
    // First visible edge after a non-visible one starts the chain.
    std::size_t first = 0;
    while (!(visible[first] && !visible[(first + n - 1) % n])) ++first;
    for (std::size_t k = 0; k < count; ++k) {
      if (!visible[(first + k) % n]) {
        throw HullError(ErrorCode::kBrokenHorizon,
                        "visible edges of point " + std::to_string(index) + " are not contiguous");
      }
    }
    // Keep ring_[first] and ring_[first+count]; drop the vertices between.
    std::vector<std::size_t> next;
    next.reserve(n - count + 2);
    for (std::size_t k = 0; k <= n - count; ++k) next.push_back(ring_[(first + count + k) % n]);
    next.push_back(index);
    ring_ = std::move(next);
    return true;
  }

  std::size_t Repair(const SupportTree<2>& tree, double eps) {
    std::size_t inserted = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < ring_.size(); ++i) {
        const Point2& a = pts_[ring_[i]];
        const Point2& b = pts_[ring_[(i + 1) % ring_.size()]];
        const Vec2 e = b - a;
        const Vec2 out = Vec2{e.y, -e.x} / Length(e);
        const Coord2 tie{-out.y, out.x};
        const std::size_t s = tree.Query({out.x, out.y}, std::span<const Coord2>(&tie, 1));
        if (-LeftOf(a, b, pts_[s]) > eps) {
          if (inserted > pts_.size()) {
            throw HullError(ErrorCode::kBrokenHorizon, "2D containment repair did not converge");
          }
          Insert(s, eps);
          ++inserted;
          changed = true;
          break;
        }
      }
    }
    return inserted;
  }

  // Drops vertices within eps of the line through their neighbours.
  void DropCollinear(double eps) {
    bool changed = true;
    while (changed && ring_.size() > 3) {
      changed = false;
      for (std::size_t i = 0; i < ring_.size(); ++i) {
        const std::size_t n = ring_.size();
        const Point2& prev = pts_[ring_[(i + n - 1) % n]];
        const Point2& next = pts_[ring_[(i + 1) % n]];
        if (LeftOf(prev, next, pts_[ring_[i]]) > -eps) {
          ring_.erase(ring_.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<std::size_t> Take() {
    auto lowest = std::min_element(ring_.begin(), ring_.end());
    std::rotate(ring_.begin(), lowest, ring_.end());
    return std::move(ring_);
  }

 private:
  std::span<const Point2> pts_;
  std::vector<std::size_t> ring_;
};

}  // namespace

Polygon BuildHull2d(std::span<const Point2> cloud, const ToleranceConfig& config) {
  config.Validate();
  PointCloud lifted;
  lifted.reserve(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (!std::isfinite(cloud[i].x) || !std::isfinite(cloud[i].y)) {
      throw HullError(ErrorCode::kInvalidArgument,
                      "point " + std::to_string(i) + " has a non-finite coordinate");
    }
    lifted.push_back({cloud[i].x, cloud[i].y, 0.0});
  }
  const std::vector<std::size_t> survivors = DedupPoints(lifted, config.dedup_eps);
  if (survivors.size() < 3) {
    throw HullError(ErrorCode::kInsufficientPoints,
                    "need at least 3 distinct points, got " + std::to_string(survivors.size()));
  }

  Point2 centroid;
  for (std::size_t i : survivors) centroid = centroid + cloud[i];
  centroid = centroid / static_cast<double>(survivors.size());

  std::vector<Coord2> coords;
  coords.reserve(cloud.size());
  for (const Point2& p : cloud) coords.push_back({p.x, p.y});
  const SupportTree<2> tree(coords, survivors);

  // Radial support culling.
  std::vector<std::size_t> surface;
  std::vector<char> seen(cloud.size(), 0);
  for (std::size_t i : survivors) {
    const Vec2 r = cloud[i] - centroid;
    const double len = Length(r);
    if (!(len > config.degeneracy_eps)) continue;
    const Vec2 d = r / len;
    const Coord2 tie{-d.y, d.x};
    const std::size_t s = tree.Query({d.x, d.y}, std::span<const Coord2>(&tie, 1));
    if (!seen[s]) {
      seen[s] = 1;
      surface.push_back(s);
    }
  }

  // Projection onto the unit circle around the centroid; the projected
  // points are ordered by angle.
  std::vector<std::pair<double, std::size_t>> by_angle;
  by_angle.reserve(surface.size());
  for (std::size_t i : surface) {
    const Vec2 r = cloud[i] - centroid;
    const Vec2 on_circle = r / Length(r);
    by_angle.push_back({std::atan2(on_circle.y, on_circle.x), i});
  }
  std::sort(by_angle.begin(), by_angle.end());
  std::vector<std::size_t> ordered;
  for (const auto& [angle, i] : by_angle) ordered.push_back(i);

  auto seed = PivotTriple(cloud, ordered, config.plane_eps);
  if (!seed) seed = PivotTriple(cloud, survivors, config.plane_eps);
  if (!seed) {
    throw HullError(ErrorCode::kDegenerateCloud, "all points are collinear");
  }

  PolygonBuilder builder(cloud);
  builder.Seed(*seed);
  for (std::size_t i : ordered) {
    if (std::find(seed->begin(), seed->end(), i) != seed->end()) continue;
    builder.Insert(i, config.expansion_eps);
  }
  builder.Repair(tree, config.expansion_eps);
  builder.DropCollinear(config.plane_eps);
  return Polygon{builder.Take()};
}

double SignedArea(std::span<const Point2> cloud, const Polygon& polygon) {
  const auto& v = polygon.vertices;
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    twice += Cross(cloud[v[i]], cloud[v[(i + 1) % v.size()]]);
  }
  return 0.5 * twice;
}

bool IsConvexPolygon(std::span<const Point2> cloud, const Polygon& polygon, double eps) {
  const auto& v = polygon.vertices;
  if (v.size() < 3 || !(SignedArea(cloud, polygon) > 0.0)) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& a = cloud[v[i]];
    const Point2& b = cloud[v[(i + 1) % v.size()]];
    const Point2& c = cloud[v[(i + 2) % v.size()]];
    if (LeftOf(a, b, c) < -eps) return false;
  }
  return true;
}

bool PolygonContains(std::span<const Point2> cloud, const Polygon& polygon, const Point2& p,
                     double eps) {
  const auto& v = polygon.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (-LeftOf(cloud[v[i]], cloud[v[(i + 1) % v.size()]], p) > eps) return false;
  }
  return true;
}

}  // namespace spherehull
