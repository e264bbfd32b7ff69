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

#include "hull_builder.hpp"

#include <cmath>
#include <string>

#include "spherehull/hull3d.hpp"

namespace spherehull::detail {

std::array<Coord3, 2> TiebreakFrame(const Vec3& d) {
  Vec3 axis{1, 0, 0};
  if (std::abs(d.y) <= std::abs(d.x) && std::abs(d.y) <= std::abs(d.z)) {
    axis = {0, 1, 0};
  } else if (std::abs(d.z) <= std::abs(d.x) && std::abs(d.z) <= std::abs(d.y)) {
    axis = {0, 0, 1};
  }
  Vec3 e1 = Cross(d, axis);
  e1 = e1 / Length(e1);
  const Vec3 e2 = Cross(d, e1);
  return {ToCoord(e1), ToCoord(e2)};
}

std::optional<std::array<std::size_t, 4>> PivotQuadruple(std::span<const Point3> coords,
                                                         std::span<const std::size_t> indices,
                                                         double flat_eps) {
  if (indices.size() < 4) return std::nullopt;
  const std::size_t i0 = indices[0];
  const Point3& p0 = coords[i0];

  std::size_t i1 = i0;
  double best = -1.0;
  for (std::size_t i : indices) {
    const double d = Distance(coords[i], p0);
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  if (!(best > flat_eps)) return std::nullopt;
  const Vec3 axis = coords[i1] - p0;
  const double axis_len = Length(axis);

  std::size_t i2 = i0;
  best = -1.0;
  for (std::size_t i : indices) {
    const double d = Length(Cross(axis, coords[i] - p0)) / axis_len;
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (!(best > flat_eps)) return std::nullopt;
  Vec3 n = Cross(axis, coords[i2] - p0);
  n = n / Length(n);

  std::size_t i3 = i0;
  best = -1.0;
  for (std::size_t i : indices) {
    const double d = std::abs(Dot(n, coords[i] - p0));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (!(best > flat_eps)) return std::nullopt;
  return std::array<std::size_t, 4>{i0, i1, i2, i3};
}

bool IsSolidQuadruple(std::span<const Point3> coords, const std::array<std::size_t, 4>& q,
                      double flat_eps, double degeneracy_eps) {
  const Point3& a = coords[q[0]];
  const Vec3 n = Cross(coords[q[1]] - a, coords[q[2]] - a);
  const double len = Length(n);
  if (!(len > degeneracy_eps)) return false;
  return std::abs(Dot(n, coords[q[3]] - a)) / len > flat_eps;
}

HullBuilder::HullBuilder(std::span<const Point3> geometry, double degeneracy_eps)
    : geometry_(geometry), degeneracy_eps_(degeneracy_eps) {}

Vec3 HullBuilder::ComputeNormal(const Triangle& t) const {
  const Point3& a = geometry_[t[0]];
  const Vec3 n = Cross(geometry_[t[1]] - a, geometry_[t[2]] - a);
  const double len = Length(n);
  if (!(len > degeneracy_eps_)) {
    throw HullError(ErrorCode::kDegenerateTriangle,
                    "degenerate face (" + std::to_string(t[0]) + ", " + std::to_string(t[1]) +
                        ", " + std::to_string(t[2]) + ") during expansion");
  }
  return n / len;
}

std::uint32_t HullBuilder::AddFace(const Triangle& t, const Vec3& n) {
  const auto id = static_cast<std::uint32_t>(faces_.size());
  faces_.push_back({t, n, Dot(n, geometry_[t[0]]), static_cast<std::int64_t>(alive_.size())});
  alive_.push_back(id);
  return id;
}

void HullBuilder::KillFace(std::uint32_t id) {
  WorkFace& f = faces_[id];
  const auto pos = static_cast<std::size_t>(f.alive_pos);
  const std::uint32_t moved = alive_.back();
  alive_[pos] = moved;
  faces_[moved].alive_pos = static_cast<std::int64_t>(pos);
  alive_.pop_back();
  f.alive_pos = -1;
}

void HullBuilder::Seed(const std::array<std::size_t, 4>& q) {
  faces_.clear();
  alive_.clear();
  constexpr int kFaces[4][4] = {{0, 1, 2, 3}, {0, 3, 1, 2}, {1, 3, 2, 0}, {2, 3, 0, 1}};
  for (const auto& f : kFaces) {
    Triangle t{q[f[0]], q[f[1]], q[f[2]]};
    const Point3& opposite = geometry_[q[f[3]]];
    if (SignedTetVolume(geometry_[t[0]], geometry_[t[1]], geometry_[t[2]], opposite) > 0.0) {
      std::swap(t[1], t[2]);
    }
    AddFace(t, ComputeNormal(t));
  }
}

void HullBuilder::Load(std::span<const HullFace> faces) {
  faces_.clear();
  alive_.clear();
  for (const HullFace& f : faces) AddFace(f.v, ComputeNormal(f.v));
}

bool HullBuilder::Insert(std::size_t index, double eps) {
  const Point3& p = geometry_[index];
  visible_.clear();
  for (std::uint32_t id : alive_) {
    if (Side(faces_[id], p) > eps) visible_.push_back(id);
  }
  if (visible_.empty()) return false;

  std::vector<Triangle> removed;
  removed.reserve(visible_.size());
  for (std::uint32_t id : visible_) removed.push_back(faces_[id].v);
  const std::vector<DirectedEdge> horizon = HorizonEdges(removed);
  if (!IsSingleCycle(horizon)) {
    throw HullError(ErrorCode::kBrokenHorizon,
                    "horizon of point " + std::to_string(index) + " is not a single cycle (" +
                        std::to_string(visible_.size()) + " visible faces, " +
                        std::to_string(horizon.size()) + " horizon edges)");
  }

  std::vector<Triangle> fan;
  std::vector<Vec3> normals;
  fan.reserve(horizon.size());
  normals.reserve(horizon.size());
  for (const DirectedEdge& e : horizon) {
    fan.push_back({e.from, e.to, index});
    normals.push_back(ComputeNormal(fan.back()));
  }

  for (std::uint32_t id : visible_) KillFace(id);
  last_created_.clear();
  for (std::size_t k = 0; k < fan.size(); ++k) last_created_.push_back(AddFace(fan[k], normals[k]));
  return true;
}

std::size_t HullBuilder::Repair(const SupportTree<3>& tree, double eps) {
  std::vector<char> inserted(geometry_.size(), 0);
  std::vector<std::uint32_t> queue(alive_.begin(), alive_.end());
  std::size_t count = 0;
  while (!queue.empty()) {
    const std::uint32_t id = queue.back();
    queue.pop_back();
    if (faces_[id].alive_pos < 0) continue;
    const Vec3 n = faces_[id].n;
    const auto frame = TiebreakFrame(n);
    const std::size_t s = tree.Query(ToCoord(n), frame);
    if (!(Side(faces_[id], geometry_[s]) > eps)) continue;
    if (inserted[s]) {
      throw HullError(ErrorCode::kBrokenHorizon,
                      "containment repair did not converge at point " + std::to_string(s));
    }
    inserted[s] = 1;
    Insert(s, eps);
    ++count;
    queue.insert(queue.end(), last_created_.begin(), last_created_.end());
  }
  return count;
}

std::vector<HullFace> HullBuilder::Export(std::span<const Point3> normal_source) const {
  std::vector<HullFace> out;
  out.reserve(alive_.size());
  const bool same = normal_source.data() == geometry_.data();
  for (std::uint32_t id : alive_) {
    const WorkFace& f = faces_[id];
    if (same) {
      out.push_back({f.v, Direction3::FromUnit(f.n)});
    } else {
      const auto& s = normal_source;
      out.push_back({f.v, TriangleNormal(s[f.v[0]], s[f.v[1]], s[f.v[2]], degeneracy_eps_)});
    }
  }
  return out;
}

}  // namespace spherehull::detail
