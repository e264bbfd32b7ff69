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

#include "spherehull/geometry.hpp"

#include <string>

namespace spherehull {

const char* ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDegeneratePoint: return "DegeneratePoint";
    case ErrorCode::kDegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::kInsufficientPoints: return "InsufficientPoints";
    case ErrorCode::kDegenerateCloud: return "DegenerateCloud";
    case ErrorCode::kBrokenHorizon: return "BrokenHorizon";
    case ErrorCode::kUnknownIndex: return "UnknownIndex";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kValidationFailure: return "ValidationFailure";
  }
  return "Unknown";
}

Direction3 Direction3::Normalize(const Vec3& v, double min_length) {
  const double len = Length(v);
  if (!(len > min_length) || !std::isfinite(len)) {
    throw HullError(ErrorCode::kDegeneratePoint, "cannot normalize a zero-length vector");
  }
  return Direction3(v / len);
}

Direction3 Direction3::FromUnit(const Vec3& v) {
  const double len = Length(v);
  if (!(std::abs(len - 1.0) <= kUnitTolerance)) {
    throw HullError(ErrorCode::kInvalidArgument,
                    "direction is not unit length (|d| = " + std::to_string(len) + ")");
  }
  return Direction3(v);
}

void ToleranceConfig::Validate() const {
  if (!(dedup_eps > 0.0) || !(plane_eps > 0.0) || !(degeneracy_eps > 0.0) ||
      !(expansion_eps > 0.0)) {
    throw HullError(ErrorCode::kInvalidArgument, "tolerances must be positive");
  }
  if (expansion_eps < plane_eps) {
    throw HullError(ErrorCode::kInvalidArgument, "expansion_eps must be >= plane_eps");
  }
}

Point3 Centroid(std::span<const Point3> points) {
  if (points.empty()) throw HullError(ErrorCode::kEmptyInput, "centroid of an empty point list");
  Vec3 sum;
  for (const Point3& p : points) sum += p;
  return sum / static_cast<double>(points.size());
}

Point3 Centroid(std::span<const Point3> points, std::span<const std::size_t> indices) {
  if (indices.empty()) throw HullError(ErrorCode::kEmptyInput, "centroid of an empty point list");
  Vec3 sum;
  for (std::size_t i : indices) sum += points[i];
  return sum / static_cast<double>(indices.size());
}

std::size_t SupportPoint(std::span<const Point3> points, const Direction3& d) {
  if (points.empty()) throw HullError(ErrorCode::kEmptyInput, "support point of an empty point list");
  std::size_t best = 0;
  double best_dot = Dot(d.vec(), points[0]);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double s = Dot(d.vec(), points[i]);
    if (s > best_dot) {
      best_dot = s;
      best = i;
    }
  }
  return best;
}

Point3 ProjectToSphere(const Point3& p, const Point3& center, double degeneracy_eps) {
  const Vec3 r = p - center;
  const double len = Length(r);
  if (!(len > degeneracy_eps)) {
    throw HullError(ErrorCode::kDegeneratePoint, "point coincides with the projection center");
  }
  return center + r / len;
}

Direction3 TriangleNormal(const Point3& a, const Point3& b, const Point3& c,
                          double degeneracy_eps) {
  const Vec3 n = Cross(b - a, c - a);
  const double len = Length(n);
  if (!(len > degeneracy_eps)) {
    throw HullError(ErrorCode::kDegenerateTriangle, "degenerate triangle (collinear or repeated vertices)");
  }
  return Direction3::FromUnit(n / len);
}

double SignedTetVolume(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return Dot(Cross(b - a, c - a), d - a) / 6.0;
}

}  // namespace spherehull
