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

#include <filesystem>
#include <string>
#include <vector>

#include "spherehull/geometry.hpp"
#include "spherehull/hull2d.hpp"
#include "spherehull/hull_mesh.hpp"

namespace spherehull {

/// Vertices and (fan-triangulated) faces of a Wavefront OBJ file.
struct ObjData {
  PointCloud points;
  std::vector<Triangle> faces;
};

/// Reads `v` and `f` statements; `f` accepts `i`, `i/t`, `i//n`, `i/t/n`
/// and negative (relative) indices. Polygons are fanned from their first
/// vertex. Every other statement is skipped.
/// Throws ParseError (kParseError or kIndexOutOfRange) or kIoError.
ObjData LoadObj(const std::filesystem::path& path);
ObjData ParseObj(const std::string& text);

/// Writes the hull vertices re-indexed densely in ascending source order,
/// then one `f` per face. With emit_normals, one `vn` per face and faces in
/// `i//n` form.
void SaveObj(const std::filesystem::path& path, const HullMesh& hull, bool emit_normals = false);
std::string FormatObj(const HullMesh& hull, bool emit_normals = false);

/// Arbitrary triangle mesh (used for fixtures and the Minkowski tool).
void SaveObj(const std::filesystem::path& path, std::span<const Point3> points,
             std::span<const Triangle> faces);

/// `x,y,z` per line, optional `x,y,z` header, LF or CRLF, blank lines
/// skipped. Two-column files are read with z = 0; every row must match the
/// width of the first.
PointCloud LoadPointsCsv(const std::filesystem::path& path);
PointCloud ParsePointsCsv(const std::string& text);
PointCloud2 LoadPoints2dCsv(const std::filesystem::path& path);
PointCloud2 ParsePoints2dCsv(const std::string& text);

/// Shortest round-trip decimal formatting; values read back bit-exactly.
void SavePointsCsv(const std::filesystem::path& path, std::span<const Point3> cloud);
void SavePoints2dCsv(const std::filesystem::path& path, std::span<const Point2> cloud);
std::string FormatPointsCsv(std::span<const Point3> cloud);

/// Shortest decimal string that parses back to exactly `v`.
std::string FormatDouble(double v);

}  // namespace spherehull
