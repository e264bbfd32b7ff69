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

#include "spherehull/meshio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace spherehull {
namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw HullError(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw HullError(ErrorCode::kIoError, "failed reading " + path.string());
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw HullError(ErrorCode::kIoError, "cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw HullError(ErrorCode::kIoError, "failed writing " + path.string());
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Calls fn(line_number, line) for every line, CR stripped.
template <typename Fn>
void ForEachLine(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line_no, line);
  }
}

bool ParseDouble(std::string_view s, double& out) {
  s = Trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

bool ParseLong(std::string_view s, long& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> SplitWhitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

std::vector<std::string_view> SplitComma(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.push_back(Trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

// Rows of 2 or 3 numbers; `columns` = 0 takes the width of the first row.
std::vector<std::array<double, 3>> ParseCsvRows(const std::string& text, std::size_t columns) {
  std::vector<std::array<double, 3>> rows;
  bool first_content = true;
  ForEachLine(text, [&](std::size_t line_no, std::string_view raw) {
    const std::string_view line = Trim(raw);
    if (line.empty()) return;
    const bool header_allowed = first_content;
    first_content = false;
    if (header_allowed && (line == "x,y,z" || line == "x,y")) return;
    const auto fields = SplitComma(line);
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError(ErrorCode::kParseError, line_no, "expected 2 or 3 comma-separated values");
    }
    if (columns == 0) columns = fields.size();
    if (fields.size() != columns) {
      throw ParseError(ErrorCode::kParseError, line_no,
                       "expected " + std::to_string(columns) + " values");
    }
    std::array<double, 3> row{0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < fields.size(); ++k) {
      if (!ParseDouble(fields[k], row[k])) {
        throw ParseError(ErrorCode::kParseError, line_no,
                         "invalid number '" + std::string(fields[k]) + "'");
      }
    }
    rows.push_back(row);
  });
  return rows;
}

}  // namespace

std::string FormatDouble(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

ObjData ParseObj(const std::string& text) {
  ObjData data;
  struct PendingFace {
    std::size_t line;
    std::vector<long> refs;  // already made absolute, 1-based
  };
  std::vector<PendingFace> pending;

  ForEachLine(text, [&](std::size_t line_no, std::string_view raw) {
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = SplitWhitespace(line);
    if (tok.empty()) return;
    if (tok[0] == "v") {
      if (tok.size() < 4) throw ParseError(ErrorCode::kParseError, line_no, "vertex needs 3 coordinates");
      Point3 p;
      if (!ParseDouble(tok[1], p.x) || !ParseDouble(tok[2], p.y) || !ParseDouble(tok[3], p.z)) {
        throw ParseError(ErrorCode::kParseError, line_no, "invalid vertex coordinate");
      }
      data.points.push_back(p);
    } else if (tok[0] == "f") {
      if (tok.size() < 4) throw ParseError(ErrorCode::kParseError, line_no, "face needs 3 vertices");
      PendingFace face{line_no, {}};
      for (std::size_t k = 1; k < tok.size(); ++k) {
        const std::string_view ref = tok[k].substr(0, tok[k].find('/'));
        long idx = 0;
        if (!ParseLong(ref, idx) || idx == 0) {
          throw ParseError(ErrorCode::kParseError, line_no,
                           "invalid face index '" + std::string(tok[k]) + "'");
        }
        if (idx < 0) idx += static_cast<long>(data.points.size()) + 1;
        face.refs.push_back(idx);
      }
      pending.push_back(std::move(face));
    }
  });

  const auto count = static_cast<long>(data.points.size());
  for (const PendingFace& face : pending) {
    for (long idx : face.refs) {
      if (idx < 1 || idx > count) {
        throw ParseError(ErrorCode::kIndexOutOfRange, face.line,
                         "face index " + std::to_string(idx) + " out of range (" +
                             std::to_string(count) + " vertices)");
      }
    }
    for (std::size_t k = 1; k + 1 < face.refs.size(); ++k) {
      data.faces.push_back({static_cast<std::size_t>(face.refs[0] - 1),
                            static_cast<std::size_t>(face.refs[k] - 1),
                            static_cast<std::size_t>(face.refs[k + 1] - 1)});
    }
  }
  return data;
}

ObjData LoadObj(const std::filesystem::path& path) { return ParseObj(ReadFile(path)); }

std::string FormatObj(const HullMesh& hull, bool emit_normals) {
  std::ostringstream os;
  std::unordered_map<std::size_t, std::size_t> dense;
  for (std::size_t i : hull.vertex_indices()) {
    dense.emplace(i, dense.size() + 1);
    const Point3& p = hull.point(i);
    os << "v " << FormatDouble(p.x) << ' ' << FormatDouble(p.y) << ' ' << FormatDouble(p.z) << '\n';
  }
  if (emit_normals) {
    for (const HullFace& f : hull.faces()) {
      os << "vn " << FormatDouble(f.normal.x()) << ' ' << FormatDouble(f.normal.y()) << ' '
         << FormatDouble(f.normal.z()) << '\n';
    }
  }
  std::size_t face_no = 0;
  for (const HullFace& f : hull.faces()) {
    ++face_no;
    os << 'f';
    for (std::size_t v : f.v) {
      os << ' ' << dense.at(v);
      if (emit_normals) os << "//" << face_no;
    }
    os << '\n';
  }
  return os.str();
}

void SaveObj(const std::filesystem::path& path, const HullMesh& hull, bool emit_normals) {
  WriteFile(path, FormatObj(hull, emit_normals));
}

void SaveObj(const std::filesystem::path& path, std::span<const Point3> points,
             std::span<const Triangle> faces) {
  std::ostringstream os;
  for (const Point3& p : points) {
    os << "v " << FormatDouble(p.x) << ' ' << FormatDouble(p.y) << ' ' << FormatDouble(p.z) << '\n';
  }
  for (const Triangle& t : faces) os << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  WriteFile(path, os.str());
}

PointCloud ParsePointsCsv(const std::string& text) {
  PointCloud out;
  for (const auto& r : ParseCsvRows(text, 0)) out.push_back({r[0], r[1], r[2]});
  return out;
}

PointCloud LoadPointsCsv(const std::filesystem::path& path) {
  return ParsePointsCsv(ReadFile(path));
}

PointCloud2 ParsePoints2dCsv(const std::string& text) {
  PointCloud2 out;
  for (const auto& r : ParseCsvRows(text, 2)) out.push_back({r[0], r[1]});
  return out;
}

PointCloud2 LoadPoints2dCsv(const std::filesystem::path& path) {
  return ParsePoints2dCsv(ReadFile(path));
}

std::string FormatPointsCsv(std::span<const Point3> cloud) {
  std::string out = "x,y,z\n";
  for (const Point3& p : cloud) {
    out += FormatDouble(p.x) + ',' + FormatDouble(p.y) + ',' + FormatDouble(p.z) + '\n';
  }
  return out;
}

void SavePointsCsv(const std::filesystem::path& path, std::span<const Point3> cloud) {
  WriteFile(path, FormatPointsCsv(cloud));
}

void SavePoints2dCsv(const std::filesystem::path& path, std::span<const Point2> cloud) {
  std::string out = "x,y\n";
  for (const Point2& p : cloud) out += FormatDouble(p.x) + ',' + FormatDouble(p.y) + '\n';
  WriteFile(path, out);
}

}  // namespace spherehull
