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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "spherehull/spherehull.hpp"

namespace spherehull::cli {
namespace {

namespace fs = std::filesystem;

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// "obj" or "csv", from --format or the file extension.
std::string FormatOf(const fs::path& path, const std::string& override_format) {
  if (!override_format.empty()) return Lower(override_format);
  const std::string ext = Lower(path.extension().string());
  if (ext == ".obj") return "obj";
  if (ext == ".csv") return "csv";
  throw HullError(ErrorCode::kParseError,
                  "cannot infer format of '" + path.string() + "'; use --format obj|csv");
}

PointCloud LoadCloud(const fs::path& path, const std::string& format) {
  if (FormatOf(path, format) == "obj") return LoadObj(path).points;
  return LoadPointsCsv(path);
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw HullError(ErrorCode::kIoError, "cannot write " + path.string());
  f << text;
  if (!f) throw HullError(ErrorCode::kIoError, "failed writing " + path.string());
}

void WriteHull(const fs::path& path, const HullMesh& hull, bool normals, const std::string& format) {
  if (FormatOf(path, format) == "obj") {
    SaveObj(path, hull, normals);
    return;
  }
  PointCloud verts;
  for (std::size_t i : hull.vertex_indices()) verts.push_back(hull.point(i));
  SavePointsCsv(path, verts);
}

// Accepts "a:b:step" or "a,b,c".
std::vector<std::size_t> ParseSizes(const std::string& spec) {
  std::vector<std::size_t> sizes;
  auto to_size = [&](const std::string& s) {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size() || v == 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  };
  try {
    if (spec.find(':') != std::string::npos) {
      std::vector<std::string> parts;
      std::stringstream ss(spec);
      for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
      if (parts.size() != 3) throw std::invalid_argument(spec);
      const std::size_t lo = to_size(parts[0]);
      const std::size_t hi = to_size(parts[1]);
      const std::size_t step = to_size(parts[2]);
      for (std::size_t n = lo; n <= hi; n += step) sizes.push_back(n);
    } else {
      std::stringstream ss(spec);
      for (std::string p; std::getline(ss, p, ',');) sizes.push_back(to_size(p));
    }
  } catch (const std::logic_error&) {
    throw HullError(ErrorCode::kParseError, "invalid --sizes '" + spec + "'");
  }
  if (sizes.empty()) throw HullError(ErrorCode::kParseError, "invalid --sizes '" + spec + "'");
  return sizes;
}

int ExitFor(const HullError& e) {
  switch (e.code()) {
    case ErrorCode::kDegenerateCloud:
    case ErrorCode::kInsufficientPoints:
    case ErrorCode::kDegeneratePoint:
    case ErrorCode::kDegenerateTriangle:
    case ErrorCode::kEmptyInput:
      return kDegenerateInput;
    case ErrorCode::kValidationFailure:
    case ErrorCode::kBrokenHorizon:
      return kValidationFailed;
    default:
      return kIoOrParse;
  }
}

struct BuildArgs {
  std::string input;
  std::string output;
  std::string format;
  double tolerance = 0.0;
  double expansion = 0.0;
  bool stats = false;
  bool normals = false;
};

struct ValidateArgs {
  std::string mesh;
  double tolerance = ToleranceConfig{}.plane_eps;
};

struct MinkowskiArgs {
  std::string a;
  std::string b;
  std::string output;
  std::string format;
  double rotate_z = 0.0;
  bool normals = false;
};

struct BenchArgs {
  std::string sizes = "500:10000:500";
  int repeats = 5;
  std::uint64_t seed = 1;
  std::string csv;
  std::string distribution = "ball";
  unsigned workers = 1;
};

struct TwoDArgs {
  std::string input;
  std::string output;
};

ToleranceConfig MakeConfig(double tolerance, double expansion) {
  ToleranceConfig cfg;
  if (tolerance > 0.0) {
    cfg.plane_eps = tolerance;
    cfg.expansion_eps = std::max(cfg.expansion_eps, tolerance);
  }
  if (expansion > 0.0) cfg.expansion_eps = expansion;
  cfg.Validate();
  return cfg;
}

int RunBuild(const BuildArgs& a, std::ostream& out, std::ostream&) {
  const ToleranceConfig cfg = MakeConfig(a.tolerance, a.expansion);
  auto cloud = std::make_shared<const PointCloud>(LoadCloud(a.input, a.format));
  const BuildResult result = BuildHull(cloud, cfg);
  WriteHull(a.output, result.hull, a.normals, "");
  if (a.stats) {
    const BuildStats& s = result.stats;
    out << "input=" << s.input_count << " dedup=" << s.dedup_count << " surface=" << s.surface_count
        << " hull_v=" << s.hull_vertex_count << " hull_f=" << s.hull_face_count
        << " elapsed_ms=" << std::fixed << std::setprecision(3)
        << std::chrono::duration<double, std::milli>(s.elapsed).count() << '\n';
  }
  return kOk;
}

int RunValidate(const ValidateArgs& a, std::ostream& out, std::ostream&) {
  const ObjData mesh = LoadObj(a.mesh);
  const MeshView view{mesh.points, mesh.faces};
  const bool convex = IsConvex(view, a.tolerance);
  const bool manifold = IsClosedManifold(mesh.faces);
  const bool outward = IsOutwardOriented(view);
  out << "convexity: " << (convex ? "PASS" : "FAIL") << '\n'
      << "manifold: " << (manifold ? "PASS" : "FAIL") << '\n'
      << "orientation: " << (outward ? "PASS" : "FAIL") << '\n';
  return convex && manifold && outward ? kOk : kValidationFailed;
}

int RunMinkowski(const MinkowskiArgs& a, std::ostream&, std::ostream&) {
  const PointCloud pa = LoadCloud(a.a, a.format);
  const PointCloud pb = LoadCloud(a.b, a.format);
  auto sum = std::make_shared<const PointCloud>(MinkowskiCloud(pa, pb, Mat3::RotationZ(a.rotate_z)));
  const BuildResult result = BuildHull(sum);
  WriteHull(a.output, result.hull, a.normals, "");
  return kOk;
}

int RunBenchCmd(const BenchArgs& a, std::ostream& out, std::ostream&) {
  const auto dist = ParseDistribution(a.distribution);
  if (!dist) throw HullError(ErrorCode::kParseError, "unknown distribution '" + a.distribution + "'");
  if (a.repeats < 1) throw HullError(ErrorCode::kParseError, "--repeats must be >= 1");
  const std::vector<std::size_t> sizes = ParseSizes(a.sizes);
  BenchOptions opts;
  opts.distribution = *dist;
  opts.workers = a.workers;
  const std::vector<TimingRecord> records = RunBench(sizes, a.repeats, a.seed, opts);
  const std::string csv = FormatTimingCsv(records);
  if (a.csv.empty()) {
    out << csv;
  } else {
    WriteText(a.csv, csv);
    out << "records=" << records.size();
    if (sizes.size() > 1) out << " loglog_slope=" << LogLogSlope(records);
    out << '\n';
  }
  return kOk;
}

int RunTwoD(const TwoDArgs& a, std::ostream&, std::ostream&) {
  const PointCloud2 cloud = LoadPoints2dCsv(a.input);
  const Polygon poly = BuildHull2d(cloud);
  PointCloud2 ring;
  for (std::size_t i : poly.vertices) ring.push_back(cloud[i]);
  SavePoints2dCsv(a.output, ring);
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex hulls by support mapping and sphere projection", "hull"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Build the convex hull of an OBJ or CSV point set");
  build_cmd->add_option("input", build.input, "Input .obj or .csv")->required();
  build_cmd->add_option("-o,--output", build.output, "Output .obj (or .csv for vertices)")->required();
  build_cmd->add_option("--format", build.format, "Input format override (obj|csv)");
  build_cmd->add_option("--tolerance", build.tolerance, "Plane-side tolerance");
  build_cmd->add_option("--expansion", build.expansion, "Expansion tolerance (simplification)");
  build_cmd->add_flag("--stats", build.stats, "Print build statistics");
  build_cmd->add_flag("--normals", build.normals, "Write one vn per face");

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check a triangle mesh is a closed convex hull");
  validate_cmd->add_option("mesh", validate.mesh, "Mesh .obj")->required();
  validate_cmd->add_option("--tolerance", validate.tolerance, "Convexity tolerance");

  MinkowskiArgs mink;
  auto* mink_cmd = app.add_subcommand("minkowski", "Hull of the Minkowski sum of two point sets");
  mink_cmd->add_option("a", mink.a, "First .obj or .csv")->required();
  mink_cmd->add_option("b", mink.b, "Second .obj or .csv (rotated)")->required();
  mink_cmd->add_option("--rotate-z", mink.rotate_z, "Rotation of b about z, degrees");
  mink_cmd->add_option("-o,--output", mink.output, "Output .obj")->required();
  mink_cmd->add_option("--format", mink.format, "Input format override (obj|csv)");
  mink_cmd->add_flag("--normals", mink.normals, "Write one vn per face");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time hull builds over random clouds");
  bench_cmd->add_option("--sizes", bench.sizes, "lo:hi:step or comma list");
  bench_cmd->add_option("--repeats", bench.repeats, "Clouds per size");
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_option("--csv", bench.csv, "Write records here instead of stdout");
  bench_cmd->add_option("--distribution", bench.distribution, "ball|sphere_shell|cube|grid");
  bench_cmd->add_option("--workers", bench.workers, "Parallel cells");

  TwoDArgs twod;
  auto* twod_cmd = app.add_subcommand("2d", "Convex polygon of a 2D CSV point set");
  twod_cmd->add_option("input", twod.input, "Input .csv (x,y)")->required();
  twod_cmd->add_option("-o,--output", twod.output, "Output .csv, counter-clockwise")->required();

  std::vector<std::string> argv_storage{"hull"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kIoOrParse;
  }

  try {
    if (*build_cmd) return RunBuild(build, out, err);
    if (*validate_cmd) return RunValidate(validate, out, err);
    if (*mink_cmd) return RunMinkowski(mink, out, err);
    if (*bench_cmd) return RunBenchCmd(bench, out, err);
    if (*twod_cmd) return RunTwoD(twod, out, err);
  } catch (const HullError& e) {
    err << "error: " << e.what() << '\n';
    return ExitFor(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoOrParse;
  }
  return kIoOrParse;
}

}  // namespace spherehull::cli
