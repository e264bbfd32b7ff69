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

// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are pinned here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace spherehull {
namespace {

using testing::CoordSet;
using testing::NearRel;
using testing::VertexCoords;
using Clock = std::chrono::steady_clock;

constexpr double kVolumeRel = 1e-9;
constexpr double kAbsVolume = 1e-9;
constexpr double kOracleBudgetSec = 60.0;
constexpr double kBenchBudgetSec = 300.0;
constexpr double kSlopeLo = 0.9;
constexpr double kSlopeHi = 1.4;
constexpr int kOracleClouds = 500;
constexpr int kPlanarClouds = 500;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Every hull built anywhere in the run is checked here.
struct Tally {
  int builds = 0;
  int failures = 0;
  std::string first;

  bool Check(const HullMesh& hull, const std::string& what) {
    ++builds;
    const ValidationReport r = ValidateHull(hull, ToleranceConfig{}.plane_eps);
    if (r.ok()) return true;
    if (failures++ == 0) first = what + " [" + r.Summary() + "]";
    return false;
  }
};

Tally g_tally;

HullMesh Build(const PointCloud& pts, const std::string& what) {
  HullMesh hull = BuildHull(pts).hull;
  g_tally.Check(hull, what);
  return hull;
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void Fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

int g_failed = 0;

void Report(int id, const std::string& name, const Verdict& v, const std::string& summary) {
  std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << ": " << summary;
  if (!v.pass) std::cout << " | " << v.detail.str();
  std::cout << std::endl;
  if (!v.pass) ++g_failed;
}

const Distribution kMixed[] = {Distribution::kBall, Distribution::kSphereShell, Distribution::kCube,
                               Distribution::kGrid};

void OracleEquivalence() {
  Verdict v;
  const auto start = Clock::now();
  int compared_sets = 0;
  int flat = 0;
  double worst = 0.0;
  SplitMix64 sizes(1001);
  for (int k = 0; k < kOracleClouds; ++k) {
    const Distribution dist = kMixed[k % 4];
    const std::size_t n = 4 + sizes.Next() % 47;
    const std::uint64_t seed = 5000 + static_cast<std::uint64_t>(k);
    const PointCloud pts = RandomCloud(n, seed, dist);
    const std::string tag = std::string(ToString(dist)) + " n=" + std::to_string(n) +
                            " seed=" + std::to_string(seed);
    const oracle::Hull3 ref = oracle::BruteHull(pts);
    if (ref.flat) {
      ++flat;
      try {
        BuildHull(pts);
        v.Fail("flat cloud accepted: " + tag);
      } catch (const HullError& e) {
        if (e.code() != ErrorCode::kDegenerateCloud && e.code() != ErrorCode::kInsufficientPoints) {
          v.Fail("flat cloud raised " + std::string(ToString(e.code())) + ": " + tag);
        }
      }
      continue;
    }
    const HullMesh hull = Build(pts, tag);
    const double vol = Volume(hull);
    worst = std::max(worst, std::abs(vol - ref.volume) / ref.volume);
    if (!NearRel(vol, ref.volume, kVolumeRel)) v.Fail("volume mismatch: " + tag);
    if (dist != Distribution::kGrid) {
      ++compared_sets;
      if (VertexCoords(hull) != CoordSet(pts, ref.extreme)) v.Fail("vertex set mismatch: " + tag);
    }
  }
  const double secs = Seconds(start);
  if (secs >= kOracleBudgetSec) v.Fail("took " + std::to_string(secs) + " s");
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%d clouds (%d vertex-set compared, %d flat rejected), worst volume rel err %.2e, %.1f s",
                kOracleClouds, compared_sets, flat, worst, secs);
  Report(1, "oracle equivalence", v, buf);
}

void DegenerateSuiteCheck() {
  Verdict v;
  std::ostringstream summary;
  for (const DegenerateCase& c : DegenerateSuite()) {
    const HullMesh hull = Build(c.cloud, c.name);
    const double vol = Volume(hull);
    if (c.name == "duplicate_heavy" || c.name == "cube_face_lattice") {
      if (std::abs(vol - 1.0) > kAbsVolume) v.Fail(c.name + " volume " + std::to_string(vol));
    }
    if (c.name == "cube_face_lattice") {
      std::vector<std::size_t> corners;
      for (std::size_t i = 0; i < c.cloud.size(); ++i) {
        const Point3& p = c.cloud[i];
        if ((p.x == 0 || p.x == 1) && (p.y == 0 || p.y == 1) && (p.z == 0 || p.z == 1)) corners.push_back(i);
      }
      if (VertexCoords(hull) != CoordSet(c.cloud, corners)) v.Fail("lattice hull is not the 8 corners");
    }
    const double ref = oracle::BruteHull(c.cloud).volume;
    if (!NearRel(vol, ref, kVolumeRel)) v.Fail(c.name + " oracle volume mismatch");
    if (!NearRel(vol, c.expected_volume, kVolumeRel)) v.Fail(c.name + " analytic volume mismatch");
    summary << c.name << "=" << hull.num_vertices() << "v ";
  }
  Report(3, "degenerate suite", v, summary.str());
}

void MinkowskiCubes() {
  Verdict v;
  const PointCloud cube = testing::CubeCorners();
  const PointCloud id = MinkowskiCloud(cube, cube);
  const double vol = Volume(Build(id, "minkowski identity"));
  if (id.size() != 64) v.Fail("cloud size " + std::to_string(id.size()));
  if (std::abs(vol - 8.0) > kAbsVolume) v.Fail("identity volume " + std::to_string(vol));
  int rotated = 0;
  for (double deg : {10.0, 22.5, 30.0, 45.0, 60.0, 72.0, 90.0, 135.0}) {
    const PointCloud sum = MinkowskiCloud(cube, cube, Mat3::RotationZ(deg));
    const double got = Volume(Build(sum, "minkowski " + std::to_string(deg)));
    if (!NearRel(got, oracle::BruteHull(sum).volume, kVolumeRel)) {
      v.Fail("rotated " + std::to_string(deg) + " deg volume mismatch");
    }
    ++rotated;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "identity volume %.12f, %d rotated cases vs oracle", vol, rotated);
  Report(4, "minkowski two cubes", v, buf);
}

void TimingTrend() {
  Verdict v;
  std::vector<std::size_t> sizes;
  for (std::size_t n = 500; n <= 10000; n += 500) sizes.push_back(n);
  const auto start = Clock::now();
  double slope = std::nan("");
  std::size_t records = 0;
  try {
    const auto recs = RunBench(sizes, 5, 20260101);
    records = recs.size();
    slope = LogLogSlope(recs);
  } catch (const ValidationFailure& e) {
    v.Fail(e.what());
  }
  const double secs = Seconds(start);
  if (records != 100) v.Fail("expected 100 records");
  if (!(slope >= kSlopeLo && slope <= kSlopeHi)) v.Fail("slope outside [0.9, 1.4]");
  if (secs >= kBenchBudgetSec) v.Fail("took " + std::to_string(secs) + " s");
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu records, log-log slope %.3f, %.1f s", records, slope, secs);
  Report(5, "timing trend", v, buf);
}

void Dynamics() {
  Verdict v;
  int roundtrips = 0;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (Distribution dist : {Distribution::kBall, Distribution::kCube, Distribution::kSphereShell}) {
      PointCloud pts = RandomCloud(200, seed, dist);
      SplitMix64 rng(seed * 7919);
      for (std::size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[rng.Next() % i]);
      const std::string tag = std::string(ToString(dist)) + " seed=" + std::to_string(seed);

      HullMesh inc = BuildHull(std::span(pts).first(4)).hull;
      for (std::size_t i = 4; i < pts.size(); ++i) inc = InsertPoint(inc, pts[i]);
      g_tally.Check(inc, "incremental " + tag);
      const HullMesh batch = Build(pts, "batch " + tag);
      if (VertexCoords(inc) != VertexCoords(batch)) v.Fail("vertex sets differ: " + tag);
      if (!NearRel(Volume(inc), Volume(batch), kVolumeRel)) v.Fail("volumes differ: " + tag);

      for (std::size_t k = 0; k < 5; ++k) {
        const std::size_t victim = batch.vertex_indices()[k * batch.num_vertices() / 5];
        const HullMesh removed = RemovePoint(batch, victim);
        g_tally.Check(removed, "removed " + tag);
        const HullMesh back = InsertPoint(removed, pts[victim]);
        g_tally.Check(back, "reinserted " + tag);
        if (!NearRel(Volume(back), Volume(batch), kVolumeRel)) v.Fail("round trip volume: " + tag);
        ++roundtrips;
      }
    }
  }
  Report(6, "dynamics", v,
         "9 shuffled 200-point clouds incremental vs batch, " + std::to_string(roundtrips) +
             " remove/reinsert round trips");
}

void Planar() {
  Verdict v;
  SplitMix64 sizes(2002);
  int flat = 0;
  double worst = 0.0;
  for (int k = 0; k < kPlanarClouds; ++k) {
    const Distribution dist = kMixed[k % 4];
    const std::size_t n = 3 + sizes.Next() % 198;
    const std::uint64_t seed = 9000 + static_cast<std::uint64_t>(k);
    const PointCloud2 pts = RandomCloud2d(n, seed, dist);
    const std::string tag = std::string(ToString(dist)) + " n=" + std::to_string(n) +
                            " seed=" + std::to_string(seed);
    const auto ref = oracle::GrahamScan(pts, ToleranceConfig{}.plane_eps);
    if (ref.size() < 3) {
      ++flat;
      try {
        BuildHull2d(pts);
        v.Fail("collinear cloud accepted: " + tag);
      } catch (const HullError&) {
      }
      continue;
    }
    const Polygon poly = BuildHull2d(pts);
    auto a = poly.vertices;
    auto b = ref;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) v.Fail("vertex set mismatch: " + tag);
    const double area = SignedArea(pts, poly);
    const double ref_area = oracle::PolygonArea(pts, ref);
    worst = std::max(worst, std::abs(area - ref_area) / ref_area);
    if (!NearRel(area, ref_area, kVolumeRel)) v.Fail("area mismatch: " + tag);
    if (!IsConvexPolygon(pts, poly, ToleranceConfig{}.plane_eps)) v.Fail("not convex: " + tag);
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d clouds vs Graham scan (%d collinear rejected), worst area rel err %.2e",
                kPlanarClouds, flat, worst);
  Report(7, "2D hull", v, buf);
}

void ModelReduction() {
  Verdict v;
  const testing::TriMesh mesh = testing::BumpySphere(4);
  testing::TempDir dir;
  SaveObj(dir / "bumpy.obj", mesh.points, mesh.faces);
  const ObjData loaded = LoadObj(dir / "bumpy.obj");
  if (loaded.points.size() <= 1000) v.Fail("fixture too small");
  if (!IsClosedManifold(loaded.faces)) v.Fail("fixture is not watertight");
  if (IsConvex(MeshView{loaded.points, loaded.faces}, 1e-6)) v.Fail("fixture has no concavity");

  const BuildResult r = BuildHull(loaded.points);
  g_tally.Check(r.hull, "bumpy sphere");
  const double hull_vol = Volume(r.hull);
  const double mesh_vol = oracle::MeshVolume(loaded.points, loaded.faces);

  // Max-spread tetrahedron over the mesh vertices: its volume is a lower
  // bound for any set containing them.
  const auto& p = loaded.points;
  std::size_t a = 0, b = 0, c = 0, d = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (Distance(p[i], p[a]) > Distance(p[b], p[a])) b = i;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (Length(Cross(p[b] - p[a], p[i] - p[a])) > Length(Cross(p[b] - p[a], p[c] - p[a]))) c = i;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::abs(SignedTetVolume(p[a], p[b], p[c], p[i])) > std::abs(SignedTetVolume(p[a], p[b], p[c], p[d]))) d = i;
  }
  const double tet_vol = std::abs(SignedTetVolume(p[a], p[b], p[c], p[d]));

  if (!(r.stats.hull_vertex_count < r.stats.input_count)) v.Fail("no reduction");
  if (!(hull_vol >= tet_vol)) v.Fail("hull smaller than the tetrahedron bound");
  if (!(hull_vol >= mesh_vol)) v.Fail("hull smaller than the mesh it wraps");
  std::size_t outside = 0;
  for (const Point3& q : p) outside += !ContainsPoint(r.hull, q, ToleranceConfig{}.plane_eps);
  if (outside) v.Fail(std::to_string(outside) + " mesh vertices outside");

  char buf[192];
  std::snprintf(buf, sizeof buf,
                "%zu -> %zu vertices (%zu faces), hull vol %.4f >= mesh vol %.4f >= tet bound %.4f",
                r.stats.input_count, r.stats.hull_vertex_count, r.stats.hull_face_count, hull_vol,
                mesh_vol, tet_vol);
  Report(8, "model reduction", v, buf);
}

void ValidationSweep() {
  Verdict v;
  if (g_tally.failures) v.Fail(std::to_string(g_tally.failures) + " failed, first: " + g_tally.first);
  Report(2, "validation suite", v,
         std::to_string(g_tally.builds) +
             " builds checked for convexity, manifold, orientation, Euler and containment "
             "(plus every benchmark build)");
}

}  // namespace
}  // namespace spherehull

int main() {
  using namespace spherehull;
  OracleEquivalence();
  DegenerateSuiteCheck();
  MinkowskiCubes();
  Dynamics();
  Planar();
  ModelReduction();
  TimingTrend();
  ValidationSweep();
  std::cout << (g_failed ? "acceptance: FAILED " : "acceptance: all passed ") << "(" << g_failed
            << " failing)" << std::endl;
  return g_failed ? 1 : 0;
}
