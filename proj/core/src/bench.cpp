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

#include "spherehull/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <thread>

#include "spherehull/hull3d.hpp"
#include "spherehull/validation.hpp"

namespace spherehull {
namespace {

std::size_t LatticeSide(std::size_t n) {
  std::size_t m = 1;
  while (m * m * m < n) ++m;
  return m;
}

// Fisher-Yates driven by the generator.
template <typename T>
void Shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.Next() % i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

const char* ToString(Distribution d) {
  switch (d) {
    case Distribution::kBall: return "ball";
    case Distribution::kSphereShell: return "sphere_shell";
    case Distribution::kCube: return "cube";
    case Distribution::kGrid: return "grid";
  }
  return "ball";
}

std::optional<Distribution> ParseDistribution(std::string_view name) {
  if (name == "ball") return Distribution::kBall;
  if (name == "sphere_shell") return Distribution::kSphereShell;
  if (name == "cube") return Distribution::kCube;
  if (name == "grid") return Distribution::kGrid;
  return std::nullopt;
}

PointCloud RandomCloud(std::size_t n, std::uint64_t seed, Distribution distribution) {
  SplitMix64 rng(seed);
  PointCloud out;
  out.reserve(n);
  switch (distribution) {
    case Distribution::kBall:
      while (out.size() < n) {
        const Point3 p{2.0 * rng.NextDouble() - 1.0, 2.0 * rng.NextDouble() - 1.0,
                       2.0 * rng.NextDouble() - 1.0};
        if (Dot(p, p) <= 1.0) out.push_back(p);
      }
      break;
    case Distribution::kSphereShell:
      while (out.size() < n) {
        const double z = 2.0 * rng.NextDouble() - 1.0;
        const double phi = 2.0 * std::numbers::pi * rng.NextDouble();
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        out.push_back({r * std::cos(phi), r * std::sin(phi), z});
      }
      break;
    case Distribution::kCube:
      while (out.size() < n) out.push_back({rng.NextDouble(), rng.NextDouble(), rng.NextDouble()});
      break;
    case Distribution::kGrid: {
      const std::size_t m = LatticeSide(n);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          for (std::size_t k = 0; k < m; ++k) {
            out.push_back({static_cast<double>(i), static_cast<double>(j), static_cast<double>(k)});
          }
        }
      }
      if (out.size() != n) {
        Shuffle(out, rng);
        out.resize(n);
      }
      break;
    }
  }
  return out;
}

PointCloud2 RandomCloud2d(std::size_t n, std::uint64_t seed, Distribution distribution) {
  SplitMix64 rng(seed);
  PointCloud2 out;
  out.reserve(n);
  switch (distribution) {
    case Distribution::kBall:
      while (out.size() < n) {
        const Point2 p{2.0 * rng.NextDouble() - 1.0, 2.0 * rng.NextDouble() - 1.0};
        if (Dot(p, p) <= 1.0) out.push_back(p);
      }
      break;
    case Distribution::kSphereShell:
      while (out.size() < n) {
        const double phi = 2.0 * std::numbers::pi * rng.NextDouble();
        out.push_back({std::cos(phi), std::sin(phi)});
      }
      break;
    case Distribution::kCube:
      while (out.size() < n) out.push_back({rng.NextDouble(), rng.NextDouble()});
      break;
    case Distribution::kGrid: {
      std::size_t m = 1;
      while (m * m < n) ++m;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          out.push_back({static_cast<double>(i), static_cast<double>(j)});
        }
      }
      if (out.size() != n) {
        Shuffle(out, rng);
        out.resize(n);
      }
      break;
    }
  }
  return out;
}

std::vector<DegenerateCase> DegenerateSuite() {
  std::vector<DegenerateCase> suite;

  PointCloud corners;
  for (int i = 0; i < 8; ++i) corners.push_back({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});

  {
    PointCloud dup;
    for (int copy = 0; copy < 5; ++copy) dup.insert(dup.end(), corners.begin(), corners.end());
    suite.push_back({"duplicate_heavy", dup, 1.0});
  }
  {
    // Surface of the 11x11x11 lattice with spacing 1/10: 602 points.
    PointCloud lattice;
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        for (int k = 0; k <= 10; ++k) {
          if (i == 0 || i == 10 || j == 0 || j == 10 || k == 0 || k == 10) {
            lattice.push_back({i / 10.0, j / 10.0, k / 10.0});
          }
        }
      }
    }
    suite.push_back({"cube_face_lattice", lattice, 1.0});
  }
  {
    // 100 points on a segment of length 10 plus a small diamond around
    // its midpoint: a bipyramid of volume (1/3) * 2a^2 * 10.
    constexpr double a = 0.01;
    PointCloud needle;
    for (int k = 0; k < 100; ++k) needle.push_back({10.0 * k / 99.0, 0.0, 0.0});
    needle.push_back({5.0, a, 0.0});
    needle.push_back({5.0, 0.0, a});
    needle.push_back({5.0, -a, 0.0});
    needle.push_back({5.0, 0.0, -a});
    suite.push_back({"needle", needle, 20.0 * a * a / 3.0});
  }
  {
    // 40 points on a 0.01 rad arc of the unit circle, the circle centre,
    // and apexes above and below the centre: long thin fan triangles.
    constexpr int kArc = 40;
    constexpr double kSpan = 0.01;
    PointCloud fan{{0.0, 0.0, 0.0}};
    for (int k = 0; k < kArc; ++k) {
      const double t = kSpan * k / (kArc - 1);
      fan.push_back({std::cos(t), std::sin(t), 0.0});
    }
    fan.push_back({0.0, 0.0, 1.0});
    fan.push_back({0.0, 0.0, -1.0});
    const double base = 0.5 * (kArc - 1) * std::sin(kSpan / (kArc - 1));
    suite.push_back({"sliver_fan", fan, 2.0 * base / 3.0});
  }
  {
    constexpr int kRing = 32;
    PointCloud ring;
    for (int k = 0; k < kRing; ++k) {
      const double t = 2.0 * std::numbers::pi * k / kRing;
      ring.push_back({std::cos(t), std::sin(t), 0.0});
    }
    ring.push_back({0.0, 0.0, 1.0});
    ring.push_back({0.0, 0.0, -1.0});
    const double base = 0.5 * kRing * std::sin(2.0 * std::numbers::pi / kRing);
    suite.push_back({"cocircular_ring", ring, 2.0 * base / 3.0});
  }
  return suite;
}

ValidationFailure::ValidationFailure(std::uint64_t seed, std::size_t n, const std::string& detail)
    : HullError(ErrorCode::kValidationFailure,
                "validation failed for n=" + std::to_string(n) + " seed=" + std::to_string(seed) +
                    ": " + detail),
      seed_(seed),
      size_(n) {}

std::uint64_t CellSeed(std::uint64_t seed, std::size_t n, int repeat) {
  return SplitMix64::Mix(SplitMix64::Mix(seed ^ (static_cast<std::uint64_t>(n) << 20)) +
                         static_cast<std::uint64_t>(repeat));
}

std::vector<TimingRecord> RunBench(std::span<const std::size_t> sizes, int repeats,
                                   std::uint64_t seed, const BenchOptions& options) {
  if (sizes.empty()) throw HullError(ErrorCode::kInvalidArgument, "no benchmark sizes given");
  if (repeats < 1) throw HullError(ErrorCode::kInvalidArgument, "repeats must be >= 1");

  std::vector<TimingRecord> records;
  for (std::size_t n : sizes) {
    for (int r = 0; r < repeats; ++r) records.push_back({n, r, CellSeed(seed, n, r), 0, 0, 0});
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      TimingRecord& rec = records[i];
      try {
        auto cloud = std::make_shared<const PointCloud>(
            RandomCloud(rec.n, rec.seed, options.distribution));
        const BuildResult result = BuildHull(cloud, options.config);
        const ValidationReport report = ValidateHull(result.hull, options.config.expansion_eps);
        if (!report.ok()) throw ValidationFailure(rec.seed, rec.n, report.Summary());
        rec.elapsed_ns = std::max<std::int64_t>(1, result.stats.elapsed.count());
        rec.hull_vertices = result.hull.num_vertices();
        rec.hull_faces = result.hull.num_faces();
      } catch (const ValidationFailure&) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      } catch (const std::exception& e) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::make_exception_ptr(ValidationFailure(rec.seed, rec.n, e.what()));
      }
    }
  };

  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::string FormatTimingCsv(std::span<const TimingRecord> records) {
  std::string out = "n,repeat,seed,elapsed_ns,hull_vertices,hull_faces\n";
  for (const TimingRecord& r : records) {
    out += std::to_string(r.n) + ',' + std::to_string(r.repeat) + ',' + std::to_string(r.seed) + ',' +
           std::to_string(r.elapsed_ns) + ',' + std::to_string(r.hull_vertices) + ',' +
           std::to_string(r.hull_faces) + '\n';
  }
  return out;
}

double LogLogSlope(std::span<const TimingRecord> records) {
  std::map<std::size_t, std::pair<double, int>> sums;
  for (const TimingRecord& r : records) {
    auto& [total, count] = sums[r.n];
    total += static_cast<double>(r.elapsed_ns);
    ++count;
  }
  if (sums.size() < 2) return std::nan("");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, tc] : sums) {
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(tc.first / tc.second);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(sums.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace spherehull
