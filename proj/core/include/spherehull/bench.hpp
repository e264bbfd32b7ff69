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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spherehull/geometry.hpp"
#include "spherehull/hull2d.hpp"

namespace spherehull {

/// SplitMix64: state advances by the golden-ratio increment and each output
/// is the finalizer of the new state. Doubles take the top 53 bits.
/// Portable and reproducible across languages.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t Next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return Mix(state_);
  }

  /// Uniform in [0, 1).
  double NextDouble() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class Distribution { kBall, kSphereShell, kCube, kGrid };

const char* ToString(Distribution d);
std::optional<Distribution> ParseDistribution(std::string_view name);

/// Deterministic for fixed (n, seed, distribution).
///   ball:         uniform in the unit ball (rejection from [-1,1]^3)
///   sphere_shell: uniform on the unit sphere
///   cube:         uniform in [0,1]^3
///   grid:         integer lattice; n = m^3 gives the whole m x m x m
///                 lattice in lexicographic order, otherwise n distinct
///                 points of a seeded shuffle of the ceil(cbrt n)^3 lattice
PointCloud RandomCloud(std::size_t n, std::uint64_t seed, Distribution distribution);

/// Planar counterpart: unit disk, unit circle, unit square, lattice.
PointCloud2 RandomCloud2d(std::size_t n, std::uint64_t seed, Distribution distribution);

struct DegenerateCase {
  std::string name;
  PointCloud cloud;
  double expected_volume;
};

/// duplicate_heavy, cube_face_lattice, needle, sliver_fan, cocircular_ring.
std::vector<DegenerateCase> DegenerateSuite();

struct TimingRecord {
  std::size_t n = 0;
  int repeat = 0;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ns = 0;
  std::size_t hull_vertices = 0;
  std::size_t hull_faces = 0;
};

struct BenchOptions {
  Distribution distribution = Distribution::kBall;
  /// Parallel cells; each build stays single-threaded.
  unsigned workers = 1;
  ToleranceConfig config{};
};

/// Thrown when a benchmark build fails validation.
class ValidationFailure : public HullError {
 public:
  ValidationFailure(std::uint64_t seed, std::size_t n, const std::string& detail);
  std::uint64_t seed() const { return seed_; }
  std::size_t size() const { return size_; }

 private:
  std::uint64_t seed_;
  std::size_t size_;
};

/// Seed of the cloud for one (n, repeat) cell.
std::uint64_t CellSeed(std::uint64_t seed, std::size_t n, int repeat);

/// One record per (size, repeat), ordered by size then repeat. Every hull is
/// validated before its time is kept; timing covers BuildHull only.
std::vector<TimingRecord> RunBench(std::span<const std::size_t> sizes, int repeats,
                                   std::uint64_t seed, const BenchOptions& options = {});

/// Header `n,repeat,seed,elapsed_ns,hull_vertices,hull_faces`.
std::string FormatTimingCsv(std::span<const TimingRecord> records);

/// Least-squares slope of log(mean elapsed) against log(n).
double LogLogSlope(std::span<const TimingRecord> records);

}  // namespace spherehull
