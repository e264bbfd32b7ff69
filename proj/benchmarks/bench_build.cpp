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

#include <benchmark/benchmark.h>

#include <memory>

#include "spherehull/spherehull.hpp"

namespace spherehull {
namespace {

void BuildHullCase(benchmark::State& state, Distribution dist) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto cloud = std::make_shared<const PointCloud>(RandomCloud(n, 42, dist));
  for (auto _ : state) {
    BuildResult r = BuildHull(cloud);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(state.range(0));
}

void BM_BuildBall(benchmark::State& state) { BuildHullCase(state, Distribution::kBall); }
void BM_BuildShell(benchmark::State& state) { BuildHullCase(state, Distribution::kSphereShell); }
void BM_BuildGrid(benchmark::State& state) { BuildHullCase(state, Distribution::kGrid); }

void BM_Build2d(benchmark::State& state) {
  const auto cloud = RandomCloud2d(static_cast<std::size_t>(state.range(0)), 42, Distribution::kBall);
  for (auto _ : state) {
    Polygon p = BuildHull2d(cloud);
    benchmark::DoNotOptimize(p);
  }
  state.SetComplexityN(state.range(0));
}

BENCHMARK(BM_BuildBall)->RangeMultiplier(2)->Range(500, 64000)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_BuildShell)->RangeMultiplier(2)->Range(500, 8000)->Complexity();
BENCHMARK(BM_BuildGrid)->RangeMultiplier(2)->Range(512, 32768)->Complexity();
BENCHMARK(BM_Build2d)->RangeMultiplier(2)->Range(500, 64000)->Complexity(benchmark::oNLogN);

}  // namespace
}  // namespace spherehull

BENCHMARK_MAIN();
