/*
 * Copyright 2026 The equisplit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "equisplit/closed_form.hpp"
#include "equisplit/geometry.hpp"
#include "equisplit/hexpack.hpp"
#include "equisplit/optimizer.hpp"

namespace {

using namespace equisplit;

void BM_LoopAreaWalkAndArc(benchmark::State& state) {
  const RegularPolygon tri(3);
  const Point2 v0 = tri.vertex(0);
  const double r = 0.4;
  BoundaryLoop loop;
  loop.pieces.push_back(Segment{v0, {v0.x + r, v0.y}});
  loop.pieces.push_back(ArcPiece{make_arc(v0, r, 0.0, kPi / 3.0), false});
  loop.pieces.push_back(Segment{{v0.x + r * 0.5, v0.y + r * std::sqrt(3.0) / 2.0}, v0});
  for (auto _ : state) benchmark::DoNotOptimize(loop_area(loop));
}
BENCHMARK(BM_LoopAreaWalkAndArc);

void BM_LoopAreaPolygonWalk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BoundaryLoop loop;
  loop.pieces.push_back(PolygonWalk{RegularPolygon(n), 0.25, n + 0.25});
  for (auto _ : state) benchmark::DoNotOptimize(loop_area(loop));
}
BENCHMARK(BM_LoopAreaPolygonWalk)->Arg(3)->Arg(12)->Arg(96);

void BM_HexPack(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pack_hexagons(4, state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HexPack)->RangeMultiplier(10)->Range(100, 100000)->Complexity(benchmark::oN);

void BM_OptimizeCornerArc(benchmark::State& state) {
  const auto cases = case_catalog(Catalog::kHalves);
  OptimizerConfig cfg;
  cfg.points_per_edge = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimize(cases[2].topology, cfg));
}
BENCHMARK(BM_OptimizeCornerArc)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_OptimizeYSplit(benchmark::State& state) {
  const auto cases = case_catalog(Catalog::kThirds);
  OptimizerConfig cfg;
  cfg.points_per_edge = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimize(cases[4].topology, cfg));
}
BENCHMARK(BM_OptimizeYSplit)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_LowerBound(benchmark::State& state) {
  for (auto _ : state) {
    for (int m = 1; m <= 16; ++m) benchmark::DoNotOptimize(lower_bound(m, 6));
  }
}
BENCHMARK(BM_LowerBound);

}  // namespace
BENCHMARK_MAIN();
