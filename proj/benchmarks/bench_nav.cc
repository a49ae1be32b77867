// Copyright 2026 The uvbot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>

#include "uvbot/nav/assist.h"
#include "uvbot/nav/planner.h"
#include "uvbot/world/occupancy_grid.h"

namespace {

using uvbot::OccupancyGrid;

// Serpentine walls: every fourth column is a wall with a gap alternating
// between top and bottom, so paths are long.
OccupancyGrid Serpentine(int n) {
  OccupancyGrid grid(n, n, 0.05);
  for (int col = 4; col < n - 1; col += 4) {
    const bool gap_top = (col / 4) % 2 == 0;
    for (int row = 0; row < n; ++row) {
      const bool gap = gap_top ? row >= n - 2 : row <= 1;
      if (!gap) grid.set({col, row}, uvbot::Occupancy::kOccupied);
    }
  }
  return grid;
}

void BM_AStarSerpentine(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OccupancyGrid grid = Serpentine(n);
  const uvbot::Point2 start = grid.CellCenter({1, 1});
  const uvbot::Point2 goal = grid.CellCenter({n - 2, n / 2});
  for (auto _ : state) benchmark::DoNotOptimize(uvbot::PlanPathInflated(grid, start, goal));
}
BENCHMARK(BM_AStarSerpentine)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_AStarOpen(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OccupancyGrid grid(n, n, 0.05);
  const uvbot::Point2 start = grid.CellCenter({0, 0});
  const uvbot::Point2 goal = grid.CellCenter({n - 1, n / 3});
  for (auto _ : state) benchmark::DoNotOptimize(uvbot::PlanPathInflated(grid, start, goal));
}
BENCHMARK(BM_AStarOpen)->Arg(100)->Arg(400)->Unit(benchmark::kMicrosecond);

void BM_AssistSteer(benchmark::State& state) {
  uvbot::LaserScan scan;
  scan.angle_increment = 2.0 * std::numbers::pi / 360.0;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> range(0.2, 3.0);
  for (int i = 0; i < 360; ++i) scan.ranges.push_back(range(rng));
  const uvbot::AssistParams params;
  for (auto _ : state) {
    benchmark::DoNotOptimize(uvbot::AssistSteer({0.5, 0.1}, scan, params, 1.5));
  }
}
BENCHMARK(BM_AssistSteer);

}  // namespace
