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

#include <numbers>
#include <random>

#include "uvbot/robot/lidar.h"
#include "uvbot/world/occupancy_grid.h"
#include "uvbot/world/raycast.h"

namespace {

using uvbot::OccupancyGrid;

// Square room with a border wall and scattered 1-cell pillars.
OccupancyGrid PillarRoom(int n, double resolution) {
  OccupancyGrid grid(n, n, resolution);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> pick(1, n - 2);
  for (int i = 0; i < n; ++i) {
    grid.set({i, 0}, uvbot::Occupancy::kOccupied);
    grid.set({i, n - 1}, uvbot::Occupancy::kOccupied);
    grid.set({0, i}, uvbot::Occupancy::kOccupied);
    grid.set({n - 1, i}, uvbot::Occupancy::kOccupied);
  }
  for (int i = 0; i < n * n / 50; ++i) grid.set({pick(rng), pick(rng)}, uvbot::Occupancy::kOccupied);
  grid.set({n / 2, n / 2}, uvbot::Occupancy::kFree);
  return grid;
}

void BM_Raycast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OccupancyGrid grid = PillarRoom(n, 0.05);
  const uvbot::Point2 origin = grid.CellCenter({n / 2, n / 2});
  double angle = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(uvbot::Raycast(grid, origin, angle, 100.0));
    angle += 0.0174533;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Raycast)->Arg(50)->Arg(200)->Arg(1000);

void BM_LidarScan(benchmark::State& state) {
  const OccupancyGrid grid = PillarRoom(200, 0.05);
  uvbot::LidarConfig config;
  config.beam_count = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const uvbot::Point2 c = grid.CellCenter({100, 100});
  for (auto _ : state) {
    benchmark::DoNotOptimize(uvbot::SimulateLidar(grid, {c.x, c.y, 0.3}, config, rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LidarScan)->Arg(90)->Arg(360);

void BM_Inflate(benchmark::State& state) {
  const OccupancyGrid grid = PillarRoom(static_cast<int>(state.range(0)), 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(uvbot::Inflate(grid, 0.5));
}
BENCHMARK(BM_Inflate)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
