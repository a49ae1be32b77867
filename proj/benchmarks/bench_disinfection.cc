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

#include "uvbot/disinfection/dose_grid.h"
#include "uvbot/disinfection/lamp_array.h"
#include "uvbot/disinfection/pose_planner.h"
#include "uvbot/disinfection/target.h"
#include "uvbot/world/occupancy_grid.h"

namespace {

using uvbot::OccupancyGrid;

// Walled room of n x n cells at 0.1 m.
OccupancyGrid Room(int n) {
  OccupancyGrid grid(n, n, 0.1);
  for (int i = 0; i < n; ++i) {
    grid.set({i, 0}, uvbot::Occupancy::kOccupied);
    grid.set({i, n - 1}, uvbot::Occupancy::kOccupied);
    grid.set({0, i}, uvbot::Occupancy::kOccupied);
    grid.set({n - 1, i}, uvbot::Occupancy::kOccupied);
  }
  return grid;
}

void BM_IrradianceField(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OccupancyGrid grid = Room(n);
  const uvbot::LampArray lamps;
  const uvbot::Point2 c = grid.CellCenter({n / 2, n / 2});
  const auto positions = lamps.WorldPositions({c.x, c.y, 0.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(uvbot::IrradianceField(grid, positions, lamps.uvc_power_w));
  }
  state.SetItemsProcessed(state.iterations() * grid.size());
}
BENCHMARK(BM_IrradianceField)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_DoseStepStationary(benchmark::State& state) {
  const OccupancyGrid grid = Room(80);
  uvbot::DoseAccumulator acc(grid, uvbot::LampArray{});
  uvbot::DoseGrid dose(grid);
  const uvbot::Point2 c = grid.CellCenter({40, 40});
  for (auto _ : state) acc.Step(dose, {c.x, c.y, 0.0}, true, 0.05);
}
BENCHMARK(BM_DoseStepStationary)->Unit(benchmark::kMicrosecond);

void BM_PosePlanner(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OccupancyGrid grid = Room(n);
  uvbot::DisinfectionTarget target;
  target.required_dose = 100.0;
  for (int i = 1; i < n - 1; i += 2) target.cells.push_back({i, 0});
  for (int i = 1; i < n - 1; i += 2) target.cells.push_back({0, i});
  uvbot::PosePlannerOptions options;
  options.candidate_spacing = 0.5;
  options.headings = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        uvbot::PlanDisinfectionPoses(grid, target, uvbot::LampArray{}, options));
  }
}
BENCHMARK(BM_PosePlanner)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
