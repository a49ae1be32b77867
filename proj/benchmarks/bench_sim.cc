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

#include "uvbot/robot/kinematics.h"
#include "uvbot/sim/simulator.h"

namespace {

void BM_StepKinematics(benchmark::State& state) {
  uvbot::Pose2D pose;
  const uvbot::Twist cmd{0.5, 0.3};
  for (auto _ : state) {
    pose = uvbot::StepKinematics(pose, cmd, 0.05);
    benchmark::DoNotOptimize(pose);
  }
}
BENCHMARK(BM_StepKinematics);

void BM_SimulatorTick(benchmark::State& state) {
  uvbot::OccupancyGrid grid(100, 100, 0.05);
  uvbot::SimConfig config;
  config.lidar.noise_sigma = 0.0;
  uvbot::Simulator sim(grid, config, {2.5, 2.5, 0.0});
  sim.CommandLamp(state.range(0) != 0);
  sim.CommandVelocity({0.0, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(sim.Step());
}
BENCHMARK(BM_SimulatorTick)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace
