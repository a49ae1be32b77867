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

#ifndef UVBOT_ROBOT_LIDAR_H_
#define UVBOT_ROBOT_LIDAR_H_

#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

#include "uvbot/world/occupancy_grid.h"
#include "uvbot/world/pose.h"

namespace uvbot {

// One revolution of the planar scanner. Angles are relative to the robot
// heading; beam i points at angle_min + i * angle_increment.
struct LaserScan {
  double angle_min = -std::numbers::pi;
  double angle_increment = 0.0;
  double range_max = 10.0;
  double stamp = 0.0;
  std::vector<double> ranges;

  double BeamAngle(std::size_t i) const {
    return angle_min + static_cast<double>(i) * angle_increment;
  }
};

struct LidarConfig {
  int beam_count = 360;
  double range_max = 10.0;
  double noise_sigma = 0.01;
};

// Casts `beam_count` evenly spaced beams over the full circle starting at
// -pi. With noise_sigma == 0 the generator is never touched and the result is
// a pure function of (grid, pose, config). Noisy ranges are clamped into
// (0, range_max].
LaserScan SimulateLidar(const OccupancyGrid& grid, const Pose2D& pose,
                        const LidarConfig& config, std::mt19937_64& rng);

// Keeps every `factor`-th beam.
LaserScan DecimateScan(const LaserScan& scan, int factor);

}  // namespace uvbot

#endif  // UVBOT_ROBOT_LIDAR_H_
