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

#include "uvbot/robot/lidar.h"

#include <algorithm>

#include "uvbot/common/error.h"
#include "uvbot/world/raycast.h"

namespace uvbot {
namespace {
constexpr double kMinRange = 1e-3;
}  // namespace

LaserScan SimulateLidar(const OccupancyGrid& grid, const Pose2D& pose,
                        const LidarConfig& config, std::mt19937_64& rng) {
  if (config.beam_count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "lidar needs at least one beam");
  }
  LaserScan scan;
  scan.angle_min = -std::numbers::pi;
  scan.angle_increment = 2.0 * std::numbers::pi / config.beam_count;
  scan.range_max = config.range_max;
  scan.ranges.resize(static_cast<std::size_t>(config.beam_count));
  std::normal_distribution<double> noise(0.0, config.noise_sigma);
  for (std::size_t i = 0; i < scan.ranges.size(); ++i) {
    const double angle = pose.theta + scan.BeamAngle(i);
    double r = Raycast(grid, pose.position(), angle, config.range_max);
    if (config.noise_sigma > 0.0) {
      r = std::clamp(r + noise(rng), kMinRange, config.range_max);
    }
    scan.ranges[i] = r;
  }
  return scan;
}

LaserScan DecimateScan(const LaserScan& scan, int factor) {
  if (factor <= 1) return scan;
  LaserScan out = scan;
  out.angle_increment = scan.angle_increment * factor;
  out.ranges.clear();
  for (std::size_t i = 0; i < scan.ranges.size(); i += static_cast<std::size_t>(factor)) {
    out.ranges.push_back(scan.ranges[i]);
  }
  return out;
}

}  // namespace uvbot
