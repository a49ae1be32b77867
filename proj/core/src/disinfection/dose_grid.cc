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

#include "uvbot/disinfection/dose_grid.h"

#include <algorithm>
#include <cmath>

#include "uvbot/common/error.h"
#include "uvbot/disinfection/irradiance.h"
#include "uvbot/world/raycast.h"

namespace uvbot {

DoseGrid::DoseGrid(const OccupancyGrid& geometry)
    : width_(geometry.width()), height_(geometry.height()), dose_(geometry.size(), 0.0) {}

void DoseGrid::AddExposure(std::span<const double> rate, double dt) {
  if (rate.size() != dose_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "irradiance field does not match dose grid");
  }
  for (std::size_t i = 0; i < dose_.size(); ++i) dose_[i] += rate[i] * dt;
}

std::vector<double> IrradianceField(const OccupancyGrid& grid,
                                    std::span<const Point2> lamp_positions,
                                    double uvc_power, double cutoff) {
  std::vector<double> field(grid.size(), 0.0);
  const double res = grid.resolution();
  for (const Point2& lamp : lamp_positions) {
    // A lamp inside a wall (robot pressed against it) or off the map lights
    // nothing.
    if (grid.IsBlockedAt(lamp)) continue;
    const Point2 o = grid.origin().position();
    const int c0 = std::max(0, static_cast<int>(std::floor((lamp.x - cutoff - o.x) / res)));
    const int c1 = std::min(grid.width() - 1, static_cast<int>(std::floor((lamp.x + cutoff - o.x) / res)));
    const int r0 = std::max(0, static_cast<int>(std::floor((lamp.y - cutoff - o.y) / res)));
    const int r1 = std::min(grid.height() - 1, static_cast<int>(std::floor((lamp.y + cutoff - o.y) / res)));
    for (int row = r0; row <= r1; ++row) {
      for (int col = c0; col <= c1; ++col) {
        const CellIndex c{col, row};
        if (grid.at(c) == Occupancy::kUnknown) continue;
        const Point2 target = grid.CellCenter(c);
        if (Distance(lamp, target) > cutoff) continue;
        field[grid.Index(c)] += IrradianceAt(lamp, uvc_power, target, grid);
      }
    }
  }
  return field;
}

void AccumulateDose(DoseGrid& dose, const OccupancyGrid& grid, const Pose2D& robot_pose,
                    const LampArray& lamps, bool lamp_on, double dt, double cutoff) {
  if (!(dt > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "dose accumulation needs dt > 0");
  }
  if (!lamp_on) return;
  const auto positions = lamps.WorldPositions(robot_pose);
  dose.AddExposure(IrradianceField(grid, positions, lamps.uvc_power_w, cutoff), dt);
}

DoseAccumulator::DoseAccumulator(const OccupancyGrid& grid, LampArray lamps, double cutoff)
    : grid_(&grid), lamps_(std::move(lamps)), cutoff_(cutoff) {}

const std::vector<double>& DoseAccumulator::FieldAt(const Pose2D& robot_pose) {
  if (!have_cache_ || !(cached_pose_ == robot_pose)) {
    const auto positions = lamps_.WorldPositions(robot_pose);
    field_ = IrradianceField(*grid_, positions, lamps_.uvc_power_w, cutoff_);
    cached_pose_ = robot_pose;
    have_cache_ = true;
  }
  return field_;
}

void DoseAccumulator::Step(DoseGrid& dose, const Pose2D& robot_pose, bool lamp_on, double dt) {
  if (!(dt > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "dose accumulation needs dt > 0");
  }
  if (!lamp_on) return;
  dose.AddExposure(FieldAt(robot_pose), dt);
}

GrayImage RenderDoseHeatmap(const DoseGrid& dose, double required_dose) {
  GrayImage image{dose.width(), dose.height(), {}};
  image.pixels.resize(dose.size());
  for (int row = 0; row < dose.height(); ++row) {
    const int r = dose.height() - 1 - row;
    for (int col = 0; col < dose.width(); ++col) {
      const double frac =
          required_dose > 0.0 ? std::clamp(dose.at({col, row}) / required_dose, 0.0, 1.0) : 0.0;
      image.pixels[static_cast<std::size_t>(r) * dose.width() + col] =
          static_cast<std::uint8_t>(std::lround(frac * 255.0));
    }
  }
  return image;
}

}  // namespace uvbot
