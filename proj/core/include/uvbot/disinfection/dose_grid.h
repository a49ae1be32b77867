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

#ifndef UVBOT_DISINFECTION_DOSE_GRID_H_
#define UVBOT_DISINFECTION_DOSE_GRID_H_

#include <span>
#include <vector>

#include "uvbot/disinfection/lamp_array.h"
#include "uvbot/world/map_io.h"
#include "uvbot/world/occupancy_grid.h"

namespace uvbot {

inline constexpr double kDefaultDoseCutoff = 8.0;

// Cumulative UVC dose (J/m^2) per cell, on the same geometry as the world
// grid. Values only ever grow.
class DoseGrid {
 public:
  DoseGrid() = default;
  explicit DoseGrid(const OccupancyGrid& geometry);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return dose_.size(); }

  double at(CellIndex c) const {
    return dose_[static_cast<std::size_t>(c.row) * width_ + c.col];
  }
  std::span<const double> values() const { return dose_; }

  // Adds `rate * dt` to every cell; rates must be non-negative.
  void AddExposure(std::span<const double> rate, double dt);

  friend bool operator==(const DoseGrid&, const DoseGrid&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> dose_;
};

// Irradiance (W/m^2) delivered to each cell by lamps at `lamp_positions`.
// Free cells are lit when visible; Occupied cells are lit when they are the
// first surface on the ray from the lamp. Unknown cells and cells beyond
// `cutoff` of a lamp stay dark.
std::vector<double> IrradianceField(const OccupancyGrid& grid,
                                    std::span<const Point2> lamp_positions,
                                    double uvc_power, double cutoff = kDefaultDoseCutoff);

// One exposure step. Does nothing when the lamps are off.
// Throws Error(kInvalidArgument) if dt <= 0.
void AccumulateDose(DoseGrid& dose, const OccupancyGrid& grid, const Pose2D& robot_pose,
                    const LampArray& lamps, bool lamp_on, double dt,
                    double cutoff = kDefaultDoseCutoff);

// Caches the irradiance field of the last lamp pose so a stationary robot
// costs one multiply-add per cell per step.
class DoseAccumulator {
 public:
  DoseAccumulator(const OccupancyGrid& grid, LampArray lamps,
                  double cutoff = kDefaultDoseCutoff);

  void Step(DoseGrid& dose, const Pose2D& robot_pose, bool lamp_on, double dt);
  const std::vector<double>& FieldAt(const Pose2D& robot_pose);

 private:
  const OccupancyGrid* grid_;
  LampArray lamps_;
  double cutoff_;
  bool have_cache_ = false;
  Pose2D cached_pose_{};
  std::vector<double> field_;
};

// Grayscale heatmap, row 0 at the top: dose / required_dose scaled to
// 0..255 with everything at or above the requirement white.
GrayImage RenderDoseHeatmap(const DoseGrid& dose, double required_dose);

}  // namespace uvbot

#endif  // UVBOT_DISINFECTION_DOSE_GRID_H_
