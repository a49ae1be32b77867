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

#ifndef UVBOT_DISINFECTION_TARGET_H_
#define UVBOT_DISINFECTION_TARGET_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "uvbot/world/occupancy_grid.h"

namespace uvbot {

// Surface cells that must reach `required_dose` (J/m^2).
struct DisinfectionTarget {
  std::vector<CellIndex> cells;
  double required_dose = 0.0;

  // Throws Error(kInvalidArgument) for an empty cell set or a
  // non-positive dose.
  void Validate() const;
};

// required_dose = logs * d90. Throws Error(kInvalidArgument) if d90 <= 0 or
// logs <= 0.
double RequiredDoseForLogReduction(double logs, double d90);

// Cells (deduplicated, sorted row-major) whose centers fall inside `polygon`
// (even-odd rule).
std::vector<CellIndex> CellsInPolygon(const OccupancyGrid& grid, std::span<const Point2> polygon);

// Reads a YAML target description:
//
//   required_dose: 100          # or: log_reduction: 3 with d90: 20
//   points: [[x, y], ...]       # map-frame points, one cell each
//   polygons: [[[x, y], ...]]   # all cells with centers inside
//
// Throws Error(kConfigError) with the offending line on malformed input and
// Error(kOutOfBounds) for points off the map.
DisinfectionTarget ParseTarget(const std::string& yaml_text, const OccupancyGrid& grid);
DisinfectionTarget LoadTarget(const std::filesystem::path& path, const OccupancyGrid& grid);

}  // namespace uvbot

#endif  // UVBOT_DISINFECTION_TARGET_H_
