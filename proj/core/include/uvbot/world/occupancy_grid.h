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

#ifndef UVBOT_WORLD_OCCUPANCY_GRID_H_
#define UVBOT_WORLD_OCCUPANCY_GRID_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "uvbot/world/pose.h"

namespace uvbot {

enum class Occupancy : std::uint8_t { kFree = 0, kOccupied = 1, kUnknown = 2 };

struct CellIndex {
  int col = 0;
  int row = 0;

  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

// A row-major 2D occupancy grid. Cell (0, 0) has its lower-left corner at
// `origin`; rows grow with +y and columns with +x. The origin yaw is carried
// through for map-file round trips but rotated maps are not supported.
class OccupancyGrid {
 public:
  OccupancyGrid() = default;
  OccupancyGrid(int width, int height, double resolution, Pose2D origin = {},
                Occupancy fill = Occupancy::kFree);

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }
  const Pose2D& origin() const { return origin_; }
  std::size_t size() const { return cells_.size(); }
  double width_m() const { return width_ * resolution_; }
  double height_m() const { return height_ * resolution_; }

  bool Contains(CellIndex c) const {
    return c.col >= 0 && c.row >= 0 && c.col < width_ && c.row < height_;
  }
  bool Contains(Point2 p) const;

  // Cell containing `p` (floor semantics), or nullopt when out of bounds.
  std::optional<CellIndex> WorldToCell(Point2 p) const;
  // Same as WorldToCell without the bounds check.
  CellIndex WorldToCellUnchecked(Point2 p) const;
  Point2 CellCenter(CellIndex c) const;

  std::size_t Index(CellIndex c) const {
    return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(c.col);
  }
  CellIndex FromIndex(std::size_t i) const {
    return {static_cast<int>(i % static_cast<std::size_t>(width_)),
            static_cast<int>(i / static_cast<std::size_t>(width_))};
  }

  Occupancy at(CellIndex c) const { return cells_[Index(c)]; }
  void set(CellIndex c, Occupancy v) { cells_[Index(c)] = v; }

  // Unknown space is opaque and untraversable.
  bool IsBlocked(CellIndex c) const { return at(c) != Occupancy::kFree; }
  bool IsBlockedAt(Point2 p) const;

  // Marks every cell whose center lies in the axis-aligned box.
  void FillRect(Point2 lo, Point2 hi, Occupancy v);

  std::span<const Occupancy> cells() const { return cells_; }
  std::span<Occupancy> mutable_cells() { return cells_; }

  friend bool operator==(const OccupancyGrid&, const OccupancyGrid&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  double resolution_ = 1.0;
  Pose2D origin_{};
  std::vector<Occupancy> cells_;
};

}  // namespace uvbot

#endif  // UVBOT_WORLD_OCCUPANCY_GRID_H_
