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

#include "uvbot/world/occupancy_grid.h"

#include <cmath>
#include <string>

#include "uvbot/common/error.h"

namespace uvbot {

OccupancyGrid::OccupancyGrid(int width, int height, double resolution,
                             Pose2D origin, Occupancy fill)
    : width_(width), height_(height), resolution_(resolution), origin_(origin) {
  if (!(resolution > 0.0)) {
    throw Error(ErrorCode::kNonPositiveResolution,
                "grid resolution must be positive, got " +
                    std::to_string(resolution));
  }
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "grid dimensions must be positive");
  }
  cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
                fill);
}

bool OccupancyGrid::Contains(Point2 p) const {
  const double gx = (p.x - origin_.x) / resolution_;
  const double gy = (p.y - origin_.y) / resolution_;
  return gx >= 0.0 && gy >= 0.0 && gx < width_ && gy < height_;
}

CellIndex OccupancyGrid::WorldToCellUnchecked(Point2 p) const {
  return {static_cast<int>(std::floor((p.x - origin_.x) / resolution_)),
          static_cast<int>(std::floor((p.y - origin_.y) / resolution_))};
}

std::optional<CellIndex> OccupancyGrid::WorldToCell(Point2 p) const {
  if (!Contains(p)) return std::nullopt;
  CellIndex c = WorldToCellUnchecked(p);
  // Guard the upper edge against rounding in the division.
  if (c.col >= width_) c.col = width_ - 1;
  if (c.row >= height_) c.row = height_ - 1;
  return c;
}

Point2 OccupancyGrid::CellCenter(CellIndex c) const {
  return {origin_.x + (c.col + 0.5) * resolution_,
          origin_.y + (c.row + 0.5) * resolution_};
}

bool OccupancyGrid::IsBlockedAt(Point2 p) const {
  const auto c = WorldToCell(p);
  return !c || IsBlocked(*c);
}

void OccupancyGrid::FillRect(Point2 lo, Point2 hi, Occupancy v) {
  for (int row = 0; row < height_; ++row) {
    for (int col = 0; col < width_; ++col) {
      const Point2 c = CellCenter({col, row});
      if (c.x >= lo.x && c.x <= hi.x && c.y >= lo.y && c.y <= hi.y) {
        set({col, row}, v);
      }
    }
  }
}

}  // namespace uvbot
