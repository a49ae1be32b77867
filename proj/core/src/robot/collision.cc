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

#include "uvbot/robot/collision.h"

#include <algorithm>
#include <cmath>

namespace uvbot {
namespace {

// Overlaps thinner than this are treated as touching.
constexpr double kContactEps = 1e-9;

}  // namespace

std::array<Point2, 4> FootprintCorners(const Pose2D& pose, const Footprint& footprint) {
  const double hl = 0.5 * footprint.length;
  const double hw = 0.5 * footprint.width;
  return {RobotToWorld(pose, {hl, hw}), RobotToWorld(pose, {-hl, hw}),
          RobotToWorld(pose, {-hl, -hw}), RobotToWorld(pose, {hl, -hw})};
}

bool CheckCollision(const OccupancyGrid& grid, const Pose2D& pose,
                    const Footprint& footprint) {
  const auto corners = FootprintCorners(pose, footprint);
  double min_x = corners[0].x, max_x = corners[0].x;
  double min_y = corners[0].y, max_y = corners[0].y;
  for (const Point2& c : corners) {
    min_x = std::min(min_x, c.x);
    max_x = std::max(max_x, c.x);
    min_y = std::min(min_y, c.y);
    max_y = std::max(max_y, c.y);
  }
  const double res = grid.resolution();
  const Point2 o = grid.origin().position();
  if (min_x < o.x || min_y < o.y || max_x > o.x + grid.width_m() ||
      max_y > o.y + grid.height_m()) {
    return true;
  }

  const double ux = std::cos(pose.theta);
  const double uy = std::sin(pose.theta);
  const double hl = 0.5 * footprint.length;
  const double hw = 0.5 * footprint.width;
  const double half = 0.5 * res;
  // Projected half-extent of a cell on either rectangle axis.
  const double cell_extent = half * (std::abs(ux) + std::abs(uy));

  const int c0 = std::max(0, static_cast<int>(std::floor((min_x - o.x) / res)));
  const int c1 = std::min(grid.width() - 1, static_cast<int>(std::floor((max_x - o.x) / res)));
  const int r0 = std::max(0, static_cast<int>(std::floor((min_y - o.y) / res)));
  const int r1 = std::min(grid.height() - 1, static_cast<int>(std::floor((max_y - o.y) / res)));
  for (int row = r0; row <= r1; ++row) {
    for (int col = c0; col <= c1; ++col) {
      if (!grid.IsBlocked({col, row})) continue;
      const Point2 center = grid.CellCenter({col, row});
      // Separating axes: the grid axes (covered by the bounding box test
      // below) and the two rectangle axes.
      if (center.x + half <= min_x + kContactEps || center.x - half >= max_x - kContactEps ||
          center.y + half <= min_y + kContactEps || center.y - half >= max_y - kContactEps) {
        continue;
      }
      const double dx = center.x - pose.x;
      const double dy = center.y - pose.y;
      const double along = dx * ux + dy * uy;
      const double across = -dx * uy + dy * ux;
      if (std::abs(along) >= hl + cell_extent - kContactEps) continue;
      if (std::abs(across) >= hw + cell_extent - kContactEps) continue;
      return true;
    }
  }
  return false;
}

}  // namespace uvbot
