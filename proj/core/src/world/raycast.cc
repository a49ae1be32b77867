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

#include "uvbot/world/raycast.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "uvbot/common/error.h"

namespace uvbot {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Smallest distance reported when the origin touches a blocked boundary.
constexpr double kMinHitDistance = 1e-9;

// Incremental grid traversal along a ray, in meters of travel.
class CellWalker {
 public:
  CellWalker(const OccupancyGrid& grid, Point2 origin, double dx, double dy)
      : cell_(grid.WorldToCellUnchecked(origin)) {
    const double res = grid.resolution();
    const double gx = (origin.x - grid.origin().x) / res;
    const double gy = (origin.y - grid.origin().y) / res;
    InitAxis(dx, gx - cell_.col, res, step_col_, t_max_col_, t_delta_col_);
    InitAxis(dy, gy - cell_.row, res, step_row_, t_max_row_, t_delta_row_);
  }

  CellIndex cell() const { return cell_; }

  // Moves into the next cell and returns the travel distance at which the
  // ray enters it.
  double Advance() {
    if (t_max_col_ < t_max_row_) {
      const double t = t_max_col_;
      cell_.col += step_col_;
      t_max_col_ += t_delta_col_;
      return t;
    }
    const double t = t_max_row_;
    cell_.row += step_row_;
    t_max_row_ += t_delta_row_;
    return t;
  }

 private:
  static void InitAxis(double d, double frac, double res, int& step,
                       double& t_max, double& t_delta) {
    if (d > 0.0) {
      step = 1;
      t_max = (1.0 - frac) * res / d;
      t_delta = res / d;
    } else if (d < 0.0) {
      step = -1;
      t_max = frac * res / -d;
      t_delta = res / -d;
    } else {
      step = 0;
      t_max = kInf;
      t_delta = kInf;
    }
  }

  CellIndex cell_;
  int step_col_ = 0;
  int step_row_ = 0;
  double t_max_col_ = kInf;
  double t_max_row_ = kInf;
  double t_delta_col_ = kInf;
  double t_delta_row_ = kInf;
};

std::string FormatPoint(Point2 p) {
  std::ostringstream os;
  os << "(" << p.x << ", " << p.y << ")";
  return os.str();
}

}  // namespace

double Raycast(const OccupancyGrid& grid, Point2 origin, double angle,
               double max_range) {
  if (!(max_range > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "max_range must be positive");
  }
  const auto start = grid.WorldToCell(origin);
  if (!start) {
    throw Error(ErrorCode::kOutOfBounds,
                "ray origin " + FormatPoint(origin) + " is outside the map");
  }
  if (grid.IsBlocked(*start)) {
    throw Error(ErrorCode::kInsideObstacle,
                "ray origin " + FormatPoint(origin) + " is inside an obstacle");
  }
  CellWalker walker(grid, origin, std::cos(angle), std::sin(angle));
  while (true) {
    const double t = walker.Advance();
    if (t >= max_range) return max_range;
    // The grid is convex; once the ray leaves it nothing else can be hit.
    if (!grid.Contains(walker.cell())) return max_range;
    if (grid.IsBlocked(walker.cell())) return std::max(t, kMinHitDistance);
  }
}

bool LineOfSight(const OccupancyGrid& grid, Point2 a, Point2 b) {
  const auto ca = grid.WorldToCell(a);
  const auto cb = grid.WorldToCell(b);
  if (!ca || !cb) {
    throw Error(ErrorCode::kOutOfBounds,
                "line of sight endpoint outside the map: " + FormatPoint(a) +
                    " -> " + FormatPoint(b));
  }
  if (*ca == *cb) return true;
  const double length = Distance(a, b);
  CellWalker walker(grid, a, (b.x - a.x) / length, (b.y - a.y) / length);
  while (true) {
    const double t = walker.Advance();
    const CellIndex c = walker.cell();
    if (c == *cb || t >= length) return true;
    if (!grid.Contains(c)) return true;
    if (grid.IsBlocked(c)) return false;
  }
}

OccupancyGrid Inflate(const OccupancyGrid& grid, double radius) {
  if (radius < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "inflation radius must be >= 0");
  }
  OccupancyGrid out = grid;
  const double r_cells = radius / grid.resolution();
  const int reach = static_cast<int>(std::floor(r_cells + 1e-9));
  if (reach == 0) return out;
  const double limit = r_cells * r_cells + 1e-9;
  std::vector<std::pair<int, int>> disk;
  for (int dr = -reach; dr <= reach; ++dr) {
    for (int dc = -reach; dc <= reach; ++dc) {
      if (dc * dc + dr * dr <= limit) disk.emplace_back(dc, dr);
    }
  }
  for (int row = 0; row < grid.height(); ++row) {
    for (int col = 0; col < grid.width(); ++col) {
      if (!grid.IsBlocked({col, row})) continue;
      for (const auto& [dc, dr] : disk) {
        const CellIndex n{col + dc, row + dr};
        if (out.Contains(n) && !grid.IsBlocked(n)) {
          out.set(n, Occupancy::kOccupied);
        }
      }
    }
  }
  return out;
}

}  // namespace uvbot
