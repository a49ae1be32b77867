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

#ifndef UVBOT_NAV_PLANNER_H_
#define UVBOT_NAV_PLANNER_H_

#include <vector>

#include "uvbot/world/occupancy_grid.h"
#include "uvbot/world/pose.h"

namespace uvbot {

struct Path {
  // Cell centers; collinear interior points removed.
  std::vector<Point2> waypoints;
  double total_length = 0.0;
  // Exact graph cost in moves: cost = (straight + sqrt(2) * diagonal) * res.
  int straight_moves = 0;
  int diagonal_moves = 0;
};

// A* over the 8-connected free cells of `inflated`. Straight moves cost one
// cell, diagonal moves sqrt(2) cells and are only allowed when both adjacent
// side cells are free, so every straight segment of the result stays in free
// space. The heuristic is Euclidean; ties on f go to the lower heuristic, then
// to the lower row-major index.
//
// Throws Error(kGoalOccupied), Error(kStartOccupied) or
// Error(kGoalUnreachable); out-of-map endpoints count as occupied.
Path PlanPathInflated(const OccupancyGrid& inflated, Point2 start, Point2 goal);

// Inflates `grid` by `robot_radius` and plans on the result.
Path PlanPath(const OccupancyGrid& grid, Point2 start, Point2 goal, double robot_radius);

// Drops interior waypoints that continue in the same grid direction.
std::vector<Point2> DecimateCollinear(const std::vector<Point2>& points);

// Cells reachable from `start` through free cells of `inflated` under the
// same move rules as the planner, as a row-major mask.
std::vector<bool> ReachableMask(const OccupancyGrid& inflated, Point2 start);

}  // namespace uvbot

#endif  // UVBOT_NAV_PLANNER_H_
