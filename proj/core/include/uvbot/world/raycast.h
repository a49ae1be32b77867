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

#ifndef UVBOT_WORLD_RAYCAST_H_
#define UVBOT_WORLD_RAYCAST_H_

#include "uvbot/world/occupancy_grid.h"
#include "uvbot/world/pose.h"

namespace uvbot {

// Distance from `origin` along `angle` to the boundary of the first blocked
// cell, or `max_range` if nothing is hit. Space outside the grid is empty.
// The walk is an exact cell traversal (Amanatides-Woo), not sampling.
//
// Throws Error(kOutOfBounds) when `origin` is outside the grid and
// Error(kInsideObstacle) when it sits in a blocked cell.
double Raycast(const OccupancyGrid& grid, Point2 origin, double angle,
               double max_range);

// True iff no blocked cell lies strictly between the cells of `a` and `b`
// along the segment. The endpoint cells themselves are not tested, so a wall
// cell is visible from free space when nothing else is in the way.
//
// Throws Error(kOutOfBounds) for out-of-bounds endpoints.
bool LineOfSight(const OccupancyGrid& grid, Point2 a, Point2 b);

// Returns a copy where every cell whose center is within `radius` (meters) of
// the center of a blocked cell is marked Occupied. Blocked cells keep their
// original value, so Unknown stays Unknown.
OccupancyGrid Inflate(const OccupancyGrid& grid, double radius);

}  // namespace uvbot

#endif  // UVBOT_WORLD_RAYCAST_H_
