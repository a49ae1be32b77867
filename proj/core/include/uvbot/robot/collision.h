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

#ifndef UVBOT_ROBOT_COLLISION_H_
#define UVBOT_ROBOT_COLLISION_H_

#include <array>

#include "uvbot/robot/robot_state.h"
#include "uvbot/world/occupancy_grid.h"

namespace uvbot {

// Corners of the oriented footprint, counter-clockwise from front-left.
std::array<Point2, 4> FootprintCorners(const Pose2D& pose, const Footprint& footprint);

// True iff the oriented footprint overlaps (with positive area) any blocked
// cell, or any part of it lies outside the map.
bool CheckCollision(const OccupancyGrid& grid, const Pose2D& pose,
                    const Footprint& footprint);

}  // namespace uvbot

#endif  // UVBOT_ROBOT_COLLISION_H_
