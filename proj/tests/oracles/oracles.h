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

// Slow, obviously-correct reference implementations used to check the
// library. None of these call the code under test except for plain data
// accessors on OccupancyGrid.

#ifndef UVBOT_TESTS_ORACLES_ORACLES_H_
#define UVBOT_TESTS_ORACLES_ORACLES_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "uvbot/world/occupancy_grid.h"
#include "uvbot/world/pose.h"

namespace uvbot::oracle {

// Marches along the ray in `step` increments and returns the first sample
// that lands in a blocked cell other than the origin cell, or `max_range`.
// Overestimates the true boundary distance by at most `step`.
double MarchRaycast(const OccupancyGrid& grid, Point2 origin, double angle, double max_range,
                    double step = 1e-3);

// True if `p` lies in a blocked cell of the map.
bool PointBlocked(const OccupancyGrid& grid, Point2 p);

// Samples the segment every `step` meters; false if any sample strictly
// between the endpoint cells is blocked.
bool MarchLineOfSight(const OccupancyGrid& grid, Point2 a, Point2 b, double step = 1e-3);

// Exact visibility: false iff the open segment passes through the interior
// of a blocked cell other than the endpoint cells (slab test per cell).
// `margin` grows (or, when negative, shrinks) every cell box, which brackets
// segments that graze a cell corner.
bool ExactLineOfSight(const OccupancyGrid& grid, Point2 a, Point2 b, double margin = 0.0);

// Forward Euler integration of the unicycle with `substeps` equal steps.
Pose2D EulerIntegrate(Pose2D pose, double v, double w, double dt, long substeps);

// Optimal move counts between two cells, by plain Dijkstra over the
// 8-connected free cells (diagonals need both side cells free).
struct MoveCost {
  int straight = 0;
  int diagonal = 0;
  double value() const;
  bool operator==(const MoveCost&) const = default;
};
std::optional<MoveCost> DijkstraCost(const OccupancyGrid& grid, CellIndex start, CellIndex goal);

// Every cell within `radius` of the center of a blocked cell becomes
// Occupied (blocked cells keep their value).
OccupancyGrid BruteInflate(const OccupancyGrid& grid, double radius);

// Independent binary PGM reader: returns rows top to bottom.
struct RefImage {
  int width = 0;
  int height = 0;
  std::vector<std::vector<int>> rows;
};
RefImage ReadPgmReference(const std::string& bytes);

// Collision by sampling: every blocked cell (and the band just outside the
// map) is sampled on a (resolution / 4) sub-lattice and each sample is
// tested for strict containment in the oriented rectangle.
bool SampledCollision(const OccupancyGrid& grid, const Pose2D& pose, double width,
                      double length);

// Point-source irradiance written out from first principles.
double PointSource(double power, double r);

// Random map with border walls and blocks, with the center cell free.
OccupancyGrid RandomBlockMap(std::mt19937_64& rng, int width, int height, double resolution,
                             double fill);

// The two-room fixture: 8 m x 4 m at 0.1 m, a dividing wall with a door and
// an enclosed closet cell in the right room.
OccupancyGrid TwoRoomMap();
CellIndex TwoRoomClosetCell();

}  // namespace uvbot::oracle

#endif  // UVBOT_TESTS_ORACLES_ORACLES_H_
