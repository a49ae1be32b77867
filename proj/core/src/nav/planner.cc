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

#include "uvbot/nav/planner.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <numbers>
#include <queue>
#include <tuple>

#include "uvbot/common/error.h"
#include "uvbot/world/raycast.h"

namespace uvbot {
namespace {

constexpr std::int64_t kNoParent = -1;

struct Move {
  int dc;
  int dr;
  bool diagonal;
};

constexpr Move kMoves[8] = {{1, 0, false},  {-1, 0, false}, {0, 1, false},
                            {0, -1, false}, {1, 1, true},   {1, -1, true},
                            {-1, 1, true},  {-1, -1, true}};

bool Traversable(const OccupancyGrid& g, CellIndex c) {
  return g.Contains(c) && !g.IsBlocked(c);
}

// Neighbour reached by `m` from `c`, if the move is legal.
bool Step(const OccupancyGrid& g, CellIndex c, const Move& m, CellIndex& out) {
  out = {c.col + m.dc, c.row + m.dr};
  if (!Traversable(g, out)) return false;
  if (m.diagonal) {
    return Traversable(g, {c.col + m.dc, c.row}) && Traversable(g, {c.col, c.row + m.dr});
  }
  return true;
}

struct OpenEntry {
  double f;
  double h;
  std::size_t index;

  // Min-heap ordering for std::priority_queue.
  bool operator>(const OpenEntry& o) const {
    return std::tie(f, h, index) > std::tie(o.f, o.h, o.index);
  }
};

CellIndex EndpointCell(const OccupancyGrid& g, Point2 p, ErrorCode code, const char* what) {
  const auto c = g.WorldToCell(p);
  if (!c || g.IsBlocked(*c)) {
    throw Error(code, std::string(what) + " is not in free space");
  }
  return *c;
}

}  // namespace

std::vector<Point2> DecimateCollinear(const std::vector<Point2>& points) {
  if (points.size() <= 2) return points;
  std::vector<Point2> out{points.front()};
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    const Point2 d0 = points[i] - points[i - 1];
    const Point2 d1 = points[i + 1] - points[i];
    const double cross = d0.x * d1.y - d0.y * d1.x;
    const double dot = d0.x * d1.x + d0.y * d1.y;
    const double scale = Norm(d0) * Norm(d1);
    if (std::abs(cross) > 1e-9 * scale || dot <= 0.0) out.push_back(points[i]);
  }
  out.push_back(points.back());
  return out;
}

Path PlanPathInflated(const OccupancyGrid& inflated, Point2 start, Point2 goal) {
  const CellIndex goal_cell =
      EndpointCell(inflated, goal, ErrorCode::kGoalOccupied, "goal");
  const CellIndex start_cell =
      EndpointCell(inflated, start, ErrorCode::kStartOccupied, "start");

  const std::size_t n = inflated.size();
  std::vector<double> g(n, std::numeric_limits<double>::infinity());
  std::vector<std::int64_t> parent(n, kNoParent);
  std::vector<std::uint8_t> closed(n, 0);
  std::vector<int> straight(n, 0);
  std::vector<int> diagonal(n, 0);

  auto heuristic = [&](CellIndex c) {
    return std::hypot(static_cast<double>(c.col - goal_cell.col),
                      static_cast<double>(c.row - goal_cell.row));
  };

  std::priority_queue<OpenEntry, std::vector<OpenEntry>, std::greater<>> open;
  const std::size_t s = inflated.Index(start_cell);
  const std::size_t t = inflated.Index(goal_cell);
  g[s] = 0.0;
  open.push({heuristic(start_cell), heuristic(start_cell), s});
  bool found = false;
  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    if (closed[top.index]) continue;
    closed[top.index] = 1;
    if (top.index == t) {
      found = true;
      break;
    }
    const CellIndex c = inflated.FromIndex(top.index);
    for (const Move& m : kMoves) {
      CellIndex nb;
      if (!Step(inflated, c, m, nb)) continue;
      const std::size_t ni = inflated.Index(nb);
      if (closed[ni]) continue;
      const double cand = g[top.index] + (m.diagonal ? std::numbers::sqrt2 : 1.0);
      if (cand < g[ni]) {
        g[ni] = cand;
        parent[ni] = static_cast<std::int64_t>(top.index);
        straight[ni] = straight[top.index] + (m.diagonal ? 0 : 1);
        diagonal[ni] = diagonal[top.index] + (m.diagonal ? 1 : 0);
        const double h = heuristic(nb);
        open.push({cand + h, h, ni});
      }
    }
  }
  if (!found) {
    throw Error(ErrorCode::kGoalUnreachable, "no path to the goal");
  }

  std::vector<Point2> cells;
  for (std::int64_t i = static_cast<std::int64_t>(t); i != kNoParent; i = parent[i]) {
    cells.push_back(inflated.CellCenter(inflated.FromIndex(static_cast<std::size_t>(i))));
  }
  std::reverse(cells.begin(), cells.end());

  Path path;
  path.waypoints = DecimateCollinear(cells);
  path.straight_moves = straight[t];
  path.diagonal_moves = diagonal[t];
  for (std::size_t i = 1; i < path.waypoints.size(); ++i) {
    path.total_length += Distance(path.waypoints[i - 1], path.waypoints[i]);
  }
  return path;
}

Path PlanPath(const OccupancyGrid& grid, Point2 start, Point2 goal, double robot_radius) {
  return PlanPathInflated(Inflate(grid, robot_radius), start, goal);
}

std::vector<bool> ReachableMask(const OccupancyGrid& inflated, Point2 start) {
  std::vector<bool> seen(inflated.size(), false);
  const auto sc = inflated.WorldToCell(start);
  if (!sc || inflated.IsBlocked(*sc)) return seen;
  std::deque<CellIndex> frontier{*sc};
  seen[inflated.Index(*sc)] = true;
  while (!frontier.empty()) {
    const CellIndex c = frontier.front();
    frontier.pop_front();
    for (const Move& m : kMoves) {
      CellIndex nb;
      if (!Step(inflated, c, m, nb)) continue;
      const std::size_t ni = inflated.Index(nb);
      if (seen[ni]) continue;
      seen[ni] = true;
      frontier.push_back(nb);
    }
  }
  return seen;
}

}  // namespace uvbot
