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

#include "uvbot/disinfection/pose_planner.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "uvbot/common/error.h"
#include "uvbot/disinfection/irradiance.h"
#include "uvbot/nav/planner.h"
#include "uvbot/robot/collision.h"
#include "uvbot/world/raycast.h"

namespace uvbot {
namespace {

// Relative slack when deciding that a cell has reached its dose.
constexpr double kCoverSlack = 1e-12;

struct Choice {
  std::size_t candidate = 0;
  std::size_t count = 0;
  double dwell = 0.0;
  double score = -1.0;
};

}  // namespace

std::vector<Pose2D> CandidatePoses(const OccupancyGrid& grid, const PosePlannerOptions& options) {
  if (!(options.candidate_spacing > 0.0) || options.headings < 1) {
    throw Error(ErrorCode::kInvalidArgument, "candidate spacing and heading count must be positive");
  }
  const OccupancyGrid inflated = Inflate(grid, options.robot_radius);
  std::vector<bool> reachable;
  if (options.reachable_from) reachable = ReachableMask(inflated, *options.reachable_from);

  std::vector<Pose2D> out;
  const Point2 o = grid.origin().position();
  const double step = options.candidate_spacing;
  for (double y = o.y + step / 2.0; y < o.y + grid.height_m(); y += step) {
    for (double x = o.x + step / 2.0; x < o.x + grid.width_m(); x += step) {
      const auto cell = inflated.WorldToCell({x, y});
      if (!cell || inflated.IsBlocked(*cell)) continue;
      if (!reachable.empty() && !reachable[inflated.Index(*cell)]) continue;
      for (int h = 0; h < options.headings; ++h) {
        const Pose2D pose =
            MakePose(x, y, -std::numbers::pi + 2.0 * std::numbers::pi * (h + 0.5) / options.headings);
        if (CheckCollision(grid, pose, options.footprint)) continue;
        out.push_back(pose);
      }
    }
  }
  return out;
}

std::vector<double> TargetIrradiance(const OccupancyGrid& grid, const Pose2D& pose,
                                     const LampArray& lamps,
                                     const std::vector<CellIndex>& cells, double cutoff) {
  std::vector<double> rate(cells.size(), 0.0);
  for (const Point2& lamp : lamps.WorldPositions(pose)) {
    if (grid.IsBlockedAt(lamp)) continue;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (grid.at(cells[k]) == Occupancy::kUnknown) continue;
      const Point2 target = grid.CellCenter(cells[k]);
      if (Distance(lamp, target) > cutoff) continue;
      rate[k] += IrradianceAt(lamp, lamps.uvc_power_w, target, grid);
    }
  }
  return rate;
}

DisinfectionPlan PlanDisinfectionPoses(const OccupancyGrid& grid,
                                       const DisinfectionTarget& target,
                                       const LampArray& lamps,
                                       const PosePlannerOptions& options) {
  target.Validate();
  lamps.Validate();
  const std::size_t n_cells = target.cells.size();
  if (!options.initial_dose.empty() && options.initial_dose.size() != n_cells) {
    throw Error(ErrorCode::kInvalidArgument, "initial dose must match the target cells");
  }
  for (const CellIndex& c : target.cells) {
    if (!grid.Contains(c)) throw Error(ErrorCode::kOutOfBounds, "target cell off the map");
  }

  const std::vector<Pose2D> candidates = CandidatePoses(grid, options);
  if (candidates.empty()) {
    throw Error(ErrorCode::kNoReachablePose, "no collision-free candidate pose exists");
  }
  std::vector<std::vector<double>> rates;
  rates.reserve(candidates.size());
  for (const Pose2D& pose : candidates) {
    rates.push_back(TargetIrradiance(grid, pose, lamps, target.cells, options.cutoff));
  }

  DisinfectionPlan plan;
  plan.predicted_dose =
      options.initial_dose.empty() ? std::vector<double>(n_cells, 0.0) : options.initial_dose;
  const double required = target.required_dose;
  std::vector<bool> open(n_cells, false);
  for (std::size_t k = 0; k < n_cells; ++k) {
    if (plan.predicted_dose[k] >= required) continue;
    bool visible = false;
    for (const auto& r : rates) visible = visible || r[k] > 0.0;
    if (visible) {
      open[k] = true;
    } else {
      plan.uncoverable.push_back(target.cells[k]);
    }
  }

  std::vector<std::pair<double, std::size_t>> times;
  while (std::find(open.begin(), open.end(), true) != open.end()) {
    Choice best;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      times.clear();
      for (std::size_t k = 0; k < n_cells; ++k) {
        if (open[k] && rates[c][k] > 0.0) {
          times.emplace_back((required - plan.predicted_dose[k]) / rates[c][k], k);
        }
      }
      std::sort(times.begin(), times.end());
      for (std::size_t j = 1; j <= times.size(); ++j) {
        const double dwell = times[j - 1].first;
        // Cells finishing at the same instant are taken together.
        if (j < times.size() && times[j].first == dwell) continue;
        const double score = static_cast<double>(j) / (dwell + options.pose_overhead_s);
        if (score > best.score || (score == best.score && j > best.count)) {
          best = {c, j, dwell, score};
        }
      }
    }
    // Every open cell is visible from some candidate, so a choice exists.
    PlannedPose step{candidates[best.candidate], best.dwell, {}};
    const auto& rate = rates[best.candidate];
    for (std::size_t k = 0; k < n_cells; ++k) {
      if (!open[k] || rate[k] <= 0.0) continue;
      const double t_k = (required - plan.predicted_dose[k]) / rate[k];
      plan.predicted_dose[k] += rate[k] * best.dwell;
      if (t_k <= best.dwell || plan.predicted_dose[k] >= required * (1.0 - kCoverSlack)) {
        plan.predicted_dose[k] = std::max(plan.predicted_dose[k], required);
        open[k] = false;
        step.completes.push_back(k);
      }
    }
    plan.total_dwell_s += step.dwell_s;
    plan.poses.push_back(std::move(step));
  }
  return plan;
}

}  // namespace uvbot
