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

// Dwell-pose selection for a set of target surfaces, as a greedy weighted set
// cover.
//
// Candidates are robot poses on a lattice of `candidate_spacing` over cells
// that are free after inflating by `robot_radius` (and, optionally, reachable
// from a start point), each at `headings` evenly spaced orientations. For a
// candidate c and a still-uncovered cell k with lamp irradiance E_ck > 0, the
// dwell that finishes k is t_ck = remaining_k / E_ck. Sorting those times,
// dwelling t_(j) finishes j cells. Each round picks the (candidate, j) with
// the most cells finished per second, j / (t_(j) + pose_overhead_s), breaking
// ties towards larger j and then the lower candidate index. The chosen dwell
// also pre-doses every other visible cell, which later rounds take into
// account.

#ifndef UVBOT_DISINFECTION_POSE_PLANNER_H_
#define UVBOT_DISINFECTION_POSE_PLANNER_H_

#include <optional>
#include <vector>

#include "uvbot/disinfection/dose_grid.h"
#include "uvbot/disinfection/lamp_array.h"
#include "uvbot/disinfection/target.h"
#include "uvbot/robot/robot_state.h"
#include "uvbot/world/occupancy_grid.h"

namespace uvbot {

struct PosePlannerOptions {
  double candidate_spacing = 0.25;
  int headings = 8;
  double robot_radius = 0.5;
  Footprint footprint{};
  std::optional<Point2> reachable_from;
  // Fixed cost charged per pose in the greedy ratio (travel and setup).
  double pose_overhead_s = 30.0;
  double cutoff = kDefaultDoseCutoff;
  // Dose already delivered, indexed like the target cells. Empty means zero.
  std::vector<double> initial_dose;
};

struct PlannedPose {
  Pose2D pose;
  double dwell_s = 0.0;
  // Target-cell indices this dwell brings to the required dose.
  std::vector<std::size_t> completes;
};

struct DisinfectionPlan {
  std::vector<PlannedPose> poses;
  // Target cells no candidate pose can see.
  std::vector<CellIndex> uncoverable;
  // Predicted dose per target cell after executing every pose.
  std::vector<double> predicted_dose;
  double total_dwell_s = 0.0;
};

// Throws Error(kNoReachablePose) when there is no valid candidate pose at all
// and Error(kInvalidArgument) for an invalid target or options. A target that
// no candidate can see yields an empty plan with every cell uncoverable.
DisinfectionPlan PlanDisinfectionPoses(const OccupancyGrid& grid,
                                       const DisinfectionTarget& target,
                                       const LampArray& lamps,
                                       const PosePlannerOptions& options = {});

// The candidate poses the planner considers, in index order.
std::vector<Pose2D> CandidatePoses(const OccupancyGrid& grid, const PosePlannerOptions& options);

// Summed irradiance (W/m^2) from all lamps at `pose` on each target cell.
std::vector<double> TargetIrradiance(const OccupancyGrid& grid, const Pose2D& pose,
                                     const LampArray& lamps,
                                     const std::vector<CellIndex>& cells,
                                     double cutoff = kDefaultDoseCutoff);

}  // namespace uvbot

#endif  // UVBOT_DISINFECTION_POSE_PLANNER_H_
