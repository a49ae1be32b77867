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

// Fixed-step simulation of one robot in a static map.
//
// Commands are queued and applied at the start of the next tick, in arrival
// order. Each tick then: picks the drive command for the active autonomy
// level, rejects motion that would collide, updates the lamp interlock,
// drains the battery, accumulates dose at the new pose and, on every
// `lidar_every`-th tick, takes a scan.

#ifndef UVBOT_SIM_SIMULATOR_H_
#define UVBOT_SIM_SIMULATOR_H_

#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "uvbot/disinfection/dose_grid.h"
#include "uvbot/disinfection/interlock.h"
#include "uvbot/disinfection/lamp_array.h"
#include "uvbot/nav/assist.h"
#include "uvbot/nav/autonomy_level.h"
#include "uvbot/nav/follower.h"
#include "uvbot/nav/planner.h"
#include "uvbot/robot/battery.h"
#include "uvbot/robot/lidar.h"
#include "uvbot/robot/robot_state.h"
#include "uvbot/world/occupancy_grid.h"

namespace uvbot {

inline constexpr double kDefaultTick = 0.05;

struct SimConfig {
  double tick = kDefaultTick;
  int lidar_every = 2;
  LidarConfig lidar{};
  RobotLimits limits{};
  Footprint footprint{};
  BatteryModel battery{};
  LampArray lamps{};
  double dose_cutoff = kDefaultDoseCutoff;
  AssistParams assist{};
  FollowerParams follower{};
  // Inflation used for autonomous planning.
  double robot_radius = 0.5;
  double heading_tolerance = 0.03;
  double heartbeat_timeout = kDefaultHeartbeatTimeout;
  std::uint64_t seed = 0;
};

enum class GoalState { kIdle, kActive, kReached, kFailed, kCancelled };

std::string_view GoalStateName(GoalState state);

struct GoalStatus {
  GoalState state = GoalState::kIdle;
  // ErrorCode name or a short cause when failed or cancelled.
  std::string reason;
};

struct StepEvents {
  // One entry per applied autonomy command, in order.
  std::vector<AutonomyLevel> mode_acks;
  bool goal_changed = false;
  bool collision = false;
  bool scan_updated = false;
  bool lamp_changed = false;
  // Errors raised while applying queued commands (e.g. a drive target out
  // of range), as ErrorCode names.
  std::vector<std::string> command_errors;
};

class Simulator {
 public:
  // Throws Error(kInvalidArgument) for a bad configuration and
  // Error(kCollision) when the start pose already collides.
  Simulator(OccupancyGrid grid, SimConfig config, Pose2D start,
            AutonomyLevel autonomy = AutonomyLevel::kManual);

  Simulator(const Simulator&) = delete;
  Simulator& operator=(const Simulator&) = delete;

  // Operator commands. Applied at the next tick boundary.
  void CommandVelocity(Twist cmd);
  // Robot-frame point; checked against the manual range when applied.
  void CommandManualTarget(Point2 target_in_robot_frame);
  // Map-frame goal; only accepted in Autonomous mode. With `theta` the robot
  // turns in place to that heading after arriving.
  void CommandGoal(Point2 goal, std::optional<double> theta = std::nullopt);
  void CommandAutonomy(AutonomyLevel level);
  void CommandLamp(bool on);
  void CancelGoal();

  // Link health as seen by the robot. While unhealthy the robot stops, drops
  // pending motion and the interlock keeps the lamps dark.
  void SetLink(bool connected, double heartbeat_age);

  // Immediate reaction to a disconnect notice, without waiting for the next
  // tick: lamps off (latched), motion stopped and every queued command
  // dropped so nothing sent before the loss is applied afterwards.
  void OnLinkLost();

  StepEvents Step();

  const OccupancyGrid& grid() const { return grid_; }
  const OccupancyGrid& inflated_grid() const { return inflated_; }
  const SimConfig& config() const { return config_; }
  const RobotState& state() const { return state_; }
  std::int64_t tick_count() const { return ticks_; }
  double time() const { return static_cast<double>(ticks_) * config_.tick; }
  const DoseGrid& dose() const { return dose_; }
  const LaserScan& scan() const { return scan_; }
  const GoalStatus& goal_status() const { return goal_status_; }
  const std::optional<Path>& active_path() const { return path_; }
  bool has_manual_target() const { return manual_target_.has_value(); }
  LampStatus lamp_status() const { return lamp_status_; }
  bool lamp_requested() const { return interlock_.requested(); }
  bool collided() const { return collided_; }
  std::optional<double> battery_depleted_at() const { return battery_depleted_at_; }
  double battery_fraction() const { return state_.battery_wh / config_.battery.capacity_wh; }

  // Irradiance field of the lamps at the current pose (cached).
  const std::vector<double>& CurrentIrradiance() { return accumulator_.FieldAt(state_.pose); }

 private:
  struct SetVelocity { Twist cmd; };
  struct SetManualTarget { Point2 local; };
  struct SetGoal { Point2 goal; std::optional<double> theta; };
  struct SetAutonomy { AutonomyLevel level; };
  struct SetLamp { bool on; };
  struct Cancel {};
  using Command = std::variant<SetVelocity, SetManualTarget, SetGoal, SetAutonomy, SetLamp, Cancel>;

  void Apply(const Command& cmd, StepEvents& events);
  void FailGoal(std::string reason, StepEvents& events);
  void ClearMotion();
  Twist ChooseTwist(StepEvents& events);
  Twist Assist(Twist cmd) const;
  void TakeScan();

  OccupancyGrid grid_;
  OccupancyGrid inflated_;
  SimConfig config_;
  RobotState state_;
  DoseGrid dose_;
  DoseAccumulator accumulator_;
  std::mt19937_64 rng_;
  LaserScan scan_;
  LampInterlock interlock_;
  LampStatus lamp_status_{};
  std::deque<Command> queue_;

  std::int64_t ticks_ = 0;
  Twist operator_cmd_{};
  std::optional<Point2> manual_target_;  // map frame
  std::optional<Path> path_;
  std::optional<double> goal_theta_;
  bool aligning_ = false;
  GoalStatus goal_status_{};
  bool link_connected_ = true;
  double link_age_ = 0.0;
  bool collided_ = false;
  std::optional<double> battery_depleted_at_;
};

}  // namespace uvbot

#endif  // UVBOT_SIM_SIMULATOR_H_
