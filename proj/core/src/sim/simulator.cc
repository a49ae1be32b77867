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

#include "uvbot/sim/simulator.h"

#include <algorithm>
#include <cmath>

#include "uvbot/common/error.h"
#include "uvbot/robot/collision.h"
#include "uvbot/robot/kinematics.h"
#include "uvbot/world/raycast.h"

namespace uvbot {

std::string_view GoalStateName(GoalState state) {
  switch (state) {
    case GoalState::kIdle: return "idle";
    case GoalState::kActive: return "active";
    case GoalState::kReached: return "reached";
    case GoalState::kFailed: return "failed";
    case GoalState::kCancelled: return "cancelled";
  }
  return "idle";
}

Simulator::Simulator(OccupancyGrid grid, SimConfig config, Pose2D start, AutonomyLevel autonomy)
    : grid_(std::move(grid)),
      inflated_(Inflate(grid_, config.robot_radius)),
      config_(std::move(config)),
      dose_(grid_),
      accumulator_(grid_, config_.lamps, config_.dose_cutoff),
      rng_(config_.seed),
      interlock_(config_.heartbeat_timeout) {
  if (!(config_.tick > 0.0) || config_.lidar_every < 1) {
    throw Error(ErrorCode::kInvalidArgument, "tick must be positive and lidar_every >= 1");
  }
  config_.assist.Validate();
  config_.lamps.Validate();
  if (config_.lamps.arc_radius > config_.footprint.CircumscribedRadius()) {
    throw Error(ErrorCode::kInvalidArgument, "lamp arc lies outside the footprint");
  }
  config_.follower.limits = config_.limits;
  state_.pose = MakePose(start.x, start.y, start.theta);
  state_.autonomy = autonomy;
  state_.footprint = config_.footprint;
  state_.battery_wh = config_.battery.capacity_wh;
  if (CheckCollision(grid_, state_.pose, config_.footprint)) {
    throw Error(ErrorCode::kCollision, "start pose collides with the map");
  }
  TakeScan();
}

void Simulator::CommandVelocity(Twist cmd) { queue_.push_back(SetVelocity{cmd}); }
void Simulator::CommandManualTarget(Point2 local) { queue_.push_back(SetManualTarget{local}); }
void Simulator::CommandGoal(Point2 goal, std::optional<double> theta) {
  queue_.push_back(SetGoal{goal, theta});
}
void Simulator::CommandAutonomy(AutonomyLevel level) { queue_.push_back(SetAutonomy{level}); }
void Simulator::CommandLamp(bool on) { queue_.push_back(SetLamp{on}); }
void Simulator::CancelGoal() { queue_.push_back(Cancel{}); }

void Simulator::SetLink(bool connected, double heartbeat_age) {
  link_connected_ = connected;
  link_age_ = heartbeat_age;
}

void Simulator::OnLinkLost() {
  link_connected_ = false;
  queue_.clear();
  interlock_.ForceOff();
  lamp_status_ = interlock_.status();
  state_.lamp_on = false;
  state_.twist = {};
  ClearMotion();
  if (path_) {
    path_.reset();
    aligning_ = false;
    goal_status_ = {GoalState::kCancelled, "LinkLost"};
  }
}

void Simulator::ClearMotion() {
  operator_cmd_ = {};
  manual_target_.reset();
}

void Simulator::FailGoal(std::string reason, StepEvents& events) {
  path_.reset();
  aligning_ = false;
  goal_status_ = {GoalState::kFailed, std::move(reason)};
  events.goal_changed = true;
}

void Simulator::Apply(const Command& command, StepEvents& events) {
  if (const auto* c = std::get_if<SetVelocity>(&command)) {
    operator_cmd_ = ClampTwist(c->cmd, config_.limits);
    manual_target_.reset();
  } else if (const auto* c = std::get_if<SetManualTarget>(&command)) {
    if (state_.autonomy == AutonomyLevel::kAutonomous) {
      events.command_errors.emplace_back("NotInManualMode");
      return;
    }
    if (Norm(c->local) > config_.follower.manual_range) {
      events.command_errors.emplace_back(ErrorCodeName(ErrorCode::kTargetOutOfRange));
      return;
    }
    manual_target_ = RobotToWorld(state_.pose, c->local);
    operator_cmd_ = {};
  } else if (const auto* c = std::get_if<SetGoal>(&command)) {
    if (state_.autonomy != AutonomyLevel::kAutonomous) {
      FailGoal("NotAutonomous", events);
      return;
    }
    try {
      Path path = PlanPathInflated(inflated_, state_.pose.position(), c->goal);
      // Finish on the exact goal rather than its cell center.
      path.waypoints.back() = c->goal;
      path_ = std::move(path);
      goal_theta_ = c->theta;
      aligning_ = false;
      goal_status_ = {GoalState::kActive, ""};
    } catch (const Error& e) {
      FailGoal(std::string(ErrorCodeName(e.code())), events);
      return;
    }
    events.goal_changed = true;
  } else if (const auto* c = std::get_if<SetAutonomy>(&command)) {
    events.mode_acks.push_back(c->level);
    if (c->level == state_.autonomy) return;
    if (state_.autonomy == AutonomyLevel::kAutonomous && path_) {
      path_.reset();
      aligning_ = false;
      goal_status_ = {GoalState::kCancelled, "ModeChanged"};
      events.goal_changed = true;
    }
    if (c->level == AutonomyLevel::kAutonomous) ClearMotion();
    state_.autonomy = c->level;
    state_.twist = {};
  } else if (const auto* c = std::get_if<SetLamp>(&command)) {
    interlock_.Request(c->on);
  } else if (std::holds_alternative<Cancel>(command)) {
    if (path_) {
      path_.reset();
      aligning_ = false;
      goal_status_ = {GoalState::kCancelled, "Cancelled"};
      events.goal_changed = true;
    }
  }
}

Twist Simulator::Assist(Twist cmd) const {
  switch (state_.autonomy) {
    case AutonomyLevel::kAssistedDecel:
      return AssistDecelerate(cmd, scan_, config_.assist);
    case AutonomyLevel::kAssistedSteer:
      return AssistSteer(cmd, scan_, config_.assist, config_.limits.w_max);
    default:
      return cmd;
  }
}

Twist Simulator::ChooseTwist(StepEvents& events) {
  const Pose2D& pose = state_.pose;
  if (state_.autonomy == AutonomyLevel::kAutonomous) {
    if (!path_) return {};
    if (aligning_) {
      const double err = NormalizeAngle(*goal_theta_ - pose.theta);
      if (std::abs(err) <= config_.heading_tolerance) {
        path_.reset();
        aligning_ = false;
        goal_status_ = {GoalState::kReached, ""};
        events.goal_changed = true;
        return {};
      }
      return {0.0, std::clamp(config_.follower.k_w * err, -config_.limits.w_max,
                              config_.limits.w_max)};
    }
    const FollowCommand follow = FollowPath(pose, *path_, config_.follower);
    if (follow.reached) {
      if (goal_theta_) {
        aligning_ = true;
        return ChooseTwist(events);
      }
      path_.reset();
      goal_status_ = {GoalState::kReached, ""};
      events.goal_changed = true;
      return {};
    }
    // No replanning: an unmapped obstacle on the path aborts the goal.
    if (follow.twist.v > 0.0 &&
        MinRangeInCone(scan_, 0.0, config_.assist.cone_half_angle) < config_.assist.d_stop) {
      FailGoal(std::string(ErrorCodeName(ErrorCode::kPathBlocked)), events);
      return {};
    }
    return follow.twist;
  }
  if (manual_target_) {
    const Point2 local = WorldToRobot(pose, *manual_target_);
    FollowerParams params = config_.follower;
    // The target was range-checked when it was issued.
    params.manual_range = std::max(params.manual_range, Norm(local));
    const FollowCommand follow = DriveToPoint(local, params);
    if (follow.reached) {
      manual_target_.reset();
      return {};
    }
    return Assist(follow.twist);
  }
  return Assist(operator_cmd_);
}

void Simulator::TakeScan() {
  scan_ = SimulateLidar(grid_, state_.pose, config_.lidar, rng_);
  scan_.stamp = time();
}

StepEvents Simulator::Step() {
  StepEvents events;
  const AutonomyLevel mode_before = state_.autonomy;
  while (!queue_.empty()) {
    const Command cmd = queue_.front();
    queue_.pop_front();
    Apply(cmd, events);
  }

  const bool link_ok = InterlockPermits(link_connected_, link_age_, config_.heartbeat_timeout);
  if (!link_ok) {
    ClearMotion();
    if (path_) {
      path_.reset();
      aligning_ = false;
      goal_status_ = {GoalState::kCancelled, "LinkLost"};
      events.goal_changed = true;
    }
  }

  Twist cmd{};
  if (link_ok && state_.battery_wh > 0.0 && state_.autonomy == mode_before) {
    cmd = ClampTwist(ChooseTwist(events), config_.limits);
  }

  const double dt = config_.tick;
  const Pose2D next = StepKinematics(state_.pose, cmd, dt);
  if ((cmd.v != 0.0 || cmd.w != 0.0) && CheckCollision(grid_, next, config_.footprint)) {
    collided_ = true;
    events.collision = true;
    cmd = {};
    ClearMotion();
    if (path_) FailGoal(std::string(ErrorCodeName(ErrorCode::kCollision)), events);
  } else {
    state_.pose = next;
  }
  state_.twist = cmd;

  const bool was_on = state_.lamp_on;
  lamp_status_ = interlock_.Tick(link_connected_, link_age_);
  state_.lamp_on = lamp_status_.on && state_.battery_wh > 0.0;
  events.lamp_changed = state_.lamp_on != was_on;

  if (state_.battery_wh > 0.0) {
    state_.battery_wh = StepBattery(state_.battery_wh, dt, state_.lamp_on, config_.battery);
  }
  accumulator_.Step(dose_, state_.pose, state_.lamp_on, dt);

  ++ticks_;
  if (state_.battery_wh <= 0.0 && !battery_depleted_at_) {
    battery_depleted_at_ = time();
    interlock_.ForceOff();
  }
  if (ticks_ % config_.lidar_every == 0) {
    TakeScan();
    events.scan_updated = true;
  }
  return events;
}

}  // namespace uvbot
