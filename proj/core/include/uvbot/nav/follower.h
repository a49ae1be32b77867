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

#ifndef UVBOT_NAV_FOLLOWER_H_
#define UVBOT_NAV_FOLLOWER_H_

#include "uvbot/nav/planner.h"
#include "uvbot/robot/robot_state.h"
#include "uvbot/world/pose.h"

namespace uvbot {

struct FollowerParams {
  double lookahead = 0.3;
  // Heading errors above this are corrected by rotating in place.
  double alpha_turn = 0.9;
  double k_v = 1.0;
  double k_w = 2.0;
  double goal_tolerance = 0.1;
  // Largest robot-frame distance accepted for click-to-drive targets.
  double manual_range = 3.0;
  RobotLimits limits{};
};

struct FollowCommand {
  Twist twist{};
  bool reached = false;
};

// Rotate-then-drive law shared by the path follower and click-to-drive.
// `bearing` is the heading error to the aim point, `remaining` the distance
// left to the end of the motion.
Twist RotateThenDrive(double bearing, double remaining, const FollowerParams& params);

// Pure pursuit: projects the robot onto the path, aims at the point
// `lookahead` meters further along it and applies RotateThenDrive with the
// remaining path length. Throws Error(kInvalidArgument) for an empty path.
FollowCommand FollowPath(const Pose2D& pose, const Path& path, const FollowerParams& params);

// Click-to-drive toward a point given in the robot frame.
// Throws Error(kTargetOutOfRange) beyond params.manual_range.
FollowCommand DriveToPoint(Point2 target_in_robot_frame, const FollowerParams& params);

}  // namespace uvbot

#endif  // UVBOT_NAV_FOLLOWER_H_
