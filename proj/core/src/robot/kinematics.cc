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

#include "uvbot/robot/kinematics.h"

#include <cmath>

#include "uvbot/common/error.h"

namespace uvbot {

Pose2D StepKinematics(const Pose2D& pose, const Twist& cmd, double dt) {
  if (!(dt > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "kinematics step needs dt > 0");
  }
  Pose2D next = pose;
  if (std::abs(cmd.w) < 1e-9) {
    next.x += cmd.v * std::cos(pose.theta) * dt;
    next.y += cmd.v * std::sin(pose.theta) * dt;
    next.theta = NormalizeAngle(pose.theta + cmd.w * dt);
    return next;
  }
  if (cmd.v != 0.0) {
    const double radius = cmd.v / cmd.w;
    const double theta_end = pose.theta + cmd.w * dt;
    next.x += radius * (std::sin(theta_end) - std::sin(pose.theta));
    next.y -= radius * (std::cos(theta_end) - std::cos(pose.theta));
  }
  next.theta = NormalizeAngle(pose.theta + cmd.w * dt);
  return next;
}

}  // namespace uvbot
