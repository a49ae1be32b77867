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

#ifndef UVBOT_ROBOT_ROBOT_STATE_H_
#define UVBOT_ROBOT_ROBOT_STATE_H_

#include <algorithm>
#include <cmath>

#include "uvbot/nav/autonomy_level.h"
#include "uvbot/world/pose.h"

namespace uvbot {

// Body-frame velocity command: forward speed (m/s) and CCW yaw rate (rad/s).
struct Twist {
  double v = 0.0;
  double w = 0.0;

  friend bool operator==(const Twist&, const Twist&) = default;
};

struct RobotLimits {
  double v_max = 1.0;
  double w_max = 1.5;
};

inline Twist ClampTwist(Twist t, const RobotLimits& limits) {
  return {std::clamp(t.v, -limits.v_max, limits.v_max),
          std::clamp(t.w, -limits.w_max, limits.w_max)};
}

// Rectangular base centered on the pose; length runs along the heading.
struct Footprint {
  double width = 0.49;
  double length = 0.62;

  double CircumscribedRadius() const {
    return 0.5 * std::hypot(width, length);
  }
};

struct RobotState {
  Pose2D pose{};
  Twist twist{};
  bool lamp_on = false;
  AutonomyLevel autonomy = AutonomyLevel::kManual;
  double battery_wh = 120.0;
  Footprint footprint{};
};

}  // namespace uvbot

#endif  // UVBOT_ROBOT_ROBOT_STATE_H_
