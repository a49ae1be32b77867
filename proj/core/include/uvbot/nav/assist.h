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

// Assisted teleoperation filters. Both take the operator's command and the
// latest scan and return the command that is actually sent to the base.

#ifndef UVBOT_NAV_ASSIST_H_
#define UVBOT_NAV_ASSIST_H_

#include <numbers>

#include "uvbot/robot/lidar.h"
#include "uvbot/robot/robot_state.h"

namespace uvbot {

struct AssistParams {
  double d_stop = 0.35;
  double d_slow = 1.0;
  double cone_half_angle = std::numbers::pi / 6.0;
  double d_influence = 1.2;
  double k_steer = 0.8;

  // Throws Error(kInvalidArgument) when the invariants
  // 0 < d_stop < d_slow, 0 < cone_half_angle <= pi/2, d_influence > 0 fail.
  void Validate() const;
};

// Smallest range among beams within `half_angle` of `direction` (robot
// frame). Returns +inf when no beam falls inside the cone.
double MinRangeInCone(const LaserScan& scan, double direction, double half_angle);

// Scales v linearly from full speed at d_slow down to zero at d_stop, where d
// is the closest return in the cone around the direction of travel (behind
// the robot when reversing). w is never modified.
Twist AssistDecelerate(const Twist& cmd, const LaserScan& scan, const AssistParams& p);

// Repulsion R = sum over front-half beams with r < d_influence of
// ((d_influence - r) / d_influence) * sin(bearing). For scans symmetric about
// the heading, mirrored beams are combined pairwise so that mirroring the
// scan negates R bit-exactly.
double SteeringRepulsion(const LaserScan& scan, const AssistParams& p);

// Decelerates, then sets w' = clamp(w - k_steer * R, +-w_max): obstacles on
// the left push the robot to the right and vice versa.
Twist AssistSteer(const Twist& cmd, const LaserScan& scan, const AssistParams& p,
                  double w_max);

}  // namespace uvbot

#endif  // UVBOT_NAV_ASSIST_H_
