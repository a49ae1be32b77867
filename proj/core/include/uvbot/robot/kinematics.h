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

#ifndef UVBOT_ROBOT_KINEMATICS_H_
#define UVBOT_ROBOT_KINEMATICS_H_

#include "uvbot/robot/robot_state.h"
#include "uvbot/world/pose.h"

namespace uvbot {

// Exact unicycle integration of a constant twist over `dt` seconds. Straight
// motion is used below |w| = 1e-9, the circular-arc solution otherwise. A
// pure rotation leaves x and y bit-identical.
//
// Throws Error(kInvalidArgument) if dt <= 0.
Pose2D StepKinematics(const Pose2D& pose, const Twist& cmd, double dt);

}  // namespace uvbot

#endif  // UVBOT_ROBOT_KINEMATICS_H_
