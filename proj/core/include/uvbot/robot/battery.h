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

#ifndef UVBOT_ROBOT_BATTERY_H_
#define UVBOT_ROBOT_BATTERY_H_

namespace uvbot {

// Two 60 Wh packs in parallel. The base draw is chosen so the pack lasts
// 3 h with the lamps off; the lamp draw is four 16.7 W tubes.
struct BatteryModel {
  double capacity_wh = 120.0;
  double base_power_w = 40.0;
  double lamp_power_w = 4 * 16.7;
};

// Remaining charge after `dt` seconds, clamped at zero.
// Throws Error(kInvalidArgument) if dt <= 0.
double StepBattery(double battery_wh, double dt, bool lamp_on,
                   const BatteryModel& model);

}  // namespace uvbot

#endif  // UVBOT_ROBOT_BATTERY_H_
