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

#include "uvbot/robot/battery.h"

#include <algorithm>

#include "uvbot/common/error.h"

namespace uvbot {

double StepBattery(double battery_wh, double dt, bool lamp_on,
                   const BatteryModel& model) {
  if (!(dt > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "battery step needs dt > 0");
  }
  const double power = model.base_power_w + (lamp_on ? model.lamp_power_w : 0.0);
  return std::max(0.0, battery_wh - power * dt / 3600.0);
}

}  // namespace uvbot
