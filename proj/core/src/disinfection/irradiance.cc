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

#include "uvbot/disinfection/irradiance.h"

#include <algorithm>
#include <numbers>

#include "uvbot/common/error.h"
#include "uvbot/world/raycast.h"

namespace uvbot {

double PointSourceIrradiance(double uvc_power, double distance) {
  const double r = std::max(distance, kMinLampDistance);
  return uvc_power / (4.0 * std::numbers::pi * r * r);
}

double IrradianceAt(Point2 lamp, double uvc_power, Point2 target, const OccupancyGrid& grid) {
  if (!LineOfSight(grid, lamp, target)) return 0.0;
  return PointSourceIrradiance(uvc_power, Distance(lamp, target));
}

double DwellTimeForDose(double required_dose, double distance, double uvc_power) {
  if (required_dose < 0.0 || !(distance > 0.0) || !(uvc_power > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "dwell time needs dose >= 0, distance > 0 and power > 0");
  }
  const double r = std::max(distance, kMinLampDistance);
  return required_dose * 4.0 * std::numbers::pi * r * r / uvc_power;
}

double LogReduction(double dose, double d90) {
  if (!(d90 > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "D90 must be positive");
  }
  return dose / d90;
}

}  // namespace uvbot
