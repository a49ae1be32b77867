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

// UVC point-source physics. Units: power W, irradiance W/m^2, dose J/m^2.
// 1 uW/cm^2 = 0.01 W/m^2 and 1 uW*s/cm^2 = 0.01 J/m^2.

#ifndef UVBOT_DISINFECTION_IRRADIANCE_H_
#define UVBOT_DISINFECTION_IRRADIANCE_H_

#include <vector>

#include "uvbot/world/occupancy_grid.h"
#include "uvbot/world/pose.h"

namespace uvbot {

// Distances below this are clamped; the lamp housing is larger than that.
inline constexpr double kMinLampDistance = 0.2;

inline constexpr double WattsPerSquareMeterToMicrowattsPerSquareCm(double e) {
  return e * 100.0;
}

// Isotropic point source, no occlusion: P / (4 pi max(r, r_min)^2).
double PointSourceIrradiance(double uvc_power, double distance);

// PointSourceIrradiance when `target` is visible from `lamp`, 0 otherwise.
// Throws Error(kOutOfBounds) if either point is off the map.
double IrradianceAt(Point2 lamp, double uvc_power, Point2 target, const OccupancyGrid& grid);

// Exposure time for `required_dose` at `distance` from an unoccluded lamp:
// t = D * 4 pi max(r, r_min)^2 / P. Throws Error(kInvalidArgument) for a
// negative dose or non-positive distance or power.
double DwellTimeForDose(double required_dose, double distance, double uvc_power);

// First-order inactivation: one log10 reduction per D90 of dose.
// Throws Error(kInvalidArgument) if d90 <= 0.
double LogReduction(double dose, double d90);

}  // namespace uvbot

#endif  // UVBOT_DISINFECTION_IRRADIANCE_H_
