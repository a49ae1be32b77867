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

#ifndef UVBOT_DISINFECTION_LAMP_ARRAY_H_
#define UVBOT_DISINFECTION_LAMP_ARRAY_H_

#include <vector>

#include "uvbot/world/pose.h"

namespace uvbot {

// Tube lamps on the mast, each modelled as an isotropic point source.
// Lamps sit on a semicircle of `arc_radius` over the front half of the base,
// at bearings -pi/2 + pi * (i + 0.5) / count.
struct LampArray {
  int count = 4;
  double uvc_power_w = 4.5;
  double electrical_power_w = 16.7;
  double arc_radius = 0.15;
  // Informational; the dose plane is taken at lamp height.
  double mount_height = 1.2;

  // Throws Error(kInvalidArgument) for count < 1, non-positive power or a
  // negative radius.
  void Validate() const;

  std::vector<Point2> Offsets() const;
  std::vector<Point2> WorldPositions(const Pose2D& pose) const;
  double TotalElectricalPower() const { return count * electrical_power_w; }
};

}  // namespace uvbot

#endif  // UVBOT_DISINFECTION_LAMP_ARRAY_H_
