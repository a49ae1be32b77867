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

#include "uvbot/disinfection/lamp_array.h"

#include <cmath>
#include <numbers>

#include "uvbot/common/error.h"

namespace uvbot {

void LampArray::Validate() const {
  if (count < 1 || !(uvc_power_w > 0.0) || arc_radius < 0.0 || electrical_power_w < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "lamp array needs count >= 1, uvc_power > 0 and arc_radius >= 0");
  }
}

std::vector<Point2> LampArray::Offsets() const {
  std::vector<Point2> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double bearing = -std::numbers::pi / 2.0 + std::numbers::pi * (i + 0.5) / count;
    out.push_back({arc_radius * std::cos(bearing), arc_radius * std::sin(bearing)});
  }
  return out;
}

std::vector<Point2> LampArray::WorldPositions(const Pose2D& pose) const {
  std::vector<Point2> out;
  for (const Point2& o : Offsets()) out.push_back(RobotToWorld(pose, o));
  return out;
}

}  // namespace uvbot
