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

#include "uvbot/nav/assist.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uvbot/common/error.h"
#include "uvbot/world/pose.h"

namespace uvbot {
namespace {

void RequireScan(const LaserScan& scan) {
  if (scan.ranges.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "assist filter needs a non-empty scan");
  }
}

double Weight(double range, double d_influence) {
  return range < d_influence ? (d_influence - range) / d_influence : 0.0;
}

}  // namespace

void AssistParams::Validate() const {
  if (!(d_stop > 0.0 && d_stop < d_slow)) {
    throw Error(ErrorCode::kInvalidArgument, "assist: need 0 < d_stop < d_slow");
  }
  if (!(cone_half_angle > 0.0 && cone_half_angle <= std::numbers::pi / 2.0)) {
    throw Error(ErrorCode::kInvalidArgument, "assist: cone_half_angle must be in (0, pi/2]");
  }
  if (!(d_influence > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "assist: d_influence must be positive");
  }
}

double MinRangeInCone(const LaserScan& scan, double direction, double half_angle) {
  double closest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < scan.ranges.size(); ++i) {
    const double offset = NormalizeAngle(scan.BeamAngle(i) - direction);
    if (std::abs(offset) <= half_angle + 1e-12) {
      closest = std::min(closest, scan.ranges[i]);
    }
  }
  return closest;
}

Twist AssistDecelerate(const Twist& cmd, const LaserScan& scan, const AssistParams& p) {
  RequireScan(scan);
  const double direction = cmd.v >= 0.0 ? 0.0 : std::numbers::pi;
  const double d = MinRangeInCone(scan, direction, p.cone_half_angle);
  const double scale = std::clamp((d - p.d_stop) / (p.d_slow - p.d_stop), 0.0, 1.0);
  return {cmd.v * scale, cmd.w};
}

double SteeringRepulsion(const LaserScan& scan, const AssistParams& p) {
  RequireScan(scan);
  const auto n = static_cast<long>(scan.ranges.size());
  const double half_pi = std::numbers::pi / 2.0;

  // Twice the (possibly half-integer) index of the beam on the heading.
  const double center2 = -2.0 * scan.angle_min / scan.angle_increment;
  const long c2 = std::lround(center2);
  const bool symmetric = scan.angle_increment > 0.0 &&
                         std::abs(center2 - static_cast<double>(c2)) < 1e-9;
  const bool full_circle =
      std::abs(static_cast<double>(n) * scan.angle_increment - 2.0 * std::numbers::pi) < 1e-9;

  double repulsion = 0.0;
  if (symmetric) {
    for (long i = 0; i < n; ++i) {
      const long k2 = 2 * i - c2;
      if (k2 <= 0) continue;
      const double bearing = static_cast<double>(k2) * scan.angle_increment / 2.0;
      if (bearing >= half_pi) continue;
      long mirror = c2 - i;
      if (full_circle) mirror = ((mirror % n) + n) % n;
      const double left = Weight(scan.ranges[static_cast<std::size_t>(i)], p.d_influence);
      const double right =
          (mirror >= 0 && mirror < n)
              ? Weight(scan.ranges[static_cast<std::size_t>(mirror)], p.d_influence)
              : 0.0;
      repulsion += (left - right) * std::sin(bearing);
    }
    return repulsion;
  }
  for (std::size_t i = 0; i < scan.ranges.size(); ++i) {
    const double bearing = NormalizeAngle(scan.BeamAngle(i));
    if (std::abs(bearing) >= half_pi) continue;
    repulsion += Weight(scan.ranges[i], p.d_influence) * std::sin(bearing);
  }
  return repulsion;
}

Twist AssistSteer(const Twist& cmd, const LaserScan& scan, const AssistParams& p,
                  double w_max) {
  Twist out = AssistDecelerate(cmd, scan, p);
  const double r = SteeringRepulsion(scan, p);
  out.w = std::clamp(cmd.w - p.k_steer * r, -w_max, w_max);
  return out;
}

}  // namespace uvbot
