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

#include "uvbot/nav/follower.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uvbot/common/error.h"

namespace uvbot {
namespace {

struct Projection {
  std::size_t segment = 0;
  double along = 0.0;  // distance from the segment start
};

Projection ProjectOntoPath(const std::vector<Point2>& pts, Point2 p) {
  Projection best;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point2 a = pts[i];
    const Point2 d = pts[i + 1] - a;
    const double len2 = d.x * d.x + d.y * d.y;
    double s = 0.0;
    if (len2 > 0.0) {
      s = std::clamp(((p.x - a.x) * d.x + (p.y - a.y) * d.y) / len2, 0.0, 1.0);
    }
    const Point2 q = a + s * d;
    const double d2 = (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = {i, s * std::sqrt(len2)};
    }
  }
  return best;
}

}  // namespace

Twist RotateThenDrive(double bearing, double remaining, const FollowerParams& params) {
  const double w = std::clamp(params.k_w * bearing, -params.limits.w_max, params.limits.w_max);
  if (std::abs(bearing) > params.alpha_turn) return {0.0, w};
  const double v = std::clamp(params.k_v * remaining, 0.0, params.limits.v_max);
  return {v, w};
}

FollowCommand FollowPath(const Pose2D& pose, const Path& path, const FollowerParams& params) {
  const auto& pts = path.waypoints;
  if (pts.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot follow an empty path");
  }
  const Point2 goal = pts.back();
  if (Distance(pose.position(), goal) <= params.goal_tolerance) {
    return {{0.0, 0.0}, true};
  }
  Point2 aim = goal;
  double remaining = Distance(pose.position(), goal);
  if (pts.size() >= 2) {
    const Projection proj = ProjectOntoPath(pts, pose.position());
    double seg_len = Distance(pts[proj.segment], pts[proj.segment + 1]);
    remaining = seg_len - proj.along;
    for (std::size_t i = proj.segment + 1; i + 1 < pts.size(); ++i) {
      remaining += Distance(pts[i], pts[i + 1]);
    }
    // Walk `lookahead` meters forward from the projection.
    double budget = params.lookahead + proj.along;
    std::size_t i = proj.segment;
    while (i + 1 < pts.size()) {
      seg_len = Distance(pts[i], pts[i + 1]);
      if (budget <= seg_len && seg_len > 0.0) {
        aim = pts[i] + (budget / seg_len) * (pts[i + 1] - pts[i]);
        break;
      }
      budget -= seg_len;
      ++i;
    }
    if (i + 1 >= pts.size()) aim = goal;
  }
  const Point2 local = WorldToRobot(pose, aim);
  const double bearing = std::atan2(local.y, local.x);
  return {RotateThenDrive(bearing, remaining, params), false};
}

FollowCommand DriveToPoint(Point2 target_in_robot_frame, const FollowerParams& params) {
  const double dist = Norm(target_in_robot_frame);
  if (dist > params.manual_range) {
    throw Error(ErrorCode::kTargetOutOfRange,
                "drive target is " + std::to_string(dist) + " m away, limit is " +
                    std::to_string(params.manual_range) + " m");
  }
  if (dist <= params.goal_tolerance) return {{0.0, 0.0}, true};
  const double bearing = std::atan2(target_in_robot_frame.y, target_in_robot_frame.x);
  return {RotateThenDrive(bearing, dist, params), false};
}

}  // namespace uvbot
