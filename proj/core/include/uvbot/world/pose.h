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

#ifndef UVBOT_WORLD_POSE_H_
#define UVBOT_WORLD_POSE_H_

#include <cmath>
#include <numbers>

namespace uvbot {

// Wraps an angle into (-pi, pi].
inline double NormalizeAngle(double angle) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  if (angle > -std::numbers::pi && angle <= std::numbers::pi) return angle;
  double wrapped = std::fmod(angle + std::numbers::pi, kTwoPi);
  if (wrapped <= 0.0) wrapped += kTwoPi;
  return wrapped - std::numbers::pi;
}

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point2, Point2) = default;
};

inline double Norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double Distance(Point2 a, Point2 b) { return Norm(b - a); }

// Planar pose in the map frame. `theta` is kept in (-pi, pi] by every
// function in this library that writes it.
struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Point2 position() const { return {x, y}; }
  friend bool operator==(const Pose2D&, const Pose2D&) = default;
};

inline Pose2D MakePose(double x, double y, double theta) {
  return {x, y, NormalizeAngle(theta)};
}

// Maps a point expressed in the robot frame of `pose` into the map frame.
inline Point2 RobotToWorld(const Pose2D& pose, Point2 local) {
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  return {pose.x + c * local.x - s * local.y, pose.y + s * local.x + c * local.y};
}

inline Point2 WorldToRobot(const Pose2D& pose, Point2 world) {
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  const double dx = world.x - pose.x;
  const double dy = world.y - pose.y;
  return {c * dx + s * dy, -s * dx + c * dy};
}

}  // namespace uvbot

#endif  // UVBOT_WORLD_POSE_H_
