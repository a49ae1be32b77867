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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "oracles.h"
#include "uvbot/common/error.h"
#include "uvbot/nav/assist.h"
#include "uvbot/nav/autonomy_level.h"
#include "uvbot/nav/follower.h"
#include "uvbot/nav/planner.h"
#include "uvbot/robot/collision.h"
#include "uvbot/sim/simulator.h"
#include "uvbot/world/raycast.h"

namespace uvbot {
namespace {

constexpr double kPi = std::numbers::pi;

LaserScan UniformScan(double range, int beams = 360) {
  LaserScan s;
  s.angle_increment = 2 * kPi / beams;
  s.ranges.assign(static_cast<std::size_t>(beams), range);
  return s;
}

template <typename F>
ErrorCode CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(Assist, FarObstaclesLeaveCommandUnchanged) {
  const AssistParams p;
  const Twist cmd{0.7, -0.3};
  EXPECT_EQ(AssistDecelerate(cmd, UniformScan(p.d_slow), p), cmd);
  EXPECT_EQ(AssistDecelerate(cmd, UniformScan(5.0), p), cmd);
}

TEST(Assist, StopDistanceZeroesSpeedOnly) {
  const AssistParams p;
  const Twist out = AssistDecelerate({0.7, -0.3}, UniformScan(p.d_stop), p);
  EXPECT_EQ(out.v, 0.0);
  EXPECT_EQ(out.w, -0.3);
}

TEST(Assist, MidpointHalvesSpeed) {
  const AssistParams p;
  const Twist out = AssistDecelerate({0.8, 0.0}, UniformScan(0.5 * (p.d_stop + p.d_slow)), p);
  EXPECT_NEAR(out.v, 0.4, 1e-12);
}

TEST(Assist, ReversingLooksBehind) {
  const AssistParams p;
  LaserScan s = UniformScan(5.0);
  s.ranges[0] = 0.1;  // directly behind
  EXPECT_EQ(AssistDecelerate({0.5, 0.0}, s, p).v, 0.5);
  EXPECT_EQ(AssistDecelerate({-0.5, 0.0}, s, p).v, 0.0);
}

TEST(Assist, ConeExcludesSideBeams) {
  LaserScan s = UniformScan(5.0);
  s.ranges[90] = 0.2;  // -pi/2
  EXPECT_EQ(MinRangeInCone(s, 0.0, kPi / 6), 5.0);
  EXPECT_EQ(MinRangeInCone(s, -kPi / 2, kPi / 6), 0.2);
  LaserScan empty = UniformScan(5.0, 4);
  EXPECT_EQ(MinRangeInCone(empty, kPi / 4, 0.1), std::numeric_limits<double>::infinity());
}

TEST(Assist, SymmetricScanHasNoRepulsion) {
  const AssistParams p;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> r(0.2, 3.0);
  LaserScan s = UniformScan(5.0);
  const std::size_t n = s.ranges.size();
  for (std::size_t i = 0; i <= n / 2; ++i) s.ranges[i] = s.ranges[(n - i) % n] = r(rng);
  const Twist cmd{0.0, 0.25};
  EXPECT_EQ(AssistSteer(cmd, s, p, 10.0).w, cmd.w);
}

TEST(Assist, ObstacleOnTheRightTurnsLeft) {
  const AssistParams p;
  LaserScan s = UniformScan(10.0);
  s.ranges[135] = 0.5 * p.d_influence;
  ASSERT_NEAR(s.BeamAngle(135), -kPi / 4, 1e-12);
  const Twist out = AssistSteer({0.5, 0.1}, s, p, 10.0);
  EXPECT_NEAR(out.w, 0.1 + p.k_steer * 0.5 * std::sin(kPi / 4), 1e-12);
  EXPECT_EQ(out.v, 0.5);
}

TEST(Assist, SteeringIsClamped) {
  const AssistParams p;
  LaserScan s = UniformScan(10.0);
  for (int i = 100; i < 170; ++i) s.ranges[static_cast<std::size_t>(i)] = 0.05;
  EXPECT_EQ(AssistSteer({0.0, 0.0}, s, p, 0.3).w, 0.3);
}

TEST(Assist, AllFarIsIdentity) {
  const AssistParams p;
  const Twist cmd{0.3, 0.2};
  EXPECT_EQ(AssistSteer(cmd, UniformScan(p.d_influence), p, 10.0), cmd);
}

TEST(Assist, BadParamsRejected) {
  AssistParams p;
  p.d_stop = 2.0;
  EXPECT_EQ(CodeOf([&] { p.Validate(); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { AssistDecelerate({}, LaserScan{}, AssistParams{}); }),
            ErrorCode::kInvalidArgument);
}

TEST(AutonomyLevelNames, RoundTrip) {
  for (const AutonomyLevel l : {AutonomyLevel::kManual, AutonomyLevel::kAssistedDecel,
                                AutonomyLevel::kAssistedSteer, AutonomyLevel::kAutonomous}) {
    EXPECT_EQ(ParseAutonomyLevel(AutonomyLevelName(l)), l);
  }
  EXPECT_FALSE(ParseAutonomyLevel("Turbo").has_value());
}

TEST(Planner, StartEqualsGoal) {
  const OccupancyGrid g(40, 40, 0.05);
  const Path p = PlanPathInflated(g, {1.0, 1.0}, {1.0, 1.0});
  EXPECT_EQ(p.waypoints.size(), 1u);
  EXPECT_EQ(p.total_length, 0.0);
}

TEST(Planner, StraightInOpenGrid) {
  const OccupancyGrid g(400, 400, 0.05);
  const Path p = PlanPathInflated(g, {1.0, 1.0}, {6.0, 1.0});
  EXPECT_NEAR(p.total_length, 5.0, 1e-9);
  EXPECT_EQ(p.waypoints.size(), 2u);
  EXPECT_EQ(p.diagonal_moves, 0);
}

OccupancyGrid UWall() {
  OccupancyGrid g(60, 60, 0.1);
  g.FillRect({1.5, 1.5}, {1.7, 4.5}, Occupancy::kOccupied);
  g.FillRect({1.5, 4.3}, {4.5, 4.5}, Occupancy::kOccupied);
  g.FillRect({1.5, 1.5}, {4.5, 1.7}, Occupancy::kOccupied);
  return g;
}

TEST(Planner, UWallMatchesDijkstra) {
  const OccupancyGrid g = UWall();
  const Point2 start{3.05, 3.05};
  const Point2 goal{0.55, 3.05};
  const Path p = PlanPathInflated(g, start, goal);
  const auto ref = oracle::DijkstraCost(g, *g.WorldToCell(start), *g.WorldToCell(goal));
  ASSERT_TRUE(ref.has_value());
  EXPECT_NEAR(p.total_length, ref->value() * g.resolution(), 1e-9);
  EXPECT_NEAR((p.straight_moves + std::numbers::sqrt2 * p.diagonal_moves) * g.resolution(),
              ref->value() * g.resolution(), 1e-9);
  EXPECT_GT(p.total_length, Distance(start, goal) + 1.0);
}

TEST(Planner, SegmentsStayInFreeSpace) {
  std::mt19937_64 rng(2);
  for (int m = 0; m < 20; ++m) {
    const OccupancyGrid g = oracle::RandomBlockMap(rng, 40, 40, 0.1, 0.2);
    const Point2 start = g.CellCenter({20, 20});
    for (int i = 0; i < 10; ++i) {
      std::uniform_int_distribution<int> cell(1, 38);
      const CellIndex gc{cell(rng), cell(rng)};
      if (g.IsBlocked(gc)) continue;
      Path p;
      try {
        p = PlanPathInflated(g, start, g.CellCenter(gc));
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kGoalUnreachable);
        EXPECT_FALSE(oracle::DijkstraCost(g, {20, 20}, gc).has_value());
        continue;
      }
      for (std::size_t k = 1; k < p.waypoints.size(); ++k) {
        EXPECT_TRUE(oracle::MarchLineOfSight(g, p.waypoints[k - 1], p.waypoints[k]));
        EXPECT_FALSE(g.IsBlockedAt(p.waypoints[k]));
      }
    }
  }
}

TEST(Planner, Errors) {
  OccupancyGrid g(40, 40, 0.1);
  g.FillRect({2.0, 0.0}, {2.1, 4.0}, Occupancy::kOccupied);
  EXPECT_EQ(CodeOf([&] { PlanPathInflated(g, {1, 1}, {2.05, 1}); }), ErrorCode::kGoalOccupied);
  EXPECT_EQ(CodeOf([&] { PlanPathInflated(g, {2.05, 1}, {1, 1}); }), ErrorCode::kStartOccupied);
  EXPECT_EQ(CodeOf([&] { PlanPathInflated(g, {1, 1}, {3, 1}); }), ErrorCode::kGoalUnreachable);
  EXPECT_EQ(CodeOf([&] { PlanPathInflated(g, {1, 1}, {9, 1}); }), ErrorCode::kGoalOccupied);
}

TEST(Planner, InflationClosesNarrowGaps) {
  OccupancyGrid g(40, 40, 0.1);
  g.FillRect({2.0, 0.0}, {2.1, 1.8}, Occupancy::kOccupied);
  g.FillRect({2.0, 2.2}, {2.1, 4.0}, Occupancy::kOccupied);
  EXPECT_NO_THROW(PlanPath(g, {1, 2.05}, {3, 2.05}, 0.1));
  EXPECT_EQ(CodeOf([&] { PlanPath(g, {1, 2.05}, {3, 2.05}, 0.3); }),
            ErrorCode::kGoalUnreachable);
}

TEST(Planner, ReachableMaskMatchesDijkstra) {
  std::mt19937_64 rng(3);
  const OccupancyGrid g = oracle::RandomBlockMap(rng, 25, 25, 0.1, 0.3);
  const std::vector<bool> mask = ReachableMask(g, g.CellCenter({12, 12}));
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(mask[i], oracle::DijkstraCost(g, {12, 12}, g.FromIndex(i)).has_value()) << i;
  }
}

TEST(Planner, DecimateCollinear) {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {2, 0}, {3, 1}, {4, 2}, {4, 3}};
  EXPECT_EQ(DecimateCollinear(pts),
            (std::vector<Point2>{{0, 0}, {2, 0}, {4, 2}, {4, 3}}));
}

Path StraightPath(Point2 a, Point2 b) {
  Path p;
  p.waypoints = {a, b};
  p.total_length = Distance(a, b);
  return p;
}

TEST(Follower, AtGoalStops) {
  const FollowerParams fp;
  const FollowCommand c = FollowPath({5.0, 0.05, 0.0}, StraightPath({0, 0}, {5, 0}), fp);
  EXPECT_TRUE(c.reached);
  EXPECT_EQ(c.twist, Twist{});
}

TEST(Follower, AheadFarGoalFullSpeed) {
  const FollowerParams fp;
  const FollowCommand c = FollowPath({0, 0, 0}, StraightPath({0, 0}, {5, 0}), fp);
  EXPECT_FALSE(c.reached);
  EXPECT_EQ(c.twist.v, fp.limits.v_max);
  EXPECT_NEAR(c.twist.w, 0.0, 1e-12);
}

TEST(Follower, SidewaysRotatesInPlace) {
  const FollowerParams fp;
  const FollowCommand c = FollowPath({0, 0, 0}, StraightPath({0, 0}, {0, 5}), fp);
  EXPECT_EQ(c.twist.v, 0.0);
  EXPECT_GT(c.twist.w, 0.0);
  EXPECT_EQ(c.twist.w, fp.limits.w_max);
}

TEST(Follower, ControlLaw) {
  const FollowerParams fp;
  const Twist t = RotateThenDrive(0.5, 0.4, fp);
  EXPECT_NEAR(t.v, fp.k_v * 0.4, 1e-12);
  EXPECT_NEAR(t.w, fp.k_w * 0.5, 1e-12);
  const Twist r = RotateThenDrive(-1.0, 3.0, fp);
  EXPECT_EQ(r.v, 0.0);
  EXPECT_EQ(r.w, -fp.limits.w_max);
}

TEST(Follower, EmptyPathRejected) {
  EXPECT_EQ(CodeOf([] { FollowPath({}, Path{}, FollowerParams{}); }),
            ErrorCode::kInvalidArgument);
}

TEST(DriveToPoint, Examples) {
  const FollowerParams fp;
  const FollowCommand here = DriveToPoint({0, 0}, fp);
  EXPECT_EQ(here.twist, Twist{});
  EXPECT_TRUE(here.reached);
  const FollowCommand ahead = DriveToPoint({1, 0}, fp);
  EXPECT_GT(ahead.twist.v, 0.0);
  EXPECT_NEAR(ahead.twist.w, 0.0, 1e-12);
  const FollowCommand left = DriveToPoint({0, 1}, fp);
  EXPECT_EQ(left.twist.v, 0.0);
  EXPECT_GT(left.twist.w, 0.0);
  EXPECT_EQ(CodeOf([&] { DriveToPoint({fp.manual_range + 0.1, 0}, fp); }),
            ErrorCode::kTargetOutOfRange);
}

SimConfig QuietConfig() {
  SimConfig c;
  c.lidar.noise_sigma = 0.0;
  c.lidar_every = 1;
  return c;
}

TEST(Autonomy, SameLevelIsSingleAck) {
  Simulator sim(OccupancyGrid(100, 100, 0.05), QuietConfig(), {2.5, 2.5, 0.0});
  sim.CommandAutonomy(AutonomyLevel::kManual);
  const StepEvents e = sim.Step();
  EXPECT_EQ(e.mode_acks, std::vector<AutonomyLevel>{AutonomyLevel::kManual});
  EXPECT_EQ(sim.state().autonomy, AutonomyLevel::kManual);
  EXPECT_TRUE(sim.Step().mode_acks.empty());
}

TEST(Autonomy, LeavingAutonomousCancelsPath) {
  Simulator sim(OccupancyGrid(100, 100, 0.05), QuietConfig(), {1.0, 2.5, 0.0},
                AutonomyLevel::kAutonomous);
  sim.CommandGoal({4.0, 2.5});
  for (int i = 0; i < 10; ++i) sim.Step();
  ASSERT_TRUE(sim.active_path().has_value());
  ASSERT_GT(sim.state().twist.v, 0.0);
  sim.CommandAutonomy(AutonomyLevel::kManual);
  const StepEvents e = sim.Step();
  EXPECT_TRUE(e.goal_changed);
  EXPECT_FALSE(sim.active_path().has_value());
  EXPECT_EQ(sim.state().twist, Twist{});
  EXPECT_EQ(sim.goal_status().state, GoalState::kCancelled);
}

TEST(Autonomy, AssistedDecelStopsAtWall) {
  OccupancyGrid g(100, 100, 0.05);
  g.FillRect({3.0, 0.0}, {3.05, 5.0}, Occupancy::kOccupied);
  Simulator sim(g, QuietConfig(), {2.67, 2.5, 0.0});
  sim.CommandAutonomy(AutonomyLevel::kAssistedDecel);
  sim.Step();
  sim.CommandVelocity({0.5, 0.0});
  sim.Step();
  EXPECT_EQ(sim.state().twist.v, 0.0);
  EXPECT_EQ(sim.state().pose.x, 2.67);
}

TEST(Autonomy, ManualDrivesIntoTheWall) {
  OccupancyGrid g(100, 100, 0.05);
  g.FillRect({3.0, 0.0}, {3.05, 5.0}, Occupancy::kOccupied);
  Simulator sim(g, QuietConfig(), {2.67, 2.5, 0.0});
  sim.CommandVelocity({0.5, 0.0});
  bool collided = false;
  for (int i = 0; i < 20 && !collided; ++i) collided = sim.Step().collision;
  EXPECT_TRUE(collided);
  EXPECT_FALSE(CheckCollision(g, sim.state().pose, sim.state().footprint));
}

TEST(Autonomy, GoalOutsideAutonomousFails) {
  Simulator sim(OccupancyGrid(100, 100, 0.05), QuietConfig(), {2.5, 2.5, 0.0});
  sim.CommandGoal({1.0, 1.0});
  sim.Step();
  EXPECT_EQ(sim.goal_status().state, GoalState::kFailed);
}

TEST(Autonomy, ClosedLoopReachesGoal) {
  const OccupancyGrid g = oracle::TwoRoomMap();
  Simulator sim(g, QuietConfig(), {2.0, 2.0, 0.0}, AutonomyLevel::kAutonomous);
  sim.CommandGoal({6.0, 2.0}, kPi / 2);
  bool collided = false;
  for (int i = 0; i < 4000 && sim.goal_status().state != GoalState::kReached; ++i) {
    collided = collided || sim.Step().collision;
  }
  EXPECT_FALSE(collided);
  ASSERT_EQ(sim.goal_status().state, GoalState::kReached);
  EXPECT_LT(Distance(sim.state().pose.position(), {6.0, 2.0}), 0.1 + 1e-9);
  EXPECT_LT(std::abs(NormalizeAngle(sim.state().pose.theta - kPi / 2)), 0.03 + 1e-9);
}

TEST(Autonomy, ClickToDrive) {
  Simulator sim(OccupancyGrid(100, 100, 0.05), QuietConfig(), {2.5, 2.5, 0.0});
  sim.CommandManualTarget({0.0, 1.0});
  sim.Step();
  EXPECT_EQ(sim.state().twist.v, 0.0);
  EXPECT_GT(sim.state().twist.w, 0.0);
  for (int i = 0; i < 400 && sim.has_manual_target(); ++i) sim.Step();
  EXPECT_FALSE(sim.has_manual_target());
  EXPECT_LT(Distance(sim.state().pose.position(), {2.5, 3.5}), 0.1 + 1e-9);
  sim.CommandManualTarget({5.0, 0.0});
  const StepEvents e = sim.Step();
  EXPECT_EQ(e.command_errors, std::vector<std::string>{"TargetOutOfRange"});
}

}  // namespace
}  // namespace uvbot
