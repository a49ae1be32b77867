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
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "oracles.h"
#include "uvbot/common/error.h"
#include "uvbot/disinfection/irradiance.h"
#include "uvbot/sim/scenario.h"
#include "uvbot/sim/simulator.h"
#include "uvbot/world/map_io.h"

namespace uvbot {
namespace {

const std::filesystem::path kScenarios = std::filesystem::path(UVBOT_SOURCE_DIR) / "scenarios";

// Parses `body` and returns the error message, or "" if it parsed.
std::string ParseError(const std::string& body, ErrorCode want = ErrorCode::kConfigError) {
  try {
    ParseScenario(body, kScenarios);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), want) << e.what();
    return e.what();
  }
  return "";
}

constexpr const char* kOpenRoom =
    "map: {width: 4.0, height: 4.0, resolution: 0.1}\n"
    "start: [2.0, 2.0]\n";

TEST(Scenario, EmptyScriptFinishesImmediately) {
  const RunReport r = RunScenario(ParseScenario(kOpenRoom, kScenarios));
  EXPECT_EQ(r.status, RunStatus::kOk);
  EXPECT_EQ(r.sim_time, 0.0);
  for (const double d : r.dose.values()) EXPECT_EQ(d, 0.0);
  EXPECT_EQ(r.trace.size(), 1u);
}

TEST(Scenario, WallDwellDeliversRequestedDose) {
  const Scenario sc = LoadScenario(kScenarios / "wall_dwell.yaml");
  const RunReport r = RunScenario(sc);
  ASSERT_EQ(r.status, RunStatus::kOk) << r.message;
  const CellIndex wall{20, 20};
  ASSERT_EQ(sc.grid.at(wall), Occupancy::kOccupied);
  ASSERT_NEAR(Distance(sc.start.position(), sc.grid.CellCenter(wall)), 1.0, 1e-12);
  EXPECT_NEAR(r.dose.at(wall), 100.0, 1.0);
  EXPECT_EQ(r.dose.at({21, 20}), 0.0);
  EXPECT_FALSE(r.final_state.lamp_on);
}

TEST(Scenario, SameSeedSameTrace) {
  const Scenario sc = LoadScenario(kScenarios / "assisted_approach.yaml");
  const RunReport a = RunScenario(sc);
  const RunReport b = RunScenario(sc);
  EXPECT_EQ(TraceCsv(a.trace), TraceCsv(b.trace));
  EXPECT_EQ(a.dose, b.dose);
}

TEST(Scenario, AssistStopsShortOfWall) {
  const Scenario sc = LoadScenario(kScenarios / "assisted_approach.yaml");
  const RunReport r = RunScenario(sc);
  ASSERT_EQ(r.status, RunStatus::kOk) << r.message;
  const double gap = 4.0 - r.final_state.pose.x;
  EXPECT_LE(gap, sc.config.assist.d_stop + 0.05);
  EXPECT_GT(gap, 0.5 * sc.config.footprint.length);
}

TEST(Scenario, ManualDriveIntoWallIsCollision) {
  const Scenario sc = ParseScenario(std::string(kOpenRoom) +
                                        "script:\n"
                                        "  - vel: {v: 1.0, duration: 10}\n",
                                    kScenarios);
  const RunReport r = RunScenario(sc);
  EXPECT_EQ(r.status, RunStatus::kCollision);
  EXPECT_EQ(r.exit_code(), 3);
}

TEST(Scenario, GoalOutsideAutonomousIsScriptError) {
  const RunReport r = RunScenario(ParseScenario(std::string(kOpenRoom) +
                                                    "script:\n"
                                                    "  - goal: {x: 1, y: 1}\n",
                                                kScenarios));
  EXPECT_EQ(r.status, RunStatus::kScriptError);
  EXPECT_EQ(r.exit_code(), 2);
  EXPECT_NE(r.message.find("line 4"), std::string::npos) << r.message;
}

TEST(Scenario, ClosetOnlyTargetIsUncoverable) {
  const RunReport r = RunScenario(ParseScenario(
      "map: maps/two_rooms.yaml\nstart: [2, 2]\ntargets: targets/closet.yaml\n"
      "script:\n  - disinfect:\n",
      kScenarios));
  EXPECT_EQ(r.status, RunStatus::kOk) << r.message;
  EXPECT_EQ(r.uncoverable, std::vector<CellIndex>{oracle::TwoRoomClosetCell()});
  EXPECT_TRUE(r.executed.empty());
}

TEST(Scenario, TwoRoomMapFileMatchesFixture) {
  EXPECT_EQ(LoadMap(kScenarios / "maps" / "two_rooms.yaml"), oracle::TwoRoomMap());
}

TEST(Scenario, TwoRoomFileMatchesAcceptanceSetup) {
  const Scenario sc = LoadScenario(kScenarios / "two_rooms.yaml");
  ASSERT_TRUE(sc.target.has_value());
  EXPECT_EQ(sc.target->cells.size(), 23u);
  EXPECT_EQ(sc.target->required_dose, 50.0);
  const RunReport r = RunScenario(sc);
  ASSERT_EQ(r.status, RunStatus::kOk) << r.message;
  ASSERT_TRUE(r.coverage.has_value());
  EXPECT_EQ(r.coverage->coverable_covered_fraction, 1.0);
  EXPECT_EQ(r.dose.at(oracle::TwoRoomClosetCell()), 0.0);
}

TEST(Scenario, BatteryEmptiesAfterThreeHours) {
  const RunReport r = RunScenario(LoadScenario(kScenarios / "battery.yaml"), {false});
  ASSERT_TRUE(r.battery_depleted_at.has_value());
  EXPECT_NEAR(*r.battery_depleted_at, 3 * 3600.0, 0.05 + 1e-9);
}

TEST(Scenario, ArtifactsWritten) {
  const Scenario sc = LoadScenario(kScenarios / "wall_dwell.yaml");
  const RunReport r = RunScenario(sc);
  const auto dir = std::filesystem::temp_directory_path() / "uvbot_sim_test_artifacts";
  std::filesystem::remove_all(dir);
  WriteRunArtifacts(r, sc, dir);
  for (const char* f : {"trace.csv", "dose.pgm", "coverage.json", "summary.json"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  std::ifstream in(dir / "summary.json");
  const nlohmann::json summary = nlohmann::json::parse(in);
  EXPECT_EQ(summary["status"], "ok");
  EXPECT_EQ(summary["exit_code"], 0);
  const GrayImage heat = ReadPgmFile(dir / "dose.pgm");
  EXPECT_EQ(heat.width, sc.grid.width());
  std::ifstream trace(dir / "trace.csv");
  std::string header;
  std::getline(trace, header);
  EXPECT_EQ(header, "t,x,y,theta,v,w,mode,lamp");
  std::filesystem::remove_all(dir);
}

TEST(Scenario, ExitCodes) {
  EXPECT_EQ(ExitCodeFor(RunStatus::kOk), 0);
  EXPECT_EQ(ExitCodeFor(RunStatus::kScriptError), 2);
  EXPECT_EQ(ExitCodeFor(RunStatus::kCollision), 3);
  EXPECT_EQ(ExitCodeFor(RunStatus::kPlannerError), 4);
}

TEST(ScenarioParse, ErrorsCarryLineNumbers) {
  EXPECT_NE(ParseError(std::string(kOpenRoom) + "bogus: 1\n").find("line 3"), std::string::npos);
  EXPECT_NE(ParseError(std::string(kOpenRoom) + "script:\n  - wait: -1\n").find("line 4"),
            std::string::npos);
  EXPECT_NE(ParseError(std::string(kOpenRoom) + "script:\n  - fly: 1\n").find("line 4"),
            std::string::npos);
  EXPECT_NE(ParseError(std::string(kOpenRoom) + "script:\n  - {wait: 1, lamp: true}\n")
                .find("line 4"),
            std::string::npos);
  EXPECT_NE(ParseError(std::string(kOpenRoom) + "autonomy: Turbo\n").find("line 3"),
            std::string::npos);
}

TEST(ScenarioParse, Rejections) {
  EXPECT_FALSE(ParseError("start: [1, 1]\n").empty());
  EXPECT_FALSE(ParseError("map: {width: 4, height: 4, resolution: 0.1}\n").empty());
  EXPECT_FALSE(ParseError("map: {width: 4, height: 4, resolution: 0.1}\nstart: [9, 9]\n").empty());
  EXPECT_FALSE(ParseError("map: {width: 4, height: 4, resolution: 0.1, border: true}\n"
                          "start: [0.1, 0.1]\n")
                   .empty());
  EXPECT_FALSE(ParseError(std::string(kOpenRoom) + "script:\n  - {at: 5, wait: 1}\n"
                                                   "  - {at: 2, wait: 1}\n")
                   .empty());
  EXPECT_FALSE(ParseError(std::string(kOpenRoom) + "targets: targets/empty.yaml\n").empty());
  EXPECT_FALSE(ParseError(std::string(kOpenRoom) + "lamps: {count: 0}\n").empty());
  EXPECT_FALSE(ParseError("[1, 2").empty());
  EXPECT_FALSE(ParseError("").empty());
  ParseError("map: missing.yaml\nstart: [1, 1]\n", ErrorCode::kIoError);
}

TEST(ScenarioParse, Options) {
  const Scenario sc = ParseScenario(std::string(kOpenRoom) +
                                        "seed: 7\ntick: 0.02\nautonomy: AssistedSteer\n"
                                        "robot: {v_max: 0.5}\nlamps: {count: 2}\n"
                                        "lidar: {beams: 90, noise_sigma: 0}\n"
                                        "planner: {spacing: 0.5, headings: 4}\n"
                                        "script:\n  - {at: 1.5, lamp: true}\n"
                                        "  - drive_target: {x: 1, y: 0}\n",
                                    kScenarios);
  EXPECT_EQ(sc.config.seed, 7u);
  EXPECT_EQ(sc.config.tick, 0.02);
  EXPECT_EQ(sc.autonomy, AutonomyLevel::kAssistedSteer);
  EXPECT_EQ(sc.config.limits.v_max, 0.5);
  EXPECT_EQ(sc.config.lamps.count, 2);
  EXPECT_DOUBLE_EQ(sc.config.battery.lamp_power_w, 2 * 16.7);
  EXPECT_EQ(sc.config.lidar.beam_count, 90);
  EXPECT_EQ(sc.planner.headings, 4);
  ASSERT_EQ(sc.script.size(), 2u);
  EXPECT_EQ(sc.script[0].at, 1.5);
  EXPECT_EQ(sc.script[0].line, 11);
  EXPECT_TRUE(std::holds_alternative<step::DriveTarget>(sc.script[1].action));
}

TEST(Simulator, LinkLossDarkensAndStops) {
  SimConfig cfg;
  cfg.lidar.noise_sigma = 0.0;
  Simulator sim(OccupancyGrid(100, 100, 0.05), cfg, {2.5, 2.5, 0.0});
  sim.CommandLamp(true);
  sim.CommandVelocity({0.0, 0.5});
  sim.Step();
  ASSERT_TRUE(sim.state().lamp_on);
  sim.SetLink(true, 3.5);
  sim.Step();
  EXPECT_FALSE(sim.state().lamp_on);
  EXPECT_EQ(sim.state().twist, Twist{});
  EXPECT_TRUE(sim.lamp_status().forced_off);
  sim.SetLink(true, 0.0);
  sim.Step();
  EXPECT_FALSE(sim.state().lamp_on);
  EXPECT_EQ(sim.state().twist, Twist{});
  sim.CommandLamp(true);
  sim.Step();
  EXPECT_TRUE(sim.state().lamp_on);
}

TEST(Simulator, QueuedCommandsDroppedOnLoss) {
  SimConfig cfg;
  cfg.lidar.noise_sigma = 0.0;
  Simulator sim(OccupancyGrid(100, 100, 0.05), cfg, {2.5, 2.5, 0.0});
  sim.CommandLamp(true);
  sim.CommandVelocity({0.3, 0.0});
  sim.OnLinkLost();
  sim.SetLink(true, 0.0);
  sim.Step();
  EXPECT_FALSE(sim.state().lamp_on);
  EXPECT_EQ(sim.state().twist, Twist{});
}

TEST(Simulator, RejectsCollidingStart) {
  OccupancyGrid g(40, 40, 0.1);
  g.set({20, 20}, Occupancy::kOccupied);
  EXPECT_THROW(Simulator(g, SimConfig{}, {2.05, 2.05, 0.0}), Error);
}

TEST(Simulator, StationaryDoseMatchesClosedForm) {
  OccupancyGrid g(40, 40, 0.1);
  SimConfig cfg;
  cfg.lamps.count = 1;
  cfg.lamps.arc_radius = 0.0;
  const Point2 c = g.CellCenter({10, 20});
  Simulator sim(g, cfg, {c.x, c.y, 0.0});
  sim.CommandLamp(true);
  sim.Step();  // the lamp turns on at this tick boundary
  for (int i = 0; i < 200; ++i) sim.Step();
  EXPECT_NEAR(sim.dose().at({20, 20}), 201 * 0.05 * oracle::PointSource(4.5, 1.0), 1e-9);
}

}  // namespace
}  // namespace uvbot
