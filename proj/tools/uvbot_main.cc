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

// uvbot: headless scenario runner, relay server with a simulated robot, and
// disinfection pose planner.
//
//   uvbot run <scenario.yaml> --out <dir>
//   uvbot serve --port 8080 --map maps/two_rooms.yaml --id uvbot
//   uvbot plan --map maps/two_rooms.yaml --targets targets.yaml [--execute]
//
// Exit codes: 0 ok, 1 I/O or internal error, 2 usage or configuration
// error, 3 collision, 4 planner failure (including an uncoverable target).
// UVBOT_LOG_LEVEL selects log verbosity (trace, debug, info, warn, error,
// off).

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "uvbot/common/error.h"
#include "uvbot/disinfection/pose_planner.h"
#include "uvbot/disinfection/target.h"
#include "uvbot/protocol/messages.h"
#include "uvbot/protocol/robot_session.h"
#include "uvbot/protocol/ws_server.h"
#include "uvbot/robot/collision.h"
#include "uvbot/sim/scenario.h"
#include "uvbot/world/map_io.h"

namespace uvbot::cli {
namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPlanner = 4;

std::atomic<bool> g_stop{false};

void OnSignal(int) { g_stop = true; }

void SetupLogging() {
  auto logger = spdlog::stderr_color_mt("uvbot");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%H:%M:%S.%e] [%^%l%$] %v");
  spdlog::set_level(spdlog::level::info);
  if (const char* env = std::getenv("UVBOT_LOG_LEVEL")) {
    const auto level = spdlog::level::from_str(env);
    // from_str maps unrecognised names to off; only accept real names.
    if (level != spdlog::level::off || std::string_view(env) == "off") {
      spdlog::set_level(level);
    } else {
      spdlog::warn("ignoring unknown UVBOT_LOG_LEVEL '{}'", env);
    }
  }
}

int ExitForError(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kIoError:
      return kExitIo;
    case ErrorCode::kNoReachablePose:
    case ErrorCode::kGoalUnreachable:
    case ErrorCode::kGoalOccupied:
    case ErrorCode::kStartOccupied:
      return kExitPlanner;
    case ErrorCode::kCollision:
      return ExitCodeFor(RunStatus::kCollision);
    default:
      return kExitConfig;
  }
}

int ReportError(const Error& e) {
  std::cerr << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
  return ExitForError(e);
}

std::optional<Pose2D> PoseFromValues(const std::vector<double>& v) {
  if (v.empty()) return std::nullopt;
  return MakePose(v[0], v[1], v.size() > 2 ? v[2] : 0.0);
}

// First collision-free cell center scanning outward from the map center.
Pose2D DefaultStart(const OccupancyGrid& grid, const Footprint& footprint) {
  const CellIndex mid{grid.width() / 2, grid.height() / 2};
  std::optional<CellIndex> best;
  long best_d = 0;
  for (int row = 0; row < grid.height(); ++row) {
    for (int col = 0; col < grid.width(); ++col) {
      const long dc = col - mid.col;
      const long dr = row - mid.row;
      const long d = dc * dc + dr * dr;
      if (best && d >= best_d) continue;
      const Point2 c = grid.CellCenter({col, row});
      if (CheckCollision(grid, {c.x, c.y, 0.0}, footprint)) continue;
      best = CellIndex{col, row};
      best_d = d;
    }
  }
  if (!best) throw Error(ErrorCode::kConfigError, "map has no room for the robot");
  const Point2 c = grid.CellCenter(*best);
  return {c.x, c.y, 0.0};
}

void CheckStart(const OccupancyGrid& grid, const Pose2D& start, const Footprint& footprint) {
  if (!grid.Contains(start.position())) {
    throw Error(ErrorCode::kConfigError, "start pose is off the map");
  }
  if (CheckCollision(grid, start, footprint)) {
    throw Error(ErrorCode::kConfigError, "start pose collides with the map");
  }
}

// ---------------------------------------------------------------------------
// run

struct RunArgs {
  std::string scenario;
  std::string out;
};

int Run(const RunArgs& args) {
  Scenario scenario;
  try {
    scenario = LoadScenario(args.scenario);
  } catch (const Error& e) {
    return ReportError(e);
  }
  spdlog::info("running {} (seed {})", args.scenario, scenario.config.seed);
  const auto t0 = std::chrono::steady_clock::now();
  const RunReport report = RunScenario(scenario);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  try {
    WriteRunArtifacts(report, scenario, args.out);
  } catch (const Error& e) {
    return ReportError(e);
  }
  std::cout << "status: " << RunStatusName(report.status) << "\n";
  if (!report.message.empty()) std::cout << "message: " << report.message << "\n";
  std::cout << "sim_time_s: " << report.sim_time << "\n";
  std::cout << "battery_wh: " << report.final_state.battery_wh << "\n";
  if (report.coverage) {
    std::cout << "covered_fraction: " << report.coverage->covered_fraction << "\n";
    std::cout << "coverable_covered_fraction: " << report.coverage->coverable_covered_fraction
              << "\n";
  }
  if (!report.uncoverable.empty()) {
    std::cout << "uncoverable:";
    for (const CellIndex& c : report.uncoverable) std::cout << " (" << c.col << "," << c.row << ")";
    std::cout << "\n";
  }
  std::cout << "artifacts: " << fs::path(args.out).string() << "\n";
  spdlog::info("finished in {:.2f} s wall, {:.1f} s simulated", wall, report.sim_time);
  return report.exit_code();
}

// ---------------------------------------------------------------------------
// serve

struct ServeArgs {
  std::string address = "127.0.0.1";
  int port = 8080;
  std::string map;
  std::string id = "uvbot";
  std::string targets;
  std::vector<double> start;
  double duration = 0.0;
  std::uint64_t seed = 0;
};

int Serve(const ServeArgs& args) {
  if (!protocol::IsValidPeerId(args.id)) {
    std::cerr << "error: robot id must be 1-64 characters from [A-Za-z0-9_-]\n";
    return kExitConfig;
  }
  OccupancyGrid grid;
  SimConfig config;
  config.seed = args.seed;
  Pose2D start;
  protocol::RobotSessionOptions robot_options;
  robot_options.id = args.id;
  try {
    grid = LoadMap(args.map);
    if (!args.targets.empty()) {
      robot_options.dose_target = LoadTarget(args.targets, grid);
      robot_options.dose_target->Validate();
    }
    start = PoseFromValues(args.start).value_or(DefaultStart(grid, config.footprint));
    CheckStart(grid, start, config.footprint);
  } catch (const Error& e) {
    return ReportError(e);
  }

  protocol::ServerOptions server_options;
  server_options.address = args.address;
  server_options.port = static_cast<std::uint16_t>(args.port);
  const std::string map_json = protocol::GridToJson(grid).dump();
  server_options.map_json = [map_json] { return map_json; };
  protocol::RelayServer server(server_options);
  try {
    server.Start();
  } catch (const Error& e) {
    return ReportError(e);
  }
  std::cout << "listening on " << args.address << ":" << server.port() << std::endl;
  spdlog::info("robot '{}' at ({:.2f}, {:.2f}, {:.2f})", args.id, start.x, start.y, start.theta);

  // Frames for the robot are queued here: the hub hands them over while
  // holding its lock, so they must be processed outside the callback.
  std::mutex inbox_mu;
  std::deque<std::string> inbox;
  protocol::RelayHub& hub = server.hub();
  const protocol::ConnId robot_conn = hub.Open(protocol::Role::kRobot, [&](std::string_view f) {
    std::lock_guard lock(inbox_mu);
    inbox.emplace_back(f);
  });
  protocol::RobotSession robot(grid, config, start, robot_options, [&](std::string_view f) {
    hub.HandleFrame(robot_conn, f, server.Now());
  });
  robot.Start();

  std::signal(SIGINT, OnSignal);
  std::signal(SIGTERM, OnSignal);
  const auto period = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(config.tick));
  const auto begin = std::chrono::steady_clock::now();
  auto next = begin;
  bool was_paired = false;
  while (!g_stop) {
    std::deque<std::string> frames;
    {
      std::lock_guard lock(inbox_mu);
      frames.swap(inbox);
    }
    for (const std::string& f : frames) robot.HandleFrame(f);
    robot.Step();
    if (robot.paired() != was_paired) {
      was_paired = robot.paired();
      spdlog::info("client {}", was_paired ? "paired" : "detached");
    }
    if (args.duration > 0.0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count() >=
            args.duration) {
      break;
    }
    next += period;
    std::this_thread::sleep_until(next);
  }
  hub.Close(robot_conn, server.Now());
  server.Stop();
  spdlog::info("stopped after {:.1f} s simulated", robot.sim().time());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// plan

struct PlanArgs {
  std::string map;
  std::string targets;
  std::vector<double> start;
  bool execute = false;
  std::string out = "plan_out";
  double spacing = 0.25;
  int headings = 8;
  double overhead = 30.0;
};

void PrintPlan(const DisinfectionPlan& plan, const DisinfectionTarget& target) {
  std::printf("%-4s %9s %9s %8s %10s %9s\n", "pose", "x_m", "y_m", "theta", "dwell_s",
              "completes");
  for (std::size_t i = 0; i < plan.poses.size(); ++i) {
    const PlannedPose& p = plan.poses[i];
    std::printf("%-4zu %9.3f %9.3f %8.3f %10.2f %9zu\n", i, p.pose.x, p.pose.y, p.pose.theta,
                p.dwell_s, p.completes.size());
  }
  std::printf("total_dwell_s: %.2f over %zu poses for %zu target cells at %.1f J/m^2\n",
              plan.total_dwell_s, plan.poses.size(), target.cells.size(), target.required_dose);
  if (!plan.uncoverable.empty()) {
    std::printf("uncoverable: %zu cells:", plan.uncoverable.size());
    for (const CellIndex& c : plan.uncoverable) std::printf(" (%d,%d)", c.col, c.row);
    std::printf("\n");
  }
}

int Plan(const PlanArgs& args) {
  Scenario scenario;
  try {
    scenario.grid = LoadMap(args.map);
    DisinfectionTarget target = LoadTarget(args.targets, scenario.grid);
    if (target.cells.empty()) {
      std::cerr << "error: target set is empty\n";
      return kExitConfig;
    }
    target.Validate();
    scenario.target = std::move(target);
  } catch (const Error& e) {
    return ReportError(e);
  }
  scenario.planner.candidate_spacing = args.spacing;
  scenario.planner.headings = args.headings;
  scenario.planner.pose_overhead_s = args.overhead;
  scenario.planner.robot_radius = scenario.config.robot_radius;
  scenario.planner.footprint = scenario.config.footprint;
  scenario.planner.cutoff = scenario.config.dose_cutoff;

  const std::optional<Pose2D> start = PoseFromValues(args.start);
  if (args.execute && !start) {
    std::cerr << "error: --execute needs --start x,y[,theta]\n";
    return kExitConfig;
  }
  try {
    if (start) {
      CheckStart(scenario.grid, *start, scenario.config.footprint);
      scenario.start = *start;
    }
  } catch (const Error& e) {
    return ReportError(e);
  }

  PosePlannerOptions options = scenario.planner;
  if (start) options.reachable_from = start->position();
  DisinfectionPlan plan;
  try {
    plan = PlanDisinfectionPoses(scenario.grid, *scenario.target, scenario.config.lamps, options);
  } catch (const Error& e) {
    return ReportError(e);
  }
  PrintPlan(plan, *scenario.target);
  if (plan.poses.empty()) {
    std::cerr << "error: no pose can reach the target\n";
    return kExitPlanner;
  }
  if (!args.execute) return kExitOk;

  scenario.script.push_back({std::nullopt, step::Disinfect{}, 0});
  const RunReport report = RunScenario(scenario);
  try {
    WriteRunArtifacts(report, scenario, args.out);
  } catch (const Error& e) {
    return ReportError(e);
  }
  std::printf("status: %s\n", std::string(RunStatusName(report.status)).c_str());
  if (!report.message.empty()) std::printf("message: %s\n", report.message.c_str());
  if (report.coverage) {
    std::printf("covered_fraction: %.6f\ncoverable_covered_fraction: %.6f\n",
                report.coverage->covered_fraction, report.coverage->coverable_covered_fraction);
  }
  std::printf("sim_time_s: %.2f\nartifacts: %s\n", report.sim_time, args.out.c_str());
  return report.exit_code();
}

}  // namespace

int Main(int argc, char** argv) {
  SetupLogging();
  CLI::App app{"uvbot: UVC disinfection robot simulator, relay and planner"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "Run a scripted scenario headless");
  run->add_option("scenario", run_args.scenario, "Scenario YAML file")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--out", run_args.out, "Output directory for artifacts")->required();

  ServeArgs serve_args;
  CLI::App* serve = app.add_subcommand("serve", "Start the relay with one simulated robot");
  serve->add_option("--address", serve_args.address, "Listen address")->capture_default_str();
  serve->add_option("--port", serve_args.port, "Listen port (0 picks a free one)")
      ->capture_default_str()
      ->check(CLI::Range(0, 65535));
  serve->add_option("--map", serve_args.map, "Map metadata YAML")
      ->required()
      ->check(CLI::ExistingFile);
  serve->add_option("--id", serve_args.id, "Robot peer id")->capture_default_str();
  serve->add_option("--targets", serve_args.targets, "Targets reported on /telemetry/dose")
      ->check(CLI::ExistingFile);
  serve->add_option("--start", serve_args.start, "Start pose x,y[,theta]")
      ->delimiter(',')
      ->expected(2, 3);
  serve->add_option("--seed", serve_args.seed, "Lidar noise seed")->capture_default_str();
  serve->add_option("--duration", serve_args.duration, "Stop after this many seconds (0: run until signalled)")
      ->check(CLI::NonNegativeNumber);

  PlanArgs plan_args;
  CLI::App* plan = app.add_subcommand("plan", "Plan disinfection dwell poses");
  plan->add_option("--map", plan_args.map, "Map metadata YAML")
      ->required()
      ->check(CLI::ExistingFile);
  plan->add_option("--targets", plan_args.targets, "Target YAML")
      ->required()
      ->check(CLI::ExistingFile);
  plan->add_option("--start", plan_args.start, "Robot start pose x,y[,theta]")
      ->delimiter(',')
      ->expected(2, 3);
  plan->add_flag("--execute", plan_args.execute, "Execute the plan in simulation");
  plan->add_option("--out", plan_args.out, "Artifact directory for --execute")
      ->capture_default_str();
  plan->add_option("--spacing", plan_args.spacing, "Candidate lattice spacing (m)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  plan->add_option("--headings", plan_args.headings, "Candidate headings per position")
      ->capture_default_str()
      ->check(CLI::Range(1, 64));
  plan->add_option("--overhead", plan_args.overhead, "Per-pose overhead in the greedy score (s)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) return Run(run_args);
    if (*serve) return Serve(serve_args);
    if (*plan) return Plan(plan_args);
  } catch (const Error& e) {
    return ReportError(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitConfig;
}

}  // namespace uvbot::cli

int main(int argc, char** argv) { return uvbot::cli::Main(argc, argv); }
