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

// Scripted headless runs.
//
// A scenario file looks like:
//
//   map: maps/two_rooms.yaml      # map metadata, relative to this file
//   seed: 7
//   start: {x: 1.0, y: 1.0, theta: 0.0}
//   autonomy: Manual
//   robot: {v_max: 1.0, w_max: 1.5, radius: 0.5, battery_wh: 120, base_power: 40}
//   lamps: {count: 4, uvc_power: 4.5, electrical_power: 16.7, arc_radius: 0.15}
//   lidar: {beams: 360, range_max: 10, noise_sigma: 0.01}
//   assist: {d_stop: 0.35, d_slow: 1.0, cone_half_angle: 0.5236, d_influence: 1.2, k_steer: 0.8}
//   planner: {spacing: 0.25, headings: 8, pose_overhead: 30}
//   targets: {required_dose: 100, points: [[2.0, 1.0]]}   # or a file name
//   script:
//     - lamp: true
//     - wait: 279.25
//     - at: 300                  # optional absolute start time
//       vel: {v: 0.5, w: 0.0, duration: 2.0}
//     - autonomy: Autonomous
//     - goal: {x: 4.0, y: 1.0, theta: 0.0, timeout: 60}
//     - drive_target: {x: 1.0, y: 0.0, timeout: 20}
//     - disinfect: {}
//
// The run is a pure function of the scenario: same file and seed, same
// trace.

#ifndef UVBOT_SIM_SCENARIO_H_
#define UVBOT_SIM_SCENARIO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "uvbot/disinfection/coverage.h"
#include "uvbot/disinfection/pose_planner.h"
#include "uvbot/disinfection/target.h"
#include "uvbot/sim/simulator.h"

namespace uvbot {

namespace step {
struct Wait { double duration = 0.0; };
struct Lamp { bool on = false; };
struct Autonomy { AutonomyLevel level = AutonomyLevel::kManual; };
// Holds an operator velocity for `duration`, then stops.
struct Velocity { Twist cmd; double duration = 0.0; };
// Click-to-drive toward a robot-frame point until it is reached.
struct DriveTarget { Point2 target; double timeout = 60.0; };
struct Goal { Point2 goal; std::optional<double> theta; double timeout = 600.0; };
// Plans dwell poses for the scenario targets and executes them.
struct Disinfect { double goal_timeout = 600.0; int max_topup_rounds = 3; };
}  // namespace step

using ScriptAction = std::variant<step::Wait, step::Lamp, step::Autonomy, step::Velocity,
                                  step::DriveTarget, step::Goal, step::Disinfect>;

struct ScriptStep {
  // Absolute simulation time to wait for before the action, if any.
  std::optional<double> at;
  ScriptAction action;
  // 1-based source line, 0 when built in code.
  int line = 0;
};

struct Scenario {
  OccupancyGrid grid{1, 1, 1.0};
  SimConfig config{};
  Pose2D start{};
  AutonomyLevel autonomy = AutonomyLevel::kManual;
  std::optional<DisinfectionTarget> target;
  PosePlannerOptions planner{};
  std::vector<ScriptStep> script;
};

// Throws Error(kConfigError) with a line number for malformed input; map and
// target loading errors propagate with their own codes. Relative paths are
// resolved against `base_dir`.
Scenario ParseScenario(const std::string& yaml_text, const std::filesystem::path& base_dir);
Scenario LoadScenario(const std::filesystem::path& path);

enum class RunStatus { kOk, kCollision, kPlannerError, kScriptError };

// Process exit code: 0 ok, 2 script/config error, 3 collision, 4 planner.
int ExitCodeFor(RunStatus status);
std::string_view RunStatusName(RunStatus status);

struct TraceRow {
  double t = 0.0;
  Pose2D pose{};
  Twist twist{};
  AutonomyLevel mode = AutonomyLevel::kManual;
  bool lamp = false;
};

struct ExecutedPose {
  int round = 0;
  PlannedPose planned;
  Pose2D actual{};
  double dwell_s = 0.0;
};

struct RunReport {
  RunStatus status = RunStatus::kOk;
  std::string message;
  double sim_time = 0.0;
  RobotState final_state{};
  std::optional<double> battery_depleted_at;
  std::vector<TraceRow> trace;
  DoseGrid dose;
  std::optional<CoverageReport> coverage;
  // Uncoverable cells and per-pose execution record of `disinfect` steps.
  std::vector<CellIndex> uncoverable;
  std::vector<ExecutedPose> executed;
  int exit_code() const { return ExitCodeFor(status); }
};

struct RunOptions {
  // Keep one trace row per tick (plus the initial state).
  bool record_trace = true;
};

RunReport RunScenario(const Scenario& scenario, const RunOptions& options = {});

// Writes trace.csv, dose.pgm, coverage.json and summary.json into `out_dir`
// (created if missing). The heatmap is scaled to the target's required dose,
// or to the peak dose when there is no target.
void WriteRunArtifacts(const RunReport& report, const Scenario& scenario,
                       const std::filesystem::path& out_dir);

std::string TraceCsv(const std::vector<TraceRow>& trace);

}  // namespace uvbot

#endif  // UVBOT_SIM_SCENARIO_H_
