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

#include "uvbot/sim/scenario.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "common/yaml_util.h"
#include "disinfection/target_yaml.h"
#include "uvbot/common/error.h"
#include "uvbot/robot/collision.h"
#include "uvbot/world/map_io.h"

namespace uvbot {
namespace {

using nlohmann::json;

void CheckKeys(const YAML::Node& node, std::initializer_list<std::string_view> allowed,
               const std::string& what) {
  if (!node.IsMap()) yaml::Fail(node, "'" + what + "' must be a mapping");
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      yaml::Fail(kv.first, "unknown key '" + key + "' in " + what);
    }
  }
}

double RequirePositive(const YAML::Node& parent, const std::string& key, double fallback) {
  const double v = yaml::Get<double>(parent, key, fallback);
  if (!(v > 0.0)) yaml::Fail(parent[key] ? parent[key] : parent, "'" + key + "' must be > 0");
  return v;
}

double RequireNonNegative(const YAML::Node& parent, const std::string& key, double fallback) {
  const double v = yaml::Get<double>(parent, key, fallback);
  if (!(v >= 0.0)) yaml::Fail(parent[key] ? parent[key] : parent, "'" + key + "' must be >= 0");
  return v;
}

AutonomyLevel ParseLevel(const YAML::Node& node) {
  const auto level = ParseAutonomyLevel(yaml::As<std::string>(node, "autonomy"));
  if (!level) {
    yaml::Fail(node, "autonomy must be Manual, AssistedDecel, AssistedSteer or Autonomous");
  }
  return *level;
}

// Inline map: {width, height, resolution, origin: [x, y], obstacles: [[x0, y0, x1, y1]]}
// with sizes in meters.
OccupancyGrid InlineMap(const YAML::Node& node) {
  CheckKeys(node, {"width", "height", "resolution", "origin", "obstacles", "border"}, "map");
  const double res = RequirePositive(node, "resolution", 0.05);
  const double w = RequirePositive(node, "width", 0.0);
  const double h = RequirePositive(node, "height", 0.0);
  Pose2D origin{};
  if (node["origin"]) {
    const Point2 o = yaml::ParsePoint(node["origin"], "origin");
    origin = {o.x, o.y, 0.0};
  }
  OccupancyGrid grid(static_cast<int>(std::lround(w / res)), static_cast<int>(std::lround(h / res)),
                     res, origin);
  const auto fill = [&](Point2 lo, Point2 hi) {
    grid.FillRect(lo, hi, Occupancy::kOccupied);
  };
  if (yaml::Get<bool>(node, "border", false)) {
    const Point2 o{origin.x, origin.y};
    fill(o, o + Point2{w, res});
    fill(o + Point2{0, h - res}, o + Point2{w, h});
    fill(o, o + Point2{res, h});
    fill(o + Point2{w - res, 0}, o + Point2{w, h});
  }
  if (const YAML::Node obstacles = node["obstacles"]) {
    if (!obstacles.IsSequence()) yaml::Fail(obstacles, "'obstacles' must be a list");
    for (const auto& r : obstacles) {
      if (!r.IsSequence() || r.size() != 4) yaml::Fail(r, "obstacle must be [x0, y0, x1, y1]");
      fill({yaml::As<double>(r[0], "obstacles"), yaml::As<double>(r[1], "obstacles")},
           {yaml::As<double>(r[2], "obstacles"), yaml::As<double>(r[3], "obstacles")});
    }
  }
  return grid;
}

ScriptStep ParseStep(const YAML::Node& node) {
  if (!node.IsMap()) yaml::Fail(node, "script step must be a mapping");
  ScriptStep step;
  step.line = node.Mark().line + 1;
  if (node["at"]) step.at = RequireNonNegative(node, "at", 0.0);
  int actions = 0;
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    const YAML::Node& v = kv.second;
    if (key == "at") continue;
    ++actions;
    if (key == "wait") {
      const double d = yaml::As<double>(v, "wait");
      if (!(d >= 0.0)) yaml::Fail(v, "'wait' must be >= 0");
      step.action = step::Wait{d};
    } else if (key == "lamp") {
      step.action = step::Lamp{yaml::As<bool>(v, "lamp")};
    } else if (key == "autonomy") {
      step.action = step::Autonomy{ParseLevel(v)};
    } else if (key == "vel") {
      CheckKeys(v, {"v", "w", "duration"}, "vel");
      step.action = step::Velocity{{yaml::Get<double>(v, "v", 0.0), yaml::Get<double>(v, "w", 0.0)},
                                   RequireNonNegative(v, "duration", 0.0)};
    } else if (key == "drive_target") {
      CheckKeys(v, {"x", "y", "timeout"}, "drive_target");
      step.action = step::DriveTarget{{yaml::Require<double>(v, "x"), yaml::Require<double>(v, "y")},
                                      RequirePositive(v, "timeout", 60.0)};
    } else if (key == "goal") {
      CheckKeys(v, {"x", "y", "theta", "timeout"}, "goal");
      step::Goal goal{{yaml::Require<double>(v, "x"), yaml::Require<double>(v, "y")},
                      std::nullopt, RequirePositive(v, "timeout", 600.0)};
      if (v["theta"]) goal.theta = yaml::As<double>(v["theta"], "theta");
      step.action = goal;
    } else if (key == "disinfect") {
      step::Disinfect d;
      if (v.IsMap()) {
        CheckKeys(v, {"goal_timeout", "topup_rounds"}, "disinfect");
        d.goal_timeout = RequirePositive(v, "goal_timeout", d.goal_timeout);
        d.max_topup_rounds = yaml::Get<int>(v, "topup_rounds", d.max_topup_rounds);
        if (d.max_topup_rounds < 0) yaml::Fail(v, "'topup_rounds' must be >= 0");
      } else if (!v.IsNull()) {
        yaml::Fail(v, "'disinfect' takes a mapping of options");
      }
      step.action = d;
    } else {
      yaml::Fail(kv.first, "unknown script action '" + key + "'");
    }
  }
  if (actions != 1) yaml::Fail(node, "script step needs exactly one action");
  return step;
}

// Aborts a run with a status.
struct Abort {
  RunStatus status;
  std::string message;
};

class Runner {
 public:
  Runner(const Scenario& scenario, const RunOptions& options)
      : scenario_(scenario),
        options_(options),
        sim_(scenario.grid, scenario.config, scenario.start, scenario.autonomy),
        requested_level_(scenario.autonomy) {
    Record();
  }

  RunReport Run() {
    RunReport report;
    try {
      for (const ScriptStep& s : scenario_.script) {
        if (s.at) RunFor(*s.at - sim_.time());
        std::visit([&](const auto& a) { Do(a, s); }, s.action);
      }
      // Let the last queued commands take effect.
      if (pending_) Tick();
    } catch (const Abort& a) {
      report.status = a.status;
      report.message = a.message;
    }
    report.sim_time = sim_.time();
    report.final_state = sim_.state();
    report.battery_depleted_at = sim_.battery_depleted_at();
    report.trace = std::move(trace_);
    report.dose = sim_.dose();
    report.uncoverable = uncoverable_;
    report.executed = std::move(executed_);
    if (scenario_.target) {
      report.coverage = ComputeCoverage(report.dose, *scenario_.target, report.uncoverable);
    }
    return report;
  }

 private:
  static std::string Where(const ScriptStep& s) {
    return s.line > 0 ? "line " + std::to_string(s.line) + ": " : std::string();
  }

  void Record() {
    if (!options_.record_trace) return;
    const RobotState& st = sim_.state();
    trace_.push_back({sim_.time(), st.pose, st.twist, st.autonomy, st.lamp_on});
  }

  StepEvents Tick() {
    pending_ = false;
    StepEvents events = sim_.Step();
    Record();
    if (events.collision) {
      const Pose2D& p = sim_.state().pose;
      std::ostringstream msg;
      msg << "collision at t=" << sim_.time() << " near (" << p.x << ", " << p.y << ")";
      throw Abort{RunStatus::kCollision, msg.str()};
    }
    if (!events.command_errors.empty()) {
      throw Abort{RunStatus::kScriptError,
                  "command rejected: " + events.command_errors.front()};
    }
    return events;
  }

  std::int64_t TicksFor(double seconds) const {
    if (!(seconds > 0.0)) return 0;
    return static_cast<std::int64_t>(std::ceil(seconds / sim_.config().tick - 1e-9));
  }

  void RunFor(double seconds) {
    for (std::int64_t n = TicksFor(seconds); n > 0; --n) Tick();
  }

  void Do(const step::Wait& a, const ScriptStep&) { RunFor(a.duration); }

  void Do(const step::Lamp& a, const ScriptStep&) {
    sim_.CommandLamp(a.on);
    pending_ = true;
  }

  void Do(const step::Autonomy& a, const ScriptStep&) {
    sim_.CommandAutonomy(a.level);
    requested_level_ = a.level;
    pending_ = true;
  }

  void Do(const step::Velocity& a, const ScriptStep&) {
    sim_.CommandVelocity(a.cmd);
    RunFor(a.duration);
    sim_.CommandVelocity({});
    pending_ = true;
  }

  void Do(const step::DriveTarget& a, const ScriptStep& s) {
    if (Norm(a.target) > sim_.config().follower.manual_range) {
      throw Abort{RunStatus::kScriptError,
                  Where(s) + std::string(ErrorCodeName(ErrorCode::kTargetOutOfRange))};
    }
    sim_.CommandManualTarget(a.target);
    const std::int64_t deadline = sim_.tick_count() + TicksFor(a.timeout);
    do {
      Tick();
    } while (sim_.has_manual_target() && sim_.tick_count() < deadline);
    if (sim_.has_manual_target()) {
      sim_.CommandVelocity({});
      throw Abort{RunStatus::kPlannerError, Where(s) + "drive target not reached in time"};
    }
  }

  void ReachGoal(Point2 goal, std::optional<double> theta, double timeout,
                 const std::string& where) {
    sim_.CommandGoal(goal, theta);
    const std::int64_t deadline = sim_.tick_count() + TicksFor(timeout);
    do {
      Tick();
    } while (sim_.goal_status().state == GoalState::kActive && sim_.tick_count() < deadline);
    const GoalStatus& status = sim_.goal_status();
    if (status.state == GoalState::kActive) {
      sim_.CancelGoal();
      Tick();
      throw Abort{RunStatus::kPlannerError, where + "goal not reached in time"};
    }
    if (status.state != GoalState::kReached) {
      throw Abort{RunStatus::kPlannerError, where + "goal failed: " + status.reason};
    }
  }

  void Do(const step::Goal& a, const ScriptStep& s) {
    if (requested_level_ != AutonomyLevel::kAutonomous) {
      throw Abort{RunStatus::kScriptError, Where(s) + "goal requires Autonomous mode"};
    }
    ReachGoal(a.goal, a.theta, a.timeout, Where(s));
  }

  std::vector<double> TargetDose(const DisinfectionTarget& target) const {
    std::vector<double> d;
    d.reserve(target.cells.size());
    for (const CellIndex& c : target.cells) d.push_back(sim_.dose().at(c));
    return d;
  }

  void Do(const step::Disinfect& a, const ScriptStep& s) {
    if (!scenario_.target) {
      throw Abort{RunStatus::kScriptError, Where(s) + "disinfect needs 'targets'"};
    }
    const DisinfectionTarget& target = *scenario_.target;
    const AutonomyLevel previous = sim_.state().autonomy;
    const bool lamp_was_requested = sim_.lamp_requested();
    sim_.CommandLamp(false);
    sim_.CommandAutonomy(AutonomyLevel::kAutonomous);
    Tick();

    std::set<CellIndex> uncoverable(uncoverable_.begin(), uncoverable_.end());
    for (int round = 0; round <= a.max_topup_rounds; ++round) {
      PosePlannerOptions opts = scenario_.planner;
      opts.robot_radius = sim_.config().robot_radius;
      opts.footprint = sim_.config().footprint;
      opts.cutoff = sim_.config().dose_cutoff;
      opts.reachable_from = sim_.state().pose.position();
      opts.initial_dose = TargetDose(target);
      DisinfectionPlan plan;
      try {
        plan = PlanDisinfectionPoses(sim_.grid(), target, sim_.config().lamps, opts);
      } catch (const Error& e) {
        throw Abort{RunStatus::kPlannerError,
                    Where(s) + std::string(ErrorCodeName(e.code())) + ": " + e.what()};
      }
      uncoverable.insert(plan.uncoverable.begin(), plan.uncoverable.end());
      if (plan.poses.empty()) break;
      for (const PlannedPose& p : plan.poses) {
        ReachGoal(p.pose.position(), p.pose.theta, a.goal_timeout, Where(s));
        Dwell(target, round, p);
      }
    }
    uncoverable_.assign(uncoverable.begin(), uncoverable.end());

    sim_.CommandAutonomy(previous);
    sim_.CommandLamp(lamp_was_requested);
    pending_ = true;
  }

  // Dwells long enough at the pose actually reached to finish the cells the
  // planner assigned to it.
  void Dwell(const DisinfectionTarget& target, int round, const PlannedPose& p) {
    const std::vector<double>& field = sim_.CurrentIrradiance();
    const int width = sim_.grid().width();
    double dwell = 0.0;
    for (const std::size_t k : p.completes) {
      const CellIndex c = target.cells[k];
      const double e = field[static_cast<std::size_t>(c.row) * width + c.col];
      const double need = target.required_dose - sim_.dose().at(c);
      if (need > 0.0 && e > 0.0) dwell = std::max(dwell, need / e);
    }
    std::int64_t ticks = 0;
    if (dwell > 0.0) {
      ticks = TicksFor(dwell) + 1;
      sim_.CommandLamp(true);
      for (std::int64_t n = 0; n < ticks; ++n) Tick();
      sim_.CommandLamp(false);
      pending_ = true;
    }
    executed_.push_back({round, p, sim_.state().pose,
                         static_cast<double>(ticks) * sim_.config().tick});
  }

  const Scenario& scenario_;
  RunOptions options_;
  Simulator sim_;
  std::vector<TraceRow> trace_;
  std::vector<CellIndex> uncoverable_;
  std::vector<ExecutedPose> executed_;
  // Commands queued since the last tick.
  bool pending_ = false;
  AutonomyLevel requested_level_;
};

void AppendNumber(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

json PoseJson(const Pose2D& p) { return {{"x", p.x}, {"y", p.y}, {"theta", p.theta}}; }

json CoverageJson(const RunReport& report, const Scenario& scenario) {
  json j;
  json plan = json::array();
  for (const ExecutedPose& e : report.executed) {
    plan.push_back({{"round", e.round},
                    {"planned", PoseJson(e.planned.pose)},
                    {"planned_dwell_s", e.planned.dwell_s},
                    {"actual", PoseJson(e.actual)},
                    {"dwell_s", e.dwell_s},
                    {"completes", e.planned.completes.size()}});
  }
  j["plan"] = plan;
  if (!scenario.target || !report.coverage) {
    j["target"] = nullptr;
    double peak = 0.0;
    for (double d : report.dose.values()) peak = std::max(peak, d);
    j["max_dose"] = peak;
    return j;
  }
  const DisinfectionTarget& target = *scenario.target;
  const CoverageReport& c = *report.coverage;
  j["required_dose"] = target.required_dose;
  j["target_cells"] = c.target_cells;
  j["covered_cells"] = c.covered_cells;
  j["covered_fraction"] = c.covered_fraction;
  j["coverable_covered_fraction"] = c.coverable_covered_fraction;
  j["min_dose"] = c.min_dose;
  j["mean_dose"] = c.mean_dose;
  j["max_dose"] = c.max_dose;
  json unc = json::array();
  for (const CellIndex& u : c.uncoverable) unc.push_back({u.col, u.row});
  j["uncoverable"] = unc;
  json cells = json::array();
  for (const CellIndex& cell : target.cells) {
    const Point2 p = scenario.grid.CellCenter(cell);
    const double d = report.dose.at(cell);
    cells.push_back({{"col", cell.col},
                     {"row", cell.row},
                     {"x", p.x},
                     {"y", p.y},
                     {"dose", d},
                     {"covered", d >= target.required_dose}});
  }
  j["cells"] = cells;
  return j;
}

json SummaryJson(const RunReport& report, const Scenario& scenario) {
  const RobotState& st = report.final_state;
  json j;
  j["status"] = RunStatusName(report.status);
  j["exit_code"] = report.exit_code();
  j["message"] = report.message;
  j["seed"] = scenario.config.seed;
  j["sim_time"] = report.sim_time;
  j["final_pose"] = PoseJson(st.pose);
  j["autonomy"] = AutonomyLevelName(st.autonomy);
  j["lamp_on"] = st.lamp_on;
  j["battery"] = {{"wh", st.battery_wh},
                  {"fraction", st.battery_wh / scenario.config.battery.capacity_wh},
                  {"depleted_at", report.battery_depleted_at
                                      ? json(*report.battery_depleted_at)
                                      : json(nullptr)}};
  if (report.coverage) {
    const CoverageReport& c = *report.coverage;
    j["coverage"] = {{"covered_fraction", c.covered_fraction},
                     {"coverable_covered_fraction", c.coverable_covered_fraction},
                     {"min_dose", c.min_dose},
                     {"mean_dose", c.mean_dose},
                     {"max_dose", c.max_dose},
                     {"uncoverable_cells", c.uncoverable.size()}};
  } else {
    j["coverage"] = nullptr;
  }
  return j;
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

}  // namespace

Scenario ParseScenario(const std::string& yaml_text, const std::filesystem::path& base_dir) {
  const YAML::Node root = yaml::Parse(yaml_text);
  if (!root || root.IsNull()) throw Error(ErrorCode::kConfigError, "empty scenario");
  CheckKeys(root,
            {"map", "seed", "tick", "start", "autonomy", "robot", "lamps", "lidar", "assist",
             "follower", "planner", "targets", "script"},
            "scenario");
  Scenario sc;
  SimConfig& cfg = sc.config;

  const YAML::Node map = root["map"];
  if (!map) yaml::Fail(root, "missing 'map'");
  if (map.IsScalar()) {
    sc.grid = LoadMap(base_dir / yaml::As<std::string>(map, "map"));
  } else {
    sc.grid = InlineMap(map);
  }

  cfg.seed = yaml::Get<std::uint64_t>(root, "seed", 0);
  cfg.tick = RequirePositive(root, "tick", kDefaultTick);
  if (const YAML::Node start = root["start"]) {
    const Point2 p = yaml::ParsePoint(start, "start");
    sc.start = MakePose(p.x, p.y, start.IsMap() ? yaml::Get<double>(start, "theta", 0.0) : 0.0);
  } else {
    yaml::Fail(root, "missing 'start'");
  }
  if (root["autonomy"]) sc.autonomy = ParseLevel(root["autonomy"]);

  if (const YAML::Node r = root["robot"]) {
    CheckKeys(r, {"v_max", "w_max", "radius", "battery_wh", "base_power", "footprint",
                  "heading_tolerance", "heartbeat_timeout"},
              "robot");
    cfg.limits.v_max = RequirePositive(r, "v_max", cfg.limits.v_max);
    cfg.limits.w_max = RequirePositive(r, "w_max", cfg.limits.w_max);
    cfg.robot_radius = RequireNonNegative(r, "radius", cfg.robot_radius);
    cfg.battery.capacity_wh = RequirePositive(r, "battery_wh", cfg.battery.capacity_wh);
    cfg.battery.base_power_w = RequireNonNegative(r, "base_power", cfg.battery.base_power_w);
    cfg.heading_tolerance = RequirePositive(r, "heading_tolerance", cfg.heading_tolerance);
    cfg.heartbeat_timeout = RequirePositive(r, "heartbeat_timeout", cfg.heartbeat_timeout);
    if (const YAML::Node fp = r["footprint"]) {
      CheckKeys(fp, {"width", "length"}, "footprint");
      cfg.footprint.width = RequirePositive(fp, "width", cfg.footprint.width);
      cfg.footprint.length = RequirePositive(fp, "length", cfg.footprint.length);
    }
  }
  if (const YAML::Node l = root["lamps"]) {
    CheckKeys(l, {"count", "uvc_power", "electrical_power", "arc_radius", "mount_height",
                  "cutoff"},
              "lamps");
    cfg.lamps.count = yaml::Get<int>(l, "count", cfg.lamps.count);
    if (cfg.lamps.count < 1) yaml::Fail(l["count"], "'count' must be >= 1");
    cfg.lamps.uvc_power_w = RequirePositive(l, "uvc_power", cfg.lamps.uvc_power_w);
    cfg.lamps.electrical_power_w =
        RequireNonNegative(l, "electrical_power", cfg.lamps.electrical_power_w);
    cfg.lamps.arc_radius = RequireNonNegative(l, "arc_radius", cfg.lamps.arc_radius);
    cfg.lamps.mount_height = RequireNonNegative(l, "mount_height", cfg.lamps.mount_height);
    cfg.dose_cutoff = RequirePositive(l, "cutoff", cfg.dose_cutoff);
  }
  cfg.battery.lamp_power_w = cfg.lamps.TotalElectricalPower();
  if (const YAML::Node l = root["lidar"]) {
    CheckKeys(l, {"beams", "range_max", "noise_sigma", "every"}, "lidar");
    cfg.lidar.beam_count = yaml::Get<int>(l, "beams", cfg.lidar.beam_count);
    if (cfg.lidar.beam_count < 1) yaml::Fail(l["beams"], "'beams' must be >= 1");
    cfg.lidar.range_max = RequirePositive(l, "range_max", cfg.lidar.range_max);
    cfg.lidar.noise_sigma = RequireNonNegative(l, "noise_sigma", cfg.lidar.noise_sigma);
    cfg.lidar_every = yaml::Get<int>(l, "every", cfg.lidar_every);
    if (cfg.lidar_every < 1) yaml::Fail(l["every"], "'every' must be >= 1");
  }
  if (const YAML::Node a = root["assist"]) {
    CheckKeys(a, {"d_stop", "d_slow", "cone_half_angle", "d_influence", "k_steer"}, "assist");
    cfg.assist.d_stop = yaml::Get<double>(a, "d_stop", cfg.assist.d_stop);
    cfg.assist.d_slow = yaml::Get<double>(a, "d_slow", cfg.assist.d_slow);
    cfg.assist.cone_half_angle = yaml::Get<double>(a, "cone_half_angle", cfg.assist.cone_half_angle);
    cfg.assist.d_influence = yaml::Get<double>(a, "d_influence", cfg.assist.d_influence);
    cfg.assist.k_steer = yaml::Get<double>(a, "k_steer", cfg.assist.k_steer);
    try {
      cfg.assist.Validate();
    } catch (const Error& e) {
      yaml::Fail(a, e.what());
    }
  }
  if (const YAML::Node f = root["follower"]) {
    CheckKeys(f, {"lookahead", "alpha_turn", "k_v", "k_w", "goal_tolerance", "manual_range"},
              "follower");
    cfg.follower.lookahead = RequirePositive(f, "lookahead", cfg.follower.lookahead);
    cfg.follower.alpha_turn = RequirePositive(f, "alpha_turn", cfg.follower.alpha_turn);
    cfg.follower.k_v = RequirePositive(f, "k_v", cfg.follower.k_v);
    cfg.follower.k_w = RequirePositive(f, "k_w", cfg.follower.k_w);
    cfg.follower.goal_tolerance = RequirePositive(f, "goal_tolerance", cfg.follower.goal_tolerance);
    cfg.follower.manual_range = RequirePositive(f, "manual_range", cfg.follower.manual_range);
  }
  if (const YAML::Node p = root["planner"]) {
    CheckKeys(p, {"spacing", "headings", "pose_overhead"}, "planner");
    sc.planner.candidate_spacing = RequirePositive(p, "spacing", sc.planner.candidate_spacing);
    sc.planner.headings = yaml::Get<int>(p, "headings", sc.planner.headings);
    if (sc.planner.headings < 1) yaml::Fail(p["headings"], "'headings' must be >= 1");
    sc.planner.pose_overhead_s = RequireNonNegative(p, "pose_overhead", sc.planner.pose_overhead_s);
  }
  if (const YAML::Node t = root["targets"]) {
    if (t.IsScalar()) {
      sc.target = LoadTarget(base_dir / yaml::As<std::string>(t, "targets"), sc.grid);
    } else {
      sc.target = internal::TargetFromNode(t, sc.grid);
    }
    if (sc.target->cells.empty()) yaml::Fail(t, "target selects no cells");
  }
  if (const YAML::Node script = root["script"]) {
    if (!script.IsSequence() && !script.IsNull()) yaml::Fail(script, "'script' must be a list");
    double last_at = 0.0;
    for (const auto& s : script) {
      ScriptStep step = ParseStep(s);
      if (step.at) {
        if (*step.at < last_at) yaml::Fail(s, "script times must be non-decreasing");
        last_at = *step.at;
      }
      sc.script.push_back(std::move(step));
    }
  }

  if (!sc.grid.Contains(sc.start.position())) yaml::Fail(root["start"], "start is off the map");
  if (CheckCollision(sc.grid, sc.start, cfg.footprint)) {
    yaml::Fail(root["start"], "start pose collides with the map");
  }
  try {
    cfg.lamps.Validate();
  } catch (const Error& e) {
    yaml::Fail(root["lamps"] ? root["lamps"] : root, e.what());
  }
  return sc;
}

Scenario LoadScenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open scenario " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseScenario(ss.str(), path.parent_path());
}

int ExitCodeFor(RunStatus status) {
  switch (status) {
    case RunStatus::kOk: return 0;
    case RunStatus::kScriptError: return 2;
    case RunStatus::kCollision: return 3;
    case RunStatus::kPlannerError: return 4;
  }
  return 2;
}

std::string_view RunStatusName(RunStatus status) {
  switch (status) {
    case RunStatus::kOk: return "ok";
    case RunStatus::kScriptError: return "script_error";
    case RunStatus::kCollision: return "collision";
    case RunStatus::kPlannerError: return "planner_error";
  }
  return "script_error";
}

RunReport RunScenario(const Scenario& scenario, const RunOptions& options) {
  Runner runner(scenario, options);
  return runner.Run();
}

std::string TraceCsv(const std::vector<TraceRow>& trace) {
  std::string out = "t,x,y,theta,v,w,mode,lamp\n";
  out.reserve(trace.size() * 80);
  for (const TraceRow& r : trace) {
    for (const double v : {r.t, r.pose.x, r.pose.y, r.pose.theta, r.twist.v, r.twist.w}) {
      AppendNumber(out, v);
      out.push_back(',');
    }
    out.append(AutonomyLevelName(r.mode));
    out.append(r.lamp ? ",1\n" : ",0\n");
  }
  return out;
}

void WriteRunArtifacts(const RunReport& report, const Scenario& scenario,
                       const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + out_dir.string());

  WriteText(out_dir / "trace.csv", TraceCsv(report.trace));
  double scale = 0.0;
  if (scenario.target) {
    scale = scenario.target->required_dose;
  } else {
    for (double d : report.dose.values()) scale = std::max(scale, d);
  }
  WritePgmFile(out_dir / "dose.pgm", RenderDoseHeatmap(report.dose, scale > 0.0 ? scale : 1.0));
  WriteText(out_dir / "coverage.json", CoverageJson(report, scenario).dump(2) + "\n");
  WriteText(out_dir / "summary.json", SummaryJson(report, scenario).dump(2) + "\n");
}

}  // namespace uvbot
