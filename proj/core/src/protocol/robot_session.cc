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

#include "uvbot/protocol/robot_session.h"

#include <algorithm>

#include "uvbot/disinfection/coverage.h"

namespace uvbot::protocol {

RobotSession::RobotSession(OccupancyGrid grid, SimConfig config, Pose2D start,
                           RobotSessionOptions options, SendFn send)
    : sim_(std::move(grid), std::move(config), start),
      options_(std::move(options)),
      send_(std::move(send)) {
  if (!IsValidPeerId(options_.id)) throw Error(ErrorCode::kInvalidId, "invalid robot id");
  if (options_.pose_every < 1 || options_.scan_every < 1 || options_.status_every < 1 ||
      options_.keepalive_every < 1 || options_.scan_beams < 1) {
    throw Error(ErrorCode::kInvalidArgument, "publishing periods must be >= 1");
  }
  if (options_.dose_target) options_.dose_target->Validate();
  // Nothing moves and no lamp burns until a client pairs.
  sim_.SetLink(false, 0.0);
}

void RobotSession::Start() { send_(RegisterFrame(options_.id)); }

double RobotSession::client_silence() const {
  return static_cast<double>(sim_.tick_count() - last_client_tick_) * sim_.config().tick;
}

bool RobotSession::link_healthy() const {
  return paired_ && !degraded_ &&
         InterlockPermits(true, client_silence(), sim_.config().heartbeat_timeout);
}

void RobotSession::LinkLost() { sim_.OnLinkLost(); }

void RobotSession::Publish(std::string_view topic, json payload) {
  if (!paired_) return;
  Envelope e;
  e.topic = std::string(topic);
  e.seq = ++seq_;
  e.stamp = sim_.time();
  e.payload = std::move(payload);
  send_(DataFrame(e));
}

void RobotSession::PublishLamp() {
  const LampStatus s = sim_.lamp_status();
  Publish(topic::kLampState, {{"on", sim_.state().lamp_on}, {"forced_off", s.forced_off}});
  published_lamp_ = s;
  lamp_published_ = true;
}

void RobotSession::PublishGoal() {
  const GoalStatus& g = sim_.goal_status();
  Publish(topic::kGoalStatus, {{"state", GoalStateName(g.state)}, {"reason", g.reason}});
  published_goal_ = g;
}

void RobotSession::PublishScan(bool full) {
  const LaserScan& scan = sim_.scan();
  LaserScan out = scan;
  if (!full) {
    const int n = static_cast<int>(scan.ranges.size());
    out = DecimateScan(scan, std::max(1, n / options_.scan_beams));
  }
  Publish(full ? topic::kScanFull : topic::kScan,
          {{"angle_min", out.angle_min},
           {"increment", out.angle_increment},
           {"range_max", out.range_max},
           {"stamp", out.stamp},
           {"ranges", out.ranges}});
}

void RobotSession::PublishStatus() {
  const RobotState& st = sim_.state();
  Publish(topic::kMode, {{"level", AutonomyLevelName(st.autonomy)}});
  PublishLamp();
  Publish(topic::kBattery, {{"wh", st.battery_wh}, {"fraction", sim_.battery_fraction()}});
  json dose{{"covered_fraction", 0.0}, {"min", 0.0}, {"mean", 0.0}};
  if (options_.dose_target) {
    const CoverageReport r = ComputeCoverage(sim_.dose(), *options_.dose_target);
    dose = {{"covered_fraction", r.covered_fraction},
            {"min", r.min_dose},
            {"mean", r.mean_dose},
            {"max", r.max_dose},
            {"required", options_.dose_target->required_dose}};
  }
  Publish(topic::kDose, dose);
}

void RobotSession::ApplyCommand(const Envelope& e) {
  const json& p = e.payload;
  if (e.topic == topic::kVel) {
    sim_.CommandVelocity({p["v"].get<double>(), p["w"].get<double>()});
  } else if (e.topic == topic::kManualTarget) {
    sim_.CommandManualTarget({p["x"].get<double>(), p["y"].get<double>()});
  } else if (e.topic == topic::kGoal) {
    std::optional<double> theta;
    if (p.contains("theta")) theta = p["theta"].get<double>();
    sim_.CommandGoal({p["x"].get<double>(), p["y"].get<double>()}, theta);
  } else if (e.topic == topic::kCancelGoal) {
    sim_.CancelGoal();
  } else if (e.topic == topic::kAutonomy) {
    sim_.CommandAutonomy(*ParseAutonomyLevel(p["level"].get<std::string>()));
  } else if (e.topic == topic::kLamp) {
    sim_.CommandLamp(p["on"].get<bool>());
  } else if (e.topic == topic::kScanRequest) {
    full_scan_requested_ = true;
  }
}

void RobotSession::HandleFrame(std::string_view text) {
  json frame;
  try {
    frame = ParseFrame(text);
  } catch (const Error& e) {
    last_error_ = e.what();
    return;
  }
  const std::string type = frame["type"].get<std::string>();
  if (type == "registered") {
    registered_ = true;
  } else if (type == "expired") {
    registered_ = false;
    if (paired_) LinkLost();
    paired_ = false;
    Start();
  } else if (type == "paired") {
    paired_ = true;
    degraded_ = false;
    last_client_tick_ = sim_.tick_count();
    seq_seen_ = false;
    link_ = {};
    PublishStatus();
    PublishGoal();
  } else if (type == "session") {
    const std::string state = frame.value("state", "");
    if (state == SessionStateName(SessionState::kDegraded)) {
      degraded_ = true;
      LinkLost();
    } else if (state == SessionStateName(SessionState::kPaired)) {
      degraded_ = false;
    } else if (state == SessionStateName(SessionState::kClosed)) {
      LinkLost();
      paired_ = false;
      degraded_ = false;
    }
  } else if (type == "error") {
    last_error_ = frame.value("code", "") + ": " + frame.value("message", "");
  } else if (type == "data") {
    if (!paired_) return;
    Envelope e;
    try {
      e = EnvelopeFromJson(frame["envelope"]);
      ValidatePayload(e.topic, e.payload);
      if (TopicDirection(e.topic) != Direction::kCommand) {
        throw Error(ErrorCode::kWrongDirection, "not a command");
      }
    } catch (const Error& err) {
      Publish(topic::kError, {{"code", ErrorCodeName(err.code())}, {"message", err.what()}});
      return;
    }
    last_client_tick_ = sim_.tick_count();
    if (seq_seen_ && e.seq > link_.last_seq + 1) {
      const std::int64_t missing = e.seq - link_.last_seq - 1;
      link_.gaps += static_cast<std::uint64_t>(missing);
      Publish(topic::kLink,
              {{"gaps", link_.gaps}, {"last_seq", e.seq}, {"missing", missing}});
    }
    if (seq_seen_ && e.seq <= link_.last_seq) {
      Publish(topic::kError, {{"code", ErrorCodeName(ErrorCode::kBadSequence)},
                              {"message", "stale sequence number"}});
      return;
    }
    seq_seen_ = true;
    link_.last_seq = e.seq;
    ApplyCommand(e);
  }
}

StepEvents RobotSession::Step() {
  // Client silence noticed locally, possibly before the relay says so.
  const bool healthy = link_healthy();
  if (was_healthy_ && !healthy) LinkLost();
  was_healthy_ = healthy;
  sim_.SetLink(paired_ && !degraded_, client_silence());
  StepEvents events = sim_.Step();
  const std::int64_t tick = sim_.tick_count();
  const RobotState& st = sim_.state();

  if (registered_ && tick % options_.keepalive_every == 0) send_(KeepaliveFrame());
  if (!paired_) return events;

  for (const AutonomyLevel level : events.mode_acks) {
    Publish(topic::kMode, {{"level", AutonomyLevelName(level)}});
  }
  for (const std::string& code : events.command_errors) {
    Publish(topic::kError, {{"code", code}});
  }
  const LampStatus lamp = sim_.lamp_status();
  if (events.lamp_changed || !lamp_published_ || lamp.forced_off != published_lamp_.forced_off ||
      lamp.on != published_lamp_.on) {
    PublishLamp();
  }
  const GoalStatus& goal = sim_.goal_status();
  if (goal.state != published_goal_.state || goal.reason != published_goal_.reason) {
    PublishGoal();
  }
  if (tick % options_.pose_every == 0 || events.collision) {
    Publish(topic::kPose, {{"x", st.pose.x},
                           {"y", st.pose.y},
                           {"theta", st.pose.theta},
                           {"v", st.twist.v},
                           {"w", st.twist.w}});
  }
  if (tick % options_.scan_every == 0) PublishScan(false);
  if (full_scan_requested_) {
    PublishScan(true);
    full_scan_requested_ = false;
  }
  if (tick % options_.status_every == 0) PublishStatus();
  return events;
}

}  // namespace uvbot::protocol
