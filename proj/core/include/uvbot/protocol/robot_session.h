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

// Robot end of the relay: owns the simulation, turns incoming command
// envelopes into simulator commands and publishes telemetry.
//
// Link health is judged on the robot's own clock from the last frame heard
// from the client, and additionally from the relay's session notices: a
// Degraded, Closed or expired notice drops lamps and motion immediately.

#ifndef UVBOT_PROTOCOL_ROBOT_SESSION_H_
#define UVBOT_PROTOCOL_ROBOT_SESSION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "uvbot/disinfection/target.h"
#include "uvbot/protocol/messages.h"
#include "uvbot/protocol/relay_hub.h"
#include "uvbot/sim/simulator.h"

namespace uvbot::protocol {

struct RobotSessionOptions {
  std::string id = "uvbot";
  // Publishing periods in simulation ticks (20 Hz by default).
  int pose_every = 2;
  int scan_every = 4;
  int status_every = 20;
  int keepalive_every = 20;
  int scan_beams = 90;
  // Surfaces reported on /telemetry/dose.
  std::optional<DisinfectionTarget> dose_target;
};

struct LinkStats {
  std::int64_t last_seq = 0;
  std::uint64_t gaps = 0;
};

class RobotSession {
 public:
  RobotSession(OccupancyGrid grid, SimConfig config, Pose2D start, RobotSessionOptions options,
               SendFn send);

  RobotSession(const RobotSession&) = delete;
  RobotSession& operator=(const RobotSession&) = delete;

  // Sends the registration request.
  void Start();
  void HandleFrame(std::string_view text);
  // One simulation tick followed by telemetry.
  StepEvents Step();

  bool registered() const { return registered_; }
  bool paired() const { return paired_; }
  bool link_healthy() const;
  double client_silence() const;
  const LinkStats& link_stats() const { return link_; }
  const std::optional<std::string>& last_error() const { return last_error_; }
  const Simulator& sim() const { return sim_; }
  Simulator& mutable_sim() { return sim_; }
  const RobotSessionOptions& options() const { return options_; }

 private:
  void Publish(std::string_view topic, json payload);
  void PublishStatus();
  void PublishScan(bool full);
  void PublishLamp();
  void PublishGoal();
  void ApplyCommand(const Envelope& e);
  void LinkLost();

  Simulator sim_;
  RobotSessionOptions options_;
  SendFn send_;
  bool registered_ = false;
  bool paired_ = false;
  bool degraded_ = false;
  bool was_healthy_ = false;
  std::int64_t last_client_tick_ = 0;
  std::int64_t seq_ = 0;
  LinkStats link_;
  bool seq_seen_ = false;
  bool full_scan_requested_ = false;
  std::optional<std::string> last_error_;
  LampStatus published_lamp_{};
  bool lamp_published_ = false;
  GoalStatus published_goal_{};
};

}  // namespace uvbot::protocol

#endif  // UVBOT_PROTOCOL_ROBOT_SESSION_H_
