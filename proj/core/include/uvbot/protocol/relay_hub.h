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

// Peering and relay core, independent of any transport.
//
// Robots register under an id and must keep talking (keepalive or telemetry)
// to stay listed. A client connects to one registered robot; while paired the
// hub relays command envelopes client -> robot and telemetry robot -> client,
// after checking topic, direction, payload schema and sequence numbers.
//
// Liveness: any frame from an end refreshes it. A paired session whose
// client or robot has been silent longer than heartbeat_timeout is Degraded;
// the robot drops commands and lamps at once, and commands are refused until
// the silent end speaks again. Longer than close_timeout and the session is
// Closed: both ends are told, the client is detached and the robot becomes
// available again (or is dropped, if it was the robot that went silent).
//
// All methods take the current time explicitly so tests can drive a
// simulated clock. The hub is internally locked; outgoing frames are handed
// to the per-connection send callbacks while the lock is held, which keeps
// each connection's frames in order. Callbacks must not call back into the
// hub.

#ifndef UVBOT_PROTOCOL_RELAY_HUB_H_
#define UVBOT_PROTOCOL_RELAY_HUB_H_

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uvbot/protocol/messages.h"

namespace uvbot::protocol {

using ConnId = std::uint64_t;
using SendFn = std::function<void(std::string_view frame)>;

enum class Role { kRobot, kClient };

struct HubConfig {
  double heartbeat_timeout = kHeartbeatTimeout;
  double close_timeout = kCloseTimeout;
};

struct HubStats {
  std::uint64_t routed = 0;
  std::uint64_t rejected = 0;
};

class RelayHub {
 public:
  explicit RelayHub(HubConfig config = {});

  // A new transport connection on the robot or client endpoint.
  ConnId Open(Role role, SendFn send);
  // The transport went away. Pairing and registration held by the
  // connection end immediately.
  void Close(ConnId conn, double now);

  // Entry point for one text frame. Protocol errors are answered with an
  // error frame on the same connection, never thrown.
  void HandleFrame(ConnId conn, std::string_view text, double now);

  // Heartbeat watchdog; call periodically.
  void Monitor(double now);

  // Direct operations behind HandleFrame; these throw Error on rejection.
  void RegisterRobot(ConnId conn, const std::string& id, double now);
  void ConnectClient(ConnId conn, const std::string& robot_id, double now);
  void Route(ConnId from, const Envelope& envelope, double now);

  // Session state of a registered robot; nullopt if not registered.
  std::optional<SessionState> StateOf(const std::string& robot_id) const;
  // State of the session a client connection was last part of.
  std::optional<SessionState> ClientState(ConnId client) const;
  std::vector<std::string> Robots() const;
  HubStats stats() const;
  const HubConfig& config() const { return config_; }

 private:
  struct Conn {
    Role role = Role::kClient;
    SendFn send;
    double last_seen = 0.0;
    std::string robot_id;        // registered id (robot) or paired robot (client)
    bool attached = false;       // holds a registration / pairing
    std::optional<SessionState> last_state;  // client side view
    std::int64_t last_seq = 0;   // per (session, sender)
    bool seq_started = false;
  };
  struct Robot {
    ConnId conn = 0;
    std::optional<ConnId> client;
    SessionState state = SessionState::kRobotRegistered;
  };

  void Send(ConnId conn, std::string_view frame);
  void Touch(ConnId conn, double now);
  void SetSessionState(Robot& robot, SessionState state, std::string_view reason);
  void CloseSession(Robot& robot, std::string_view reason);
  void DropRobot(const std::string& id, std::string_view reason);
  void Reevaluate(Robot& robot, double now);
  void RegisterLocked(ConnId conn, const std::string& id, double now);
  void ConnectLocked(ConnId conn, const std::string& robot_id, double now);
  void RouteLocked(ConnId from, const Envelope& envelope, double now);
  void HandleFrameLocked(ConnId conn, std::string_view text, double now);

  HubConfig config_;
  mutable std::mutex mu_;
  ConnId next_conn_ = 1;
  std::map<ConnId, Conn> conns_;
  std::map<std::string, Robot> robots_;
  HubStats stats_;
};

}  // namespace uvbot::protocol

#endif  // UVBOT_PROTOCOL_RELAY_HUB_H_
