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

#include "uvbot/protocol/relay_hub.h"

#include <algorithm>

namespace uvbot::protocol {

RelayHub::RelayHub(HubConfig config) : config_(config) {
  if (!(config_.heartbeat_timeout > 0.0) || !(config_.close_timeout >= config_.heartbeat_timeout)) {
    throw Error(ErrorCode::kInvalidArgument, "need 0 < heartbeat_timeout <= close_timeout");
  }
}

ConnId RelayHub::Open(Role role, SendFn send) {
  std::lock_guard lock(mu_);
  const ConnId id = next_conn_++;
  Conn conn;
  conn.role = role;
  conn.send = std::move(send);
  conns_.emplace(id, std::move(conn));
  return id;
}

void RelayHub::Send(ConnId conn, std::string_view frame) {
  const auto it = conns_.find(conn);
  if (it != conns_.end() && it->second.send) it->second.send(frame);
}

void RelayHub::Touch(ConnId conn, double now) {
  Conn& c = conns_.at(conn);
  c.last_seen = std::max(c.last_seen, now);
}

void RelayHub::SetSessionState(Robot& robot, SessionState state, std::string_view reason) {
  if (robot.state == state) return;
  robot.state = state;
  const std::string frame = SessionFrame(state, reason);
  if (robot.client) {
    conns_.at(*robot.client).last_state = state;
    Send(*robot.client, frame);
  }
  Send(robot.conn, frame);
}

void RelayHub::CloseSession(Robot& robot, std::string_view reason) {
  if (!robot.client) return;
  const ConnId client = *robot.client;
  robot.state = SessionState::kClosed;
  const std::string frame = SessionFrame(SessionState::kClosed, reason);
  Conn& c = conns_.at(client);
  c.attached = false;
  c.last_state = SessionState::kClosed;
  Send(client, frame);
  Send(robot.conn, frame);
  robot.client.reset();
  robot.state = SessionState::kRobotRegistered;
  // The next session starts a fresh sequence on the robot side.
  Conn& r = conns_.at(robot.conn);
  r.seq_started = false;
  r.last_seq = 0;
}

void RelayHub::DropRobot(const std::string& id, std::string_view reason) {
  const auto it = robots_.find(id);
  if (it == robots_.end()) return;
  CloseSession(it->second, reason);
  const ConnId conn = it->second.conn;
  robots_.erase(it);
  const auto c = conns_.find(conn);
  if (c != conns_.end()) {
    c->second.attached = false;
    c->second.robot_id.clear();
    Send(conn, ExpiredFrame());
  }
}

void RelayHub::Reevaluate(Robot& robot, double now) {
  const double robot_age = now - conns_.at(robot.conn).last_seen;
  if (!robot.client) {
    if (robot_age > config_.heartbeat_timeout) {
      const std::string id = conns_.at(robot.conn).robot_id;
      DropRobot(id, "RobotTimeout");
    }
    return;
  }
  const double client_age = now - conns_.at(*robot.client).last_seen;
  const bool robot_silent = robot_age >= client_age;
  const double worst = std::max(robot_age, client_age);
  const std::string_view reason = robot_silent ? "RobotTimeout" : "ClientTimeout";
  if (worst > config_.close_timeout) {
    if (robot_silent) {
      const std::string id = conns_.at(robot.conn).robot_id;
      DropRobot(id, reason);
    } else {
      CloseSession(robot, reason);
    }
  } else if (worst > config_.heartbeat_timeout) {
    SetSessionState(robot, SessionState::kDegraded, reason);
  } else if (robot.state == SessionState::kDegraded) {
    SetSessionState(robot, SessionState::kPaired, "Resumed");
  }
}

void RelayHub::Close(ConnId conn, double now) {
  std::lock_guard lock(mu_);
  (void)now;
  const auto it = conns_.find(conn);
  if (it == conns_.end()) return;
  Conn& c = it->second;
  if (c.attached) {
    const std::string id = c.robot_id;
    if (c.role == Role::kRobot) {
      DropRobot(id, "RobotGone");
    } else {
      const auto r = robots_.find(id);
      if (r != robots_.end()) CloseSession(r->second, "ClientGone");
    }
  }
  conns_.erase(conn);
}

void RelayHub::RegisterRobot(ConnId conn, const std::string& id, double now) {
  std::lock_guard lock(mu_);
  Touch(conn, now);
  RegisterLocked(conn, id, now);
}

void RelayHub::RegisterLocked(ConnId conn, const std::string& id, double now) {
  Conn& c = conns_.at(conn);
  if (c.role != Role::kRobot) {
    throw Error(ErrorCode::kBadMessage, "register is only valid on the robot endpoint");
  }
  if (!IsValidPeerId(id)) throw Error(ErrorCode::kInvalidId, "invalid robot id");
  if (c.attached) {
    if (c.robot_id == id) {
      Send(conn, RegisteredFrame(id));
      return;
    }
    throw Error(ErrorCode::kBadMessage, "connection already registered as " + c.robot_id);
  }
  if (const auto it = robots_.find(id); it != robots_.end()) {
    // A registration that has silently expired does not block the id.
    Reevaluate(it->second, now);
    if (robots_.count(id) != 0) throw Error(ErrorCode::kDuplicateId, "id already registered");
  }
  Robot robot;
  robot.conn = conn;
  robots_.emplace(id, robot);
  c.attached = true;
  c.robot_id = id;
  c.seq_started = false;
  c.last_seq = 0;
  Send(conn, RegisteredFrame(id));
}

void RelayHub::ConnectClient(ConnId conn, const std::string& robot_id, double now) {
  std::lock_guard lock(mu_);
  Touch(conn, now);
  ConnectLocked(conn, robot_id, now);
}

void RelayHub::ConnectLocked(ConnId conn, const std::string& robot_id, double now) {
  Conn& c = conns_.at(conn);
  if (c.role != Role::kClient) {
    throw Error(ErrorCode::kBadMessage, "connect is only valid on the client endpoint");
  }
  if (c.attached) throw Error(ErrorCode::kBadMessage, "already connected to " + c.robot_id);
  auto it = robots_.find(robot_id);
  if (it != robots_.end()) {
    Reevaluate(it->second, now);
    it = robots_.find(robot_id);
  }
  if (it == robots_.end()) throw Error(ErrorCode::kUnknownRobot, "no robot with that id");
  Robot& robot = it->second;
  if (robot.client) throw Error(ErrorCode::kRobotBusy, "robot already has a client");

  robot.state = SessionState::kClientConnecting;
  robot.client = conn;
  c.attached = true;
  c.robot_id = robot_id;
  c.seq_started = false;
  c.last_seq = 0;
  c.last_state = SessionState::kPaired;
  robot.state = SessionState::kPaired;
  const std::string frame = PairedFrame(robot_id);
  Send(conn, frame);
  Send(robot.conn, frame);
}

void RelayHub::Route(ConnId from, const Envelope& envelope, double now) {
  std::lock_guard lock(mu_);
  Touch(from, now);
  RouteLocked(from, envelope, now);
}

void RelayHub::RouteLocked(ConnId from, const Envelope& envelope, double now) {
  Conn& c = conns_.at(from);
  if (!c.attached) {
    throw Error(ErrorCode::kSessionClosed,
                c.role == Role::kRobot ? "robot is not registered" : "no open session");
  }
  const auto dir = TopicDirection(envelope.topic);
  if (!dir) throw Error(ErrorCode::kUnknownTopic, "unknown topic " + envelope.topic);
  if ((c.role == Role::kClient) != (*dir == Direction::kCommand)) {
    throw Error(ErrorCode::kWrongDirection,
                envelope.topic + (c.role == Role::kClient ? " is robot telemetry"
                                                          : " is a client command"));
  }
  ValidatePayload(envelope.topic, envelope.payload);
  if (c.seq_started && envelope.seq <= c.last_seq) {
    throw Error(ErrorCode::kBadSequence, "seq " + std::to_string(envelope.seq) +
                                             " not above " + std::to_string(c.last_seq));
  }
  Robot& robot = robots_.at(c.robot_id);
  if (c.role == Role::kClient) {
    Reevaluate(robot, now);
    if (robot.state != SessionState::kPaired) {
      throw Error(ErrorCode::kSessionDegraded, "robot link is stale");
    }
    c.seq_started = true;
    c.last_seq = envelope.seq;
    Send(robot.conn, DataFrame(envelope));
    ++stats_.routed;
    return;
  }
  c.seq_started = true;
  c.last_seq = envelope.seq;
  if (robot.client) {
    Send(*robot.client, DataFrame(envelope));
    ++stats_.routed;
  }
}

void RelayHub::HandleFrame(ConnId conn, std::string_view text, double now) {
  std::lock_guard lock(mu_);
  if (conns_.count(conn) == 0) return;
  HandleFrameLocked(conn, text, now);
}

void RelayHub::HandleFrameLocked(ConnId conn, std::string_view text, double now) {
  // Expire first, so a frame arriving after the close deadline does not
  // resurrect a session the watchdog has not yet visited.
  {
    Conn& c = conns_.at(conn);
    if (c.attached) {
      if (auto it = robots_.find(c.robot_id); it != robots_.end()) Reevaluate(it->second, now);
    }
  }
  Touch(conn, now);
  std::optional<std::int64_t> seq;
  try {
    const json frame = ParseFrame(text);
    const std::string type = frame["type"].get<std::string>();
    const auto text_field = [&](const char* key) {
      const auto it = frame.find(key);
      if (it == frame.end() || !it->is_string()) {
        throw Error(ErrorCode::kBadMessage, std::string(type) + " needs a string '" + key + "'");
      }
      return it->get<std::string>();
    };
    if (type == "keepalive") {
      Conn& c = conns_.at(conn);
      if (c.attached) {
        if (auto it = robots_.find(c.robot_id); it != robots_.end()) Reevaluate(it->second, now);
      }
    } else if (type == "register") {
      RegisterLocked(conn, text_field("id"), now);
    } else if (type == "connect") {
      ConnectLocked(conn, text_field("robot_id"), now);
    } else if (type == "data") {
      const auto env = frame.find("envelope");
      if (env == frame.end()) throw Error(ErrorCode::kBadMessage, "data frame without envelope");
      const Envelope e = EnvelopeFromJson(*env);
      seq = e.seq;
      RouteLocked(conn, e, now);
    } else {
      throw Error(ErrorCode::kBadMessage, "unknown frame type '" + type + "'");
    }
  } catch (const Error& e) {
    ++stats_.rejected;
    Send(conn, ErrorFrame(e.code(), e.what(), seq));
  }
}

void RelayHub::Monitor(double now) {
  std::lock_guard lock(mu_);
  std::vector<std::string> ids;
  ids.reserve(robots_.size());
  for (const auto& [id, robot] : robots_) ids.push_back(id);
  for (const std::string& id : ids) {
    if (auto it = robots_.find(id); it != robots_.end()) Reevaluate(it->second, now);
  }
}

std::optional<SessionState> RelayHub::StateOf(const std::string& robot_id) const {
  std::lock_guard lock(mu_);
  const auto it = robots_.find(robot_id);
  if (it == robots_.end()) return std::nullopt;
  return it->second.state;
}

std::optional<SessionState> RelayHub::ClientState(ConnId client) const {
  std::lock_guard lock(mu_);
  const auto it = conns_.find(client);
  if (it == conns_.end()) return std::nullopt;
  return it->second.last_state;
}

std::vector<std::string> RelayHub::Robots() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> out;
  for (const auto& [id, robot] : robots_) out.push_back(id);
  return out;
}

HubStats RelayHub::stats() const {
  std::lock_guard lock(mu_);
  return stats_;
}

}  // namespace uvbot::protocol
