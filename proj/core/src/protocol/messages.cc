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

#include "uvbot/protocol/messages.h"

#include <algorithm>
#include <array>
#include <vector>

#include "uvbot/nav/autonomy_level.h"

namespace uvbot::protocol {
namespace {

enum class Kind { kNumber, kBool, kString, kArray, kObject };

struct Field {
  std::string_view name;
  Kind kind;
  bool required;
};

struct Schema {
  std::string_view topic;
  Direction direction;
  std::vector<Field> fields;
};

constexpr Field Num(std::string_view n) { return {n, Kind::kNumber, true}; }
constexpr Field OptNum(std::string_view n) { return {n, Kind::kNumber, false}; }

const std::array<Schema, 18>& Schemas() {
  static const std::array<Schema, 18> kSchemas{{
      {topic::kVel, Direction::kCommand, {Num("v"), Num("w")}},
      {topic::kManualTarget, Direction::kCommand, {Num("x"), Num("y")}},
      {topic::kGoal, Direction::kCommand, {Num("x"), Num("y"), OptNum("theta")}},
      {topic::kCancelGoal, Direction::kCommand, {}},
      {topic::kAutonomy, Direction::kCommand, {{"level", Kind::kString, true}}},
      {topic::kLamp, Direction::kCommand, {{"on", Kind::kBool, true}}},
      {topic::kHeartbeat, Direction::kCommand, {}},
      {topic::kScanRequest, Direction::kCommand, {}},
      {topic::kPose, Direction::kTelemetry, {Num("x"), Num("y"), Num("theta")}},
      {topic::kScan, Direction::kTelemetry,
       {Num("angle_min"), Num("increment"), {"ranges", Kind::kArray, true}}},
      {topic::kScanFull, Direction::kTelemetry,
       {Num("angle_min"), Num("increment"), {"ranges", Kind::kArray, true}}},
      {topic::kMode, Direction::kTelemetry, {{"level", Kind::kString, true}}},
      {topic::kLampState, Direction::kTelemetry,
       {{"on", Kind::kBool, true}, {"forced_off", Kind::kBool, true}}},
      {topic::kBattery, Direction::kTelemetry, {Num("wh"), Num("fraction")}},
      {topic::kDose, Direction::kTelemetry, {Num("covered_fraction"), Num("min"), Num("mean")}},
      {topic::kGoalStatus, Direction::kTelemetry, {{"state", Kind::kString, true}}},
      {topic::kLink, Direction::kTelemetry, {Num("gaps"), Num("last_seq")}},
      {topic::kError, Direction::kTelemetry, {{"code", Kind::kString, true}}},
  }};
  return kSchemas;
}

const Schema* FindSchema(std::string_view name) {
  for (const Schema& s : Schemas()) {
    if (s.topic == name) return &s;
  }
  return nullptr;
}

bool HasKind(const json& v, Kind kind) {
  switch (kind) {
    case Kind::kNumber: return v.is_number();
    case Kind::kBool: return v.is_boolean();
    case Kind::kString: return v.is_string();
    case Kind::kArray: return v.is_array();
    case Kind::kObject: return v.is_object();
  }
  return false;
}

std::string Dump(const json& j) { return j.dump(); }

}  // namespace

bool IsValidPeerId(std::string_view id) {
  if (id.empty() || id.size() > 64) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '-' || c == '_';
  });
}

std::string_view SessionStateName(SessionState state) {
  switch (state) {
    case SessionState::kRobotRegistered: return "RobotRegistered";
    case SessionState::kClientConnecting: return "ClientConnecting";
    case SessionState::kPaired: return "Paired";
    case SessionState::kDegraded: return "Degraded";
    case SessionState::kClosed: return "Closed";
  }
  return "Closed";
}

std::optional<Direction> TopicDirection(std::string_view topic) {
  const Schema* s = FindSchema(topic);
  if (s == nullptr) return std::nullopt;
  return s->direction;
}

void ValidatePayload(std::string_view topic, const json& payload) {
  const Schema* s = FindSchema(topic);
  if (s == nullptr) throw Error(ErrorCode::kUnknownTopic, "unknown topic " + std::string(topic));
  if (!payload.is_object()) {
    throw Error(ErrorCode::kBadPayload, std::string(topic) + ": payload must be an object");
  }
  for (const Field& f : s->fields) {
    const auto it = payload.find(f.name);
    if (it == payload.end()) {
      if (f.required) {
        throw Error(ErrorCode::kBadPayload,
                    std::string(topic) + ": missing '" + std::string(f.name) + "'");
      }
      continue;
    }
    if (!HasKind(*it, f.kind)) {
      throw Error(ErrorCode::kBadPayload,
                  std::string(topic) + ": bad type for '" + std::string(f.name) + "'");
    }
  }
  if (topic == topic::kAutonomy &&
      !ParseAutonomyLevel(payload["level"].get<std::string>())) {
    throw Error(ErrorCode::kBadPayload, "unknown autonomy level");
  }
}

json EnvelopeToJson(const Envelope& e) {
  return {{"topic", e.topic}, {"seq", e.seq}, {"stamp", e.stamp}, {"payload", e.payload}};
}

Envelope EnvelopeFromJson(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kBadMessage, "envelope must be an object");
  const auto topic = j.find("topic");
  const auto seq = j.find("seq");
  const auto stamp = j.find("stamp");
  const auto payload = j.find("payload");
  if (topic == j.end() || !topic->is_string()) {
    throw Error(ErrorCode::kBadMessage, "envelope needs a string 'topic'");
  }
  if (seq == j.end() || !seq->is_number_integer()) {
    throw Error(ErrorCode::kBadMessage, "envelope needs an integer 'seq'");
  }
  if (stamp == j.end() || !stamp->is_number()) {
    throw Error(ErrorCode::kBadMessage, "envelope needs a numeric 'stamp'");
  }
  Envelope e;
  e.topic = topic->get<std::string>();
  e.seq = seq->get<std::int64_t>();
  e.stamp = stamp->get<double>();
  e.payload = payload == j.end() ? json::object() : *payload;
  return e;
}

json ParseFrame(std::string_view text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw Error(ErrorCode::kBadMessage, "frame is not valid JSON");
  if (!j.is_object()) throw Error(ErrorCode::kBadMessage, "frame must be a JSON object");
  const auto type = j.find("type");
  if (type == j.end() || !type->is_string()) {
    throw Error(ErrorCode::kBadMessage, "frame needs a string 'type'");
  }
  return j;
}

std::string RegisterFrame(std::string_view id) { return Dump({{"type", "register"}, {"id", id}}); }

std::string RegisteredFrame(std::string_view id) {
  return Dump({{"type", "registered"}, {"id", id}});
}

std::string ConnectFrame(std::string_view robot_id) {
  return Dump({{"type", "connect"}, {"robot_id", robot_id}});
}

std::string PairedFrame(std::string_view robot_id) {
  return Dump({{"type", "paired"}, {"robot_id", robot_id}});
}

std::string SessionFrame(SessionState state, std::string_view reason) {
  return Dump({{"type", "session"}, {"state", SessionStateName(state)}, {"reason", reason}});
}

std::string KeepaliveFrame() { return Dump({{"type", "keepalive"}}); }

std::string ExpiredFrame() { return Dump({{"type", "expired"}}); }

std::string ErrorFrame(ErrorCode code, std::string_view message, std::optional<std::int64_t> seq) {
  json j{{"type", "error"}, {"code", ErrorCodeName(code)}, {"message", message}};
  if (seq) j["seq"] = *seq;
  return Dump(j);
}

std::string DataFrame(const Envelope& e) {
  return Dump({{"type", "data"}, {"envelope", EnvelopeToJson(e)}});
}

json GridToJson(const OccupancyGrid& grid) {
  std::vector<int> data;
  data.reserve(grid.cells().size());
  for (const Occupancy o : grid.cells()) {
    data.push_back(o == Occupancy::kFree ? 0 : o == Occupancy::kOccupied ? 100 : -1);
  }
  const Pose2D& o = grid.origin();
  return {{"width", grid.width()},
          {"height", grid.height()},
          {"resolution", grid.resolution()},
          {"origin", {o.x, o.y, o.theta}},
          {"data", data}};
}

}  // namespace uvbot::protocol
