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

// Wire format of the relay: one UTF-8 JSON object per WebSocket text frame.
//
// Signaling frames:
//   {"type":"register","id":"..."}          robot -> relay
//   {"type":"registered","id":"..."}        relay -> robot
//   {"type":"connect","robot_id":"..."}     client -> relay
//   {"type":"paired","robot_id":"..."}      relay -> both ends
//   {"type":"session","state":"...","reason":"..."}  relay -> both ends
//   {"type":"keepalive"}                    robot -> relay
//   {"type":"expired"}                      relay -> robot
//   {"type":"error","code":"...","message":"..."}
// Data frames:
//   {"type":"data","envelope":{"topic":..,"seq":..,"stamp":..,"payload":{..}}}

#ifndef UVBOT_PROTOCOL_MESSAGES_H_
#define UVBOT_PROTOCOL_MESSAGES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "uvbot/common/error.h"
#include "uvbot/world/occupancy_grid.h"

namespace uvbot::protocol {

using nlohmann::json;

inline constexpr double kHeartbeatInterval = 1.0;
inline constexpr double kHeartbeatTimeout = 3.0;
inline constexpr double kCloseTimeout = 15.0;

// 1 to 64 characters from [A-Za-z0-9_-].
bool IsValidPeerId(std::string_view id);

enum class SessionState { kRobotRegistered, kClientConnecting, kPaired, kDegraded, kClosed };

std::string_view SessionStateName(SessionState state);

// Commands flow client -> robot, telemetry robot -> client.
enum class Direction { kCommand, kTelemetry };

namespace topic {
inline constexpr std::string_view kVel = "/cmd/vel";
inline constexpr std::string_view kManualTarget = "/cmd/manual_target";
inline constexpr std::string_view kGoal = "/cmd/goal";
inline constexpr std::string_view kCancelGoal = "/cmd/cancel_goal";
inline constexpr std::string_view kAutonomy = "/cmd/autonomy";
inline constexpr std::string_view kLamp = "/cmd/lamp";
inline constexpr std::string_view kHeartbeat = "/cmd/heartbeat";
inline constexpr std::string_view kScanRequest = "/cmd/scan_full";

inline constexpr std::string_view kPose = "/telemetry/pose";
inline constexpr std::string_view kScan = "/telemetry/scan";
inline constexpr std::string_view kScanFull = "/telemetry/scan_full";
inline constexpr std::string_view kMode = "/telemetry/mode";
inline constexpr std::string_view kLampState = "/telemetry/lamp";
inline constexpr std::string_view kBattery = "/telemetry/battery";
inline constexpr std::string_view kDose = "/telemetry/dose";
inline constexpr std::string_view kGoalStatus = "/telemetry/goal_status";
inline constexpr std::string_view kLink = "/telemetry/link";
inline constexpr std::string_view kError = "/telemetry/error";
}  // namespace topic

// Direction of a registered topic, nullopt for unknown topics.
std::optional<Direction> TopicDirection(std::string_view topic);

// Checks the payload against the topic schema. Throws Error(kUnknownTopic)
// or Error(kBadPayload).
void ValidatePayload(std::string_view topic, const json& payload);

struct Envelope {
  std::string topic;
  std::int64_t seq = 0;
  double stamp = 0.0;
  json payload = json::object();
};

json EnvelopeToJson(const Envelope& e);
// Throws Error(kBadMessage) when fields are missing or mistyped. The topic
// itself is not checked here.
Envelope EnvelopeFromJson(const json& j);

// Parses one frame. Throws Error(kBadMessage) for non-JSON text, a
// non-object or a missing "type".
json ParseFrame(std::string_view text);

std::string RegisterFrame(std::string_view id);
std::string RegisteredFrame(std::string_view id);
std::string ConnectFrame(std::string_view robot_id);
std::string PairedFrame(std::string_view robot_id);
std::string SessionFrame(SessionState state, std::string_view reason = {});
std::string KeepaliveFrame();
std::string ExpiredFrame();
std::string ErrorFrame(ErrorCode code, std::string_view message,
                       std::optional<std::int64_t> seq = std::nullopt);
std::string DataFrame(const Envelope& e);

// Map served to consoles: {width, height, resolution, origin: [x, y, theta],
// data: row-major from the bottom row, 0 free / 100 occupied / -1 unknown}.
json GridToJson(const OccupancyGrid& grid);

}  // namespace uvbot::protocol

#endif  // UVBOT_PROTOCOL_MESSAGES_H_
