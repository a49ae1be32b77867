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

// Operator end of the relay: sequence numbering, heartbeats and a
// last-value-wins store of telemetry per topic.

#ifndef UVBOT_PROTOCOL_CLIENT_SESSION_H_
#define UVBOT_PROTOCOL_CLIENT_SESSION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uvbot/protocol/messages.h"
#include "uvbot/protocol/relay_hub.h"

namespace uvbot::protocol {

struct ReceivedError {
  std::string code;
  std::string message;
  std::optional<std::int64_t> seq;
};

class ClientSession {
 public:
  explicit ClientSession(SendFn send);

  void Connect(std::string_view robot_id);

  // Sends a command envelope and returns its seq. Throws
  // Error(kSessionClosed) unless paired (or degraded), Error(kUnknownTopic),
  // Error(kWrongDirection) or Error(kBadPayload) for a malformed command;
  // nothing is sent in those cases.
  std::int64_t Send(std::string_view topic, json payload, double stamp);
  std::int64_t Heartbeat(double stamp) { return Send(topic::kHeartbeat, json::object(), stamp); }

  void HandleFrame(std::string_view text, double now);

  // Nullopt before Connect().
  std::optional<SessionState> state() const { return state_; }
  bool paired() const { return state_ == SessionState::kPaired; }

  // Latest payload per telemetry topic.
  std::optional<json> Latest(std::string_view topic) const;
  // Time (receiver clock) the topic was last updated.
  std::optional<double> LastUpdate(std::string_view topic) const;
  std::uint64_t telemetry_count() const { return telemetry_count_; }
  std::uint64_t telemetry_gaps() const { return gaps_; }
  const std::vector<ReceivedError>& errors() const { return errors_; }
  std::int64_t last_sent_seq() const { return seq_; }

 private:
  struct Entry {
    json payload;
    double received = 0.0;
  };

  SendFn send_;
  std::optional<SessionState> state_;
  std::int64_t seq_ = 0;
  std::int64_t last_rx_seq_ = 0;
  bool rx_started_ = false;
  std::uint64_t gaps_ = 0;
  std::uint64_t telemetry_count_ = 0;
  std::map<std::string, Entry, std::less<>> latest_;
  std::vector<ReceivedError> errors_;
};

}  // namespace uvbot::protocol

#endif  // UVBOT_PROTOCOL_CLIENT_SESSION_H_
