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

#include "uvbot/protocol/client_session.h"

#include <algorithm>

namespace uvbot::protocol {

ClientSession::ClientSession(SendFn send) : send_(std::move(send)) {}

void ClientSession::Connect(std::string_view robot_id) {
  state_ = SessionState::kClientConnecting;
  send_(ConnectFrame(robot_id));
}

std::int64_t ClientSession::Send(std::string_view topic, json payload, double stamp) {
  if (state_ != SessionState::kPaired && state_ != SessionState::kDegraded) {
    throw Error(ErrorCode::kSessionClosed, "not paired");
  }
  const auto dir = TopicDirection(topic);
  if (!dir) throw Error(ErrorCode::kUnknownTopic, "unknown topic " + std::string(topic));
  if (*dir != Direction::kCommand) {
    throw Error(ErrorCode::kWrongDirection, std::string(topic) + " is robot telemetry");
  }
  ValidatePayload(topic, payload);
  Envelope e;
  e.topic = std::string(topic);
  e.seq = ++seq_;
  e.stamp = stamp;
  e.payload = std::move(payload);
  send_(DataFrame(e));
  return e.seq;
}

void ClientSession::HandleFrame(std::string_view text, double now) {
  json frame;
  try {
    frame = ParseFrame(text);
  } catch (const Error& e) {
    errors_.push_back({std::string(ErrorCodeName(e.code())), e.what(), std::nullopt});
    return;
  }
  const std::string type = frame["type"].get<std::string>();
  if (type == "paired") {
    state_ = SessionState::kPaired;
    rx_started_ = false;
    latest_.clear();
  } else if (type == "session") {
    const std::string s = frame.value("state", "");
    for (const SessionState st : {SessionState::kPaired, SessionState::kDegraded,
                                  SessionState::kClosed}) {
      if (s == SessionStateName(st)) state_ = st;
    }
  } else if (type == "error") {
    ReceivedError err{frame.value("code", ""), frame.value("message", ""), std::nullopt};
    if (const auto it = frame.find("seq"); it != frame.end() && it->is_number_integer()) {
      err.seq = it->get<std::int64_t>();
    }
    errors_.push_back(std::move(err));
  } else if (type == "data") {
    Envelope e;
    try {
      e = EnvelopeFromJson(frame["envelope"]);
    } catch (const Error& err) {
      errors_.push_back({std::string(ErrorCodeName(err.code())), err.what(), std::nullopt});
      return;
    }
    if (rx_started_ && e.seq > last_rx_seq_ + 1) {
      gaps_ += static_cast<std::uint64_t>(e.seq - last_rx_seq_ - 1);
    }
    rx_started_ = true;
    last_rx_seq_ = std::max(last_rx_seq_, e.seq);
    ++telemetry_count_;
    latest_[e.topic] = Entry{std::move(e.payload), now};
  }
}

std::optional<json> ClientSession::Latest(std::string_view topic) const {
  const auto it = latest_.find(topic);
  if (it == latest_.end()) return std::nullopt;
  return std::optional<json>(std::in_place, it->second.payload);
}

std::optional<double> ClientSession::LastUpdate(std::string_view topic) const {
  const auto it = latest_.find(topic);
  if (it == latest_.end()) return std::nullopt;
  return it->second.received;
}

}  // namespace uvbot::protocol
