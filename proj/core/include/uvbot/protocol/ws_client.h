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

// Minimal blocking-style WebSocket client for tools and tests. Frames are
// read on a background thread and queued; Send may be called from any
// thread.

#ifndef UVBOT_PROTOCOL_WS_CLIENT_H_
#define UVBOT_PROTOCOL_WS_CLIENT_H_

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace uvbot::protocol {

class WsClient {
 public:
  WsClient();
  ~WsClient();

  WsClient(const WsClient&) = delete;
  WsClient& operator=(const WsClient&) = delete;

  // Throws Error(kIoError) when the connection or handshake fails.
  void Connect(const std::string& host, std::uint16_t port, const std::string& path);
  void Send(std::string text);
  // Next received frame, or nullopt on timeout or once closed and drained.
  std::optional<std::string> Receive(std::chrono::milliseconds timeout);
  void Close();
  bool is_open() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Plain HTTP GET helper returning the body; throws Error(kIoError).
std::string HttpGet(const std::string& host, std::uint16_t port, const std::string& target);

}  // namespace uvbot::protocol

#endif  // UVBOT_PROTOCOL_WS_CLIENT_H_
