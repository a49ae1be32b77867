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

// WebSocket transport for RelayHub.
//
// Endpoints: /ws/robot and /ws/client (WebSocket upgrade), GET /map (the
// served map as JSON) and GET /health. The hub runs on the wall clock,
// measured in seconds since Start().

#ifndef UVBOT_PROTOCOL_WS_SERVER_H_
#define UVBOT_PROTOCOL_WS_SERVER_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "uvbot/protocol/relay_hub.h"

namespace uvbot::protocol {

struct ServerOptions {
  std::string address = "127.0.0.1";
  // 0 picks a free port.
  std::uint16_t port = 0;
  HubConfig hub{};
  std::chrono::milliseconds monitor_period{100};
  // Body for GET /map; 404 when unset.
  std::function<std::string()> map_json;
};

class RelayServer {
 public:
  explicit RelayServer(ServerOptions options);
  ~RelayServer();

  RelayServer(const RelayServer&) = delete;
  RelayServer& operator=(const RelayServer&) = delete;

  // Binds and starts serving on a background thread. Throws Error(kIoError)
  // if the address cannot be bound (e.g. port in use).
  void Start();
  void Stop();

  std::uint16_t port() const;
  RelayHub& hub();
  // Hub clock: seconds since Start().
  double Now() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace uvbot::protocol

#endif  // UVBOT_PROTOCOL_WS_SERVER_H_
