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
#include <gtest/gtest.h>

#include <chrono>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "uvbot/common/error.h"
#include "uvbot/protocol/messages.h"
#include "uvbot/protocol/ws_client.h"
#include "uvbot/protocol/ws_server.h"

namespace uvbot::protocol {
namespace {

using namespace std::chrono_literals;

// Next frame of the given type, skipping keepalives and telemetry noise.
std::optional<json> Await(WsClient& ws, std::string_view type,
                          std::chrono::milliseconds timeout = 3000ms) {
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  while (std::chrono::steady_clock::now() < deadline) {
    const auto frame = ws.Receive(100ms);
    if (!frame) continue;
    json j = json::parse(*frame);
    if (j["type"] == type) return j;
  }
  return std::nullopt;
}

class ServerTest : public ::testing::Test {
 protected:
  ServerTest() : server_(Options()) { server_.Start(); }
  static ServerOptions Options() {
    ServerOptions o;
    o.map_json = [] { return GridToJson(OccupancyGrid(4, 3, 0.5)).dump(); };
    return o;
  }
  RelayServer server_;
};

TEST_F(ServerTest, HealthAndMap) {
  EXPECT_EQ(json::parse(HttpGet("127.0.0.1", server_.port(), "/health"))["ok"], true);
  const json map = json::parse(HttpGet("127.0.0.1", server_.port(), "/map"));
  EXPECT_EQ(map["width"], 4);
  EXPECT_EQ(map["height"], 3);
  EXPECT_THROW(HttpGet("127.0.0.1", server_.port(), "/nothing"), Error);
}

TEST_F(ServerTest, PairsAndRoutes) {
  WsClient robot;
  robot.Connect("127.0.0.1", server_.port(), "/ws/robot");
  robot.Send(RegisterFrame("r1"));
  ASSERT_TRUE(Await(robot, "registered"));

  WsClient client;
  client.Connect("127.0.0.1", server_.port(), "/ws/client");
  client.Send(ConnectFrame("r1"));
  ASSERT_TRUE(Await(client, "paired"));
  ASSERT_TRUE(Await(robot, "paired"));
  EXPECT_EQ(server_.hub().StateOf("r1"), SessionState::kPaired);

  client.Send(DataFrame({std::string(topic::kLamp), 1, 0.0, {{"on", true}}}));
  const auto cmd = Await(robot, "data");
  ASSERT_TRUE(cmd);
  EXPECT_EQ((*cmd)["envelope"]["topic"], topic::kLamp);
  EXPECT_EQ((*cmd)["envelope"]["payload"]["on"], true);

  robot.Send(DataFrame({std::string(topic::kPose), 1, 0.0, {{"x", 1}, {"y", 2}, {"theta", 0}}}));
  const auto tel = Await(client, "data");
  ASSERT_TRUE(tel);
  EXPECT_EQ((*tel)["envelope"]["payload"]["y"], 2);

  client.Send(DataFrame({std::string(topic::kPose), 2, 0.0, {{"x", 1}, {"y", 2}, {"theta", 0}}}));
  const auto err = Await(client, "error");
  ASSERT_TRUE(err);
  EXPECT_EQ((*err)["code"], "WrongDirection");

  WsClient intruder;
  intruder.Connect("127.0.0.1", server_.port(), "/ws/client");
  intruder.Send(ConnectFrame("r1"));
  const auto busy = Await(intruder, "error");
  ASSERT_TRUE(busy);
  EXPECT_EQ((*busy)["code"], "RobotBusy");

  client.Close();
  const auto closed = Await(robot, "session");
  ASSERT_TRUE(closed);
  EXPECT_EQ((*closed)["state"], "Closed");
}

TEST_F(ServerTest, SilentClientDegrades) {
  WsClient robot;
  robot.Connect("127.0.0.1", server_.port(), "/ws/robot");
  robot.Send(RegisterFrame("r1"));
  ASSERT_TRUE(Await(robot, "registered"));
  WsClient client;
  client.Connect("127.0.0.1", server_.port(), "/ws/client");
  client.Send(ConnectFrame("r1"));
  ASSERT_TRUE(Await(client, "paired"));
  // The robot keeps talking; the client says nothing.
  std::optional<json> degraded;
  const auto deadline = std::chrono::steady_clock::now() + 6s;
  while (!degraded && std::chrono::steady_clock::now() < deadline) {
    robot.Send(KeepaliveFrame());
    degraded = Await(client, "session", 300ms);
  }
  ASSERT_TRUE(degraded);
  EXPECT_EQ((*degraded)["state"], "Degraded");
  EXPECT_EQ((*degraded)["reason"], "ClientTimeout");
  EXPECT_GE(server_.Now(), 3.0);
}

TEST(Server, UnknownEndpointRefusesUpgrade) {
  RelayServer server({});
  server.Start();
  WsClient ws;
  EXPECT_THROW(ws.Connect("127.0.0.1", server.port(), "/ws/other"), Error);
  EXPECT_THROW(HttpGet("127.0.0.1", server.port(), "/map"), Error);
}

TEST(Server, PortInUse) {
  RelayServer first({});
  first.Start();
  ServerOptions o;
  o.port = first.port();
  RelayServer second(o);
  EXPECT_THROW(second.Start(), Error);
}

}  // namespace
}  // namespace uvbot::protocol
