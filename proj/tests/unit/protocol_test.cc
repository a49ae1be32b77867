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

#include <string>
#include <vector>

#include "support/loopback.h"
#include "uvbot/common/error.h"
#include "uvbot/protocol/client_session.h"
#include "uvbot/protocol/messages.h"
#include "uvbot/protocol/relay_hub.h"

namespace uvbot::protocol {
namespace {

// A hub connection whose outgoing frames are parsed and kept.
struct Peer {
  RelayHub* hub = nullptr;
  ConnId conn = 0;
  std::vector<json> inbox;

  Peer(RelayHub& h, Role role) : hub(&h) {
    conn = h.Open(role, [this](std::string_view f) { inbox.push_back(json::parse(f)); });
  }
  void Frame(const std::string& text, double now) { hub->HandleFrame(conn, text, now); }
  void Data(std::string_view topic, std::int64_t seq, json payload, double now) {
    Frame(DataFrame({std::string(topic), seq, now, std::move(payload)}), now);
  }
  const json& last() const { return inbox.back(); }
  bool LastIsError(ErrorCode code) const {
    return !inbox.empty() && last()["type"] == "error" && last()["code"] == ErrorCodeName(code);
  }
};

TEST(Messages, PeerIds) {
  EXPECT_TRUE(IsValidPeerId("uvbot-1_A"));
  EXPECT_FALSE(IsValidPeerId(""));
  EXPECT_FALSE(IsValidPeerId("has space"));
  EXPECT_FALSE(IsValidPeerId(std::string(65, 'a')));
  EXPECT_TRUE(IsValidPeerId(std::string(64, 'a')));
}

TEST(Messages, TopicDirections) {
  EXPECT_EQ(TopicDirection(topic::kVel), Direction::kCommand);
  EXPECT_EQ(TopicDirection(topic::kHeartbeat), Direction::kCommand);
  EXPECT_EQ(TopicDirection(topic::kPose), Direction::kTelemetry);
  EXPECT_EQ(TopicDirection(topic::kLink), Direction::kTelemetry);
  EXPECT_FALSE(TopicDirection("/cmd/fly").has_value());
}

TEST(Messages, PayloadValidation) {
  EXPECT_NO_THROW(ValidatePayload(topic::kVel, {{"v", 0.1}, {"w", 0}}));
  EXPECT_NO_THROW(ValidatePayload(topic::kGoal, {{"x", 1}, {"y", 2}}));
  EXPECT_NO_THROW(ValidatePayload(topic::kAutonomy, {{"level", "Autonomous"}}));
  const auto code = [](std::string_view t, const json& p) {
    try {
      ValidatePayload(t, p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code(topic::kVel, {{"v", 0.1}}), ErrorCode::kBadPayload);
  EXPECT_EQ(code(topic::kVel, {{"v", "fast"}, {"w", 0}}), ErrorCode::kBadPayload);
  EXPECT_EQ(code(topic::kLamp, {{"on", 1}}), ErrorCode::kBadPayload);
  EXPECT_EQ(code(topic::kLamp, json::array()), ErrorCode::kBadPayload);
  EXPECT_EQ(code(topic::kAutonomy, {{"level", "Turbo"}}), ErrorCode::kBadPayload);
  EXPECT_EQ(code("/cmd/fly", json::object()), ErrorCode::kUnknownTopic);
}

TEST(Messages, EnvelopeRoundTrip) {
  const Envelope e{std::string(topic::kLamp), 42, 1.25, {{"on", true}}};
  const Envelope back = EnvelopeFromJson(EnvelopeToJson(e));
  EXPECT_EQ(back.topic, e.topic);
  EXPECT_EQ(back.seq, 42);
  EXPECT_EQ(back.stamp, 1.25);
  EXPECT_EQ(back.payload, e.payload);
  EXPECT_THROW(EnvelopeFromJson({{"topic", "/cmd/lamp"}, {"seq", 1.5}, {"stamp", 0}}), Error);
  EXPECT_THROW(EnvelopeFromJson({{"seq", 1}, {"stamp", 0}}), Error);
  EXPECT_THROW(EnvelopeFromJson(json::array()), Error);
}

TEST(Messages, FrameParsing) {
  EXPECT_THROW(ParseFrame("{"), Error);
  EXPECT_THROW(ParseFrame("[]"), Error);
  EXPECT_THROW(ParseFrame(R"({"type": 3})"), Error);
  EXPECT_EQ(ParseFrame(KeepaliveFrame())["type"], "keepalive");
  const json err = json::parse(ErrorFrame(ErrorCode::kRobotBusy, "busy", 7));
  EXPECT_EQ(err["code"], "RobotBusy");
  EXPECT_EQ(err["seq"], 7);
  const json s = json::parse(SessionFrame(SessionState::kDegraded, "ClientTimeout"));
  EXPECT_EQ(s["state"], "Degraded");
  EXPECT_EQ(s["reason"], "ClientTimeout");
}

TEST(Messages, GridJson) {
  OccupancyGrid g(3, 2, 0.5, {1.0, 2.0});
  g.set({1, 0}, Occupancy::kOccupied);
  g.set({2, 1}, Occupancy::kUnknown);
  const json j = GridToJson(g);
  EXPECT_EQ(j["width"], 3);
  EXPECT_EQ(j["height"], 2);
  EXPECT_EQ(j["resolution"], 0.5);
}

TEST(Hub, RegisterAndPair) {
  RelayHub hub;
  Peer robot(hub, Role::kRobot);
  Peer client(hub, Role::kClient);
  robot.Frame(RegisterFrame("r1"), 0.0);
  EXPECT_EQ(robot.last()["type"], "registered");
  EXPECT_EQ(hub.StateOf("r1"), SessionState::kRobotRegistered);
  client.Frame(ConnectFrame("r1"), 0.1);
  EXPECT_EQ(client.last()["type"], "paired");
  EXPECT_EQ(robot.last()["type"], "paired");
  EXPECT_EQ(hub.StateOf("r1"), SessionState::kPaired);
  EXPECT_EQ(hub.ClientState(client.conn), SessionState::kPaired);
  EXPECT_EQ(hub.Robots(), std::vector<std::string>{"r1"});
}

TEST(Hub, RegistrationErrors) {
  RelayHub hub;
  Peer a(hub, Role::kRobot);
  Peer b(hub, Role::kRobot);
  Peer c(hub, Role::kClient);
  a.Frame(RegisterFrame("r1"), 0.0);
  b.Frame(RegisterFrame("r1"), 0.5);
  EXPECT_TRUE(b.LastIsError(ErrorCode::kDuplicateId));
  b.Frame(RegisterFrame("bad id"), 0.5);
  EXPECT_TRUE(b.LastIsError(ErrorCode::kInvalidId));
  c.Frame(RegisterFrame("r2"), 0.5);
  EXPECT_TRUE(c.LastIsError(ErrorCode::kBadMessage));
  c.Frame(ConnectFrame("nobody"), 0.5);
  EXPECT_TRUE(c.LastIsError(ErrorCode::kUnknownRobot));
  c.Frame(R"({"type": "dance"})", 0.5);
  EXPECT_TRUE(c.LastIsError(ErrorCode::kBadMessage));
  c.Frame("not json", 0.5);
  EXPECT_TRUE(c.LastIsError(ErrorCode::kBadMessage));
  EXPECT_EQ(hub.stats().rejected, 6u);
}

TEST(Hub, SilentRegistrationExpires) {
  RelayHub hub;
  Peer old_robot(hub, Role::kRobot);
  Peer new_robot(hub, Role::kRobot);
  old_robot.Frame(RegisterFrame("r1"), 0.0);
  new_robot.Frame(RegisterFrame("r1"), 2.9);
  EXPECT_TRUE(new_robot.LastIsError(ErrorCode::kDuplicateId));
  new_robot.Frame(RegisterFrame("r1"), 3.1);
  EXPECT_EQ(new_robot.last()["type"], "registered");
  EXPECT_EQ(old_robot.last()["type"], "expired");
}

TEST(Hub, MonitorExpiresUnpairedRobot) {
  RelayHub hub;
  Peer robot(hub, Role::kRobot);
  robot.Frame(RegisterFrame("r1"), 0.0);
  hub.Monitor(2.0);
  EXPECT_TRUE(hub.StateOf("r1").has_value());
  robot.Frame(KeepaliveFrame(), 2.5);
  hub.Monitor(5.0);
  EXPECT_TRUE(hub.StateOf("r1").has_value());
  hub.Monitor(5.6);
  EXPECT_FALSE(hub.StateOf("r1").has_value());
}

TEST(Hub, SecondClientIsBusy) {
  RelayHub hub;
  Peer robot(hub, Role::kRobot);
  robot.Frame(RegisterFrame("r1"), 0.0);
  std::vector<std::unique_ptr<Peer>> clients;
  for (int i = 0; i < 100; ++i) {
    clients.push_back(std::make_unique<Peer>(hub, Role::kClient));
    clients.back()->Frame(ConnectFrame("r1"), 0.01 * i);
  }
  int paired = 0;
  int busy = 0;
  for (const auto& c : clients) {
    if (c->last()["type"] == "paired") ++paired;
    if (c->LastIsError(ErrorCode::kRobotBusy)) ++busy;
  }
  EXPECT_EQ(paired, 1);
  EXPECT_EQ(busy, 99);
  EXPECT_EQ(clients.front()->last()["type"], "paired");
}

TEST(Hub, ClientLeavingFreesRobot) {
  RelayHub hub;
  Peer robot(hub, Role::kRobot);
  robot.Frame(RegisterFrame("r1"), 0.0);
  auto first = std::make_unique<Peer>(hub, Role::kClient);
  first->Frame(ConnectFrame("r1"), 0.1);
  hub.Close(first->conn, 0.2);
  EXPECT_EQ(robot.last()["type"], "session");
  EXPECT_EQ(robot.last()["state"], "Closed");
  EXPECT_EQ(robot.last()["reason"], "ClientGone");
  EXPECT_EQ(hub.StateOf("r1"), SessionState::kRobotRegistered);
  Peer second(hub, Role::kClient);
  second.Frame(ConnectFrame("r1"), 0.3);
  EXPECT_EQ(second.last()["type"], "paired");
}

TEST(Hub, RobotLeavingClosesSession) {
  RelayHub hub;
  Peer robot(hub, Role::kRobot);
  Peer client(hub, Role::kClient);
  robot.Frame(RegisterFrame("r1"), 0.0);
  client.Frame(ConnectFrame("r1"), 0.0);
  hub.Close(robot.conn, 0.5);
  EXPECT_EQ(client.last()["state"], "Closed");
  EXPECT_EQ(client.last()["reason"], "RobotGone");
  EXPECT_FALSE(hub.StateOf("r1").has_value());
  client.Data(topic::kLamp, 1, {{"on", true}}, 0.6);
  EXPECT_TRUE(client.LastIsError(ErrorCode::kSessionClosed));
}

TEST(Hub, RoutesInOrderBothWays) {
  RelayHub hub;
  Peer robot(hub, Role::kRobot);
  Peer client(hub, Role::kClient);
  robot.Frame(RegisterFrame("r1"), 0.0);
  client.Frame(ConnectFrame("r1"), 0.0);
  robot.inbox.clear();
  client.inbox.clear();
  for (int i = 1; i <= 50; ++i) {
    client.Data(topic::kVel, i, {{"v", 0.01 * i}, {"w", 0.0}}, 0.01 * i);
    robot.Data(topic::kPose, i, {{"x", i}, {"y", 0}, {"theta", 0}}, 0.01 * i);
  }
  ASSERT_EQ(robot.inbox.size(), 50u);
  ASSERT_EQ(client.inbox.size(), 50u);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(robot.inbox[i]["envelope"]["seq"], i + 1);
    EXPECT_EQ(robot.inbox[i]["envelope"]["topic"], topic::kVel);
    EXPECT_EQ(client.inbox[i]["envelope"]["seq"], i + 1);
    EXPECT_EQ(client.inbox[i]["envelope"]["payload"]["x"], i + 1);
  }
  EXPECT_EQ(hub.stats().routed, 100u);
}

TEST(Hub, RejectsMisroutedAndStale) {
  RelayHub hub;
  Peer robot(hub, Role::kRobot);
  Peer client(hub, Role::kClient);
  robot.Frame(RegisterFrame("r1"), 0.0);
  client.Frame(ConnectFrame("r1"), 0.0);
  robot.inbox.clear();
  client.Data(topic::kPose, 1, {{"x", 0}, {"y", 0}, {"theta", 0}}, 0.1);
  EXPECT_TRUE(client.LastIsError(ErrorCode::kWrongDirection));
  robot.Data(topic::kLamp, 1, {{"on", true}}, 0.1);
  EXPECT_TRUE(robot.LastIsError(ErrorCode::kWrongDirection));
  robot.inbox.clear();
  client.Data("/cmd/fly", 1, json::object(), 0.1);
  EXPECT_TRUE(client.LastIsError(ErrorCode::kUnknownTopic));
  client.Data(topic::kVel, 1, {{"v", 1}}, 0.1);
  EXPECT_TRUE(client.LastIsError(ErrorCode::kBadPayload));
  EXPECT_EQ(client.last()["seq"], 1);
  client.Data(topic::kVel, 5, {{"v", 0}, {"w", 0}}, 0.2);
  client.Data(topic::kVel, 5, {{"v", 0}, {"w", 0}}, 0.3);
  EXPECT_TRUE(client.LastIsError(ErrorCode::kBadSequence));
  client.Data(topic::kVel, 4, {{"v", 0}, {"w", 0}}, 0.3);
  EXPECT_TRUE(client.LastIsError(ErrorCode::kBadSequence));
  client.Data(topic::kVel, 9, {{"v", 0}, {"w", 0}}, 0.4);
  ASSERT_EQ(robot.inbox.size(), 2u);
  EXPECT_EQ(robot.inbox[1]["envelope"]["seq"], 9);
}

TEST(Hub, DegradesThenResumesThenCloses) {
  RelayHub hub;
  Peer robot(hub, Role::kRobot);
  Peer client(hub, Role::kClient);
  robot.Frame(RegisterFrame("r1"), 0.0);
  client.Frame(ConnectFrame("r1"), 0.0);
  for (double t = 0.5; t <= 3.0; t += 0.5) robot.Frame(KeepaliveFrame(), t);
  hub.Monitor(3.0);
  EXPECT_EQ(hub.StateOf("r1"), SessionState::kPaired);
  robot.Frame(KeepaliveFrame(), 3.5);
  hub.Monitor(3.5);
  EXPECT_EQ(hub.StateOf("r1"), SessionState::kDegraded);
  EXPECT_EQ(client.last()["state"], "Degraded");
  EXPECT_EQ(client.last()["reason"], "ClientTimeout");
  client.Data(topic::kHeartbeat, 1, json::object(), 3.6);
  EXPECT_EQ(hub.StateOf("r1"), SessionState::kPaired);
  EXPECT_EQ(robot.inbox.back()["type"], "data");
  for (double t = 4.0; t <= 18.5; t += 0.5) robot.Frame(KeepaliveFrame(), t);
  hub.Monitor(18.5);
  EXPECT_EQ(hub.StateOf("r1"), SessionState::kDegraded);
  hub.Monitor(18.7);
  EXPECT_EQ(client.last()["state"], "Closed");
  EXPECT_EQ(hub.StateOf("r1"), SessionState::kRobotRegistered);
  EXPECT_EQ(hub.ClientState(client.conn), SessionState::kClosed);
}

TEST(Hub, DegradedRejectsCommandsFromStaleSide) {
  RelayHub hub;
  Peer robot(hub, Role::kRobot);
  Peer client(hub, Role::kClient);
  robot.Frame(RegisterFrame("r1"), 0.0);
  client.Frame(ConnectFrame("r1"), 0.0);
  for (double t = 0.5; t <= 4.0; t += 0.5) client.Frame(KeepaliveFrame(), t);
  hub.Monitor(4.0);
  EXPECT_EQ(hub.StateOf("r1"), SessionState::kDegraded);
  EXPECT_EQ(client.last()["reason"], "RobotTimeout");
  client.Data(topic::kLamp, 1, {{"on", true}}, 4.1);
  EXPECT_TRUE(client.LastIsError(ErrorCode::kSessionDegraded));
}

TEST(Hub, RejectsBadConfig) {
  EXPECT_THROW(RelayHub({0.0, 1.0}), Error);
  EXPECT_THROW(RelayHub({5.0, 1.0}), Error);
}

TEST(ClientSession, RefusesBeforePairingAndMisdirected) {
  std::vector<std::string> sent;
  ClientSession s([&](std::string_view f) { sent.emplace_back(f); });
  EXPECT_FALSE(s.state().has_value());
  EXPECT_THROW(s.Heartbeat(0.0), Error);
  s.Connect("r1");
  EXPECT_EQ(s.state(), SessionState::kClientConnecting);
  s.HandleFrame(PairedFrame("r1"), 0.0);
  EXPECT_TRUE(s.paired());
  EXPECT_THROW(s.Send(topic::kPose, {{"x", 0}, {"y", 0}, {"theta", 0}}, 0.0), Error);
  EXPECT_THROW(s.Send(topic::kVel, {{"v", 0}}, 0.0), Error);
  EXPECT_EQ(sent.size(), 1u);
  EXPECT_EQ(s.Heartbeat(0.1), 1);
  EXPECT_EQ(s.Heartbeat(0.2), 2);
}

TEST(ClientSession, TracksTelemetryAndGaps) {
  ClientSession s([](std::string_view) {});
  s.Connect("r1");
  s.HandleFrame(PairedFrame("r1"), 0.0);
  for (const std::int64_t seq : {1, 2, 5, 6}) {
    s.HandleFrame(DataFrame({std::string(topic::kPose), seq, 0.0,
                             {{"x", seq}, {"y", 0}, {"theta", 0}}}),
                  0.1 * static_cast<double>(seq));
  }
  EXPECT_EQ(s.telemetry_count(), 4u);
  EXPECT_EQ(s.telemetry_gaps(), 2u);
  EXPECT_EQ((*s.Latest(topic::kPose))["x"], 6);
  EXPECT_NEAR(*s.LastUpdate(topic::kPose), 0.6, 1e-12);
  EXPECT_FALSE(s.Latest(topic::kScan).has_value());
  s.HandleFrame(ErrorFrame(ErrorCode::kBadPayload, "nope", 3), 0.7);
  ASSERT_EQ(s.errors().size(), 1u);
  EXPECT_EQ(s.errors()[0].code, "BadPayload");
  EXPECT_EQ(s.errors()[0].seq, 3);
  s.HandleFrame(SessionFrame(SessionState::kDegraded, "RobotTimeout"), 0.8);
  EXPECT_EQ(s.state(), SessionState::kDegraded);
}

class LoopbackTest : public ::testing::Test {
 protected:
  LoopbackTest() : link_(OccupancyGrid(60, 60, 0.1), Config(), {3.0, 3.0, 0.0}) {}
  static SimConfig Config() {
    SimConfig c;
    c.lidar.noise_sigma = 0.0;
    return c;
  }
  void TickFor(double seconds, bool heartbeat) {
    const double tick = link_.sim().config().tick;
    const int n = static_cast<int>(std::lround(seconds / tick));
    for (int i = 0; i < n; ++i) {
      link_.Tick();
      if (heartbeat && link_.sim().tick_count() % 10 == 0) link_.Send(topic::kHeartbeat, json::object());
    }
  }
  testing::Loopback link_;
};

TEST_F(LoopbackTest, CommandsReachSimulatorAndTelemetryReturns) {
  link_.ConnectClient();
  ASSERT_TRUE(link_.client()->paired());
  link_.Send(topic::kLamp, {{"on", true}});
  link_.Send(topic::kVel, {{"v", 0.0}, {"w", 0.3}});
  TickFor(1.0, true);
  EXPECT_TRUE(link_.sim().state().lamp_on);
  EXPECT_NEAR(link_.sim().state().twist.w, 0.3, 1e-12);
  const auto pose = link_.client()->Latest(topic::kPose);
  ASSERT_TRUE(pose.has_value());
  EXPECT_NEAR((*pose)["theta"].get<double>(), link_.sim().state().pose.theta, 0.05);
  EXPECT_TRUE(link_.client()->Latest(topic::kScan).has_value());
  EXPECT_EQ((*link_.client()->Latest(topic::kLampState))["on"], true);
  EXPECT_EQ(link_.client()->telemetry_gaps(), 0u);
  EXPECT_EQ(link_.robot().link_stats().gaps, 0u);
}

TEST_F(LoopbackTest, SilenceDarkensLampAndResumeKeepsItOff) {
  link_.ConnectClient();
  link_.Send(topic::kLamp, {{"on", true}});
  link_.Send(topic::kVel, {{"v", 0.2}, {"w", 0.0}});
  TickFor(0.5, true);
  ASSERT_TRUE(link_.sim().state().lamp_on);
  TickFor(3.5, false);
  EXPECT_EQ(link_.hub().StateOf("uvbot"), SessionState::kDegraded);
  EXPECT_FALSE(link_.sim().state().lamp_on);
  EXPECT_EQ(link_.sim().state().twist, Twist{});
  link_.Send(topic::kHeartbeat, json::object());
  TickFor(1.0, true);
  EXPECT_EQ(link_.hub().StateOf("uvbot"), SessionState::kPaired);
  EXPECT_FALSE(link_.sim().state().lamp_on);
  EXPECT_EQ(link_.sim().state().twist, Twist{});
  link_.Send(topic::kLamp, {{"on", true}});
  TickFor(0.2, true);
  EXPECT_TRUE(link_.sim().state().lamp_on);
}

TEST_F(LoopbackTest, ReconnectAfterDropKeepsLampOff) {
  link_.ConnectClient();
  link_.Send(topic::kLamp, {{"on", true}});
  TickFor(0.5, true);
  ASSERT_TRUE(link_.sim().state().lamp_on);
  link_.DropClient();
  TickFor(0.1, false);
  EXPECT_FALSE(link_.sim().state().lamp_on);
  EXPECT_EQ(link_.hub().StateOf("uvbot"), SessionState::kRobotRegistered);
  link_.ConnectClient();
  ASSERT_TRUE(link_.client()->paired());
  TickFor(1.0, true);
  EXPECT_FALSE(link_.sim().state().lamp_on);
}

TEST_F(LoopbackTest, RobotSilenceClosesAndExpires) {
  link_.ConnectClient();
  TickFor(0.5, true);
  // The robot stops talking; only the hub clock moves.
  link_.hub().Monitor(link_.now() + 3.5);
  EXPECT_EQ(link_.hub().StateOf("uvbot"), SessionState::kDegraded);
  link_.hub().Monitor(link_.now() + 15.5);
  EXPECT_FALSE(link_.hub().StateOf("uvbot").has_value());
}

}  // namespace
}  // namespace uvbot::protocol
