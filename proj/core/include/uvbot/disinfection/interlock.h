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

#ifndef UVBOT_DISINFECTION_INTERLOCK_H_
#define UVBOT_DISINFECTION_INTERLOCK_H_

namespace uvbot {

inline constexpr double kDefaultHeartbeatTimeout = 3.0;

// Stateless gate: lamps may only burn while the operator is connected and
// heard from recently.
inline bool InterlockPermits(bool session_connected, double last_heartbeat_age,
                             double heartbeat_timeout = kDefaultHeartbeatTimeout) {
  return session_connected && last_heartbeat_age < heartbeat_timeout;
}

struct LampStatus {
  bool on = false;
  // The last lamp-on request was cancelled by the watchdog, not the user.
  bool forced_off = false;
};

// Latching lamp interlock. Losing the operator clears the pending lamp
// request, so after a reconnect the lamps stay dark until a fresh lamp-on
// command arrives.
class LampInterlock {
 public:
  explicit LampInterlock(double heartbeat_timeout = kDefaultHeartbeatTimeout)
      : heartbeat_timeout_(heartbeat_timeout) {}

  // Explicit operator command.
  void Request(bool on) {
    requested_ = on;
    forced_off_ = false;
  }

  // Immediate latch on a disconnect notification.
  void ForceOff() {
    if (requested_) forced_off_ = true;
    requested_ = false;
  }

  LampStatus Tick(bool session_connected, double last_heartbeat_age) {
    if (!InterlockPermits(session_connected, last_heartbeat_age, heartbeat_timeout_)) {
      ForceOff();
    }
    return status();
  }

  LampStatus status() const { return {requested_, forced_off_}; }
  bool requested() const { return requested_; }
  double heartbeat_timeout() const { return heartbeat_timeout_; }

 private:
  double heartbeat_timeout_;
  bool requested_ = false;
  bool forced_off_ = false;
};

}  // namespace uvbot

#endif  // UVBOT_DISINFECTION_INTERLOCK_H_
