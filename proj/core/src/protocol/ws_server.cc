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

#include "uvbot/protocol/ws_server.h"

#include <deque>
#include <thread>

#include <boost/asio/ip/tcp.hpp>
#include <boost/asio/steady_timer.hpp>
#include <boost/asio/strand.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

namespace uvbot::protocol {
namespace {

namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
namespace net = boost::asio;
using tcp = net::ip::tcp;

class WsSession : public std::enable_shared_from_this<WsSession> {
 public:
  WsSession(tcp::socket&& socket, RelayHub& hub, Role role, std::function<double()> now)
      : ws_(std::move(socket)), hub_(hub), role_(role), now_(std::move(now)) {}

  void Run(http::request<http::string_body> req) {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.text(true);
    ws_.async_accept(req, beast::bind_front_handler(&WsSession::OnAccept, shared_from_this()));
  }

  void Send(std::string frame) {
    net::post(ws_.get_executor(), [self = shared_from_this(), f = std::move(frame)]() mutable {
      self->queue_.push_back(std::move(f));
      if (self->queue_.size() == 1) self->Write();
    });
  }

 private:
  void OnAccept(beast::error_code ec) {
    if (ec) return;
    std::weak_ptr<WsSession> weak = shared_from_this();
    conn_ = hub_.Open(role_, [weak](std::string_view frame) {
      if (auto self = weak.lock()) self->Send(std::string(frame));
    });
    open_ = true;
    Read();
  }

  void Read() {
    ws_.async_read(buffer_, beast::bind_front_handler(&WsSession::OnRead, shared_from_this()));
  }

  void OnRead(beast::error_code ec, std::size_t) {
    if (ec) {
      Finish();
      return;
    }
    const std::string text = beast::buffers_to_string(buffer_.data());
    buffer_.consume(buffer_.size());
    hub_.HandleFrame(conn_, text, now_());
    Read();
  }

  void Write() {
    ws_.async_write(net::buffer(queue_.front()),
                    beast::bind_front_handler(&WsSession::OnWrite, shared_from_this()));
  }

  void OnWrite(beast::error_code ec, std::size_t) {
    if (ec) {
      queue_.clear();
      Finish();
      return;
    }
    queue_.pop_front();
    if (!queue_.empty()) Write();
  }

  void Finish() {
    if (!open_) return;
    open_ = false;
    hub_.Close(conn_, now_());
  }

  websocket::stream<beast::tcp_stream> ws_;
  RelayHub& hub_;
  Role role_;
  std::function<double()> now_;
  ConnId conn_ = 0;
  bool open_ = false;
  beast::flat_buffer buffer_;
  std::deque<std::string> queue_;
};

class HttpSession : public std::enable_shared_from_this<HttpSession> {
 public:
  HttpSession(tcp::socket&& socket, RelayHub& hub, std::function<double()> now,
              const std::function<std::string()>& map_json)
      : stream_(std::move(socket)), hub_(hub), now_(std::move(now)), map_json_(map_json) {}

  void Run() {
    stream_.expires_after(std::chrono::seconds(30));
    http::async_read(stream_, buffer_, req_,
                     beast::bind_front_handler(&HttpSession::OnRead, shared_from_this()));
  }

 private:
  void OnRead(beast::error_code ec, std::size_t) {
    if (ec) return;
    const std::string target(req_.target());
    if (websocket::is_upgrade(req_)) {
      std::optional<Role> role;
      if (target == "/ws/robot") role = Role::kRobot;
      if (target == "/ws/client") role = Role::kClient;
      if (role) {
        stream_.expires_never();
        std::make_shared<WsSession>(stream_.release_socket(), hub_, *role, now_)
            ->Run(std::move(req_));
        return;
      }
    }
    auto res = std::make_shared<http::response<http::string_body>>();
    res->version(req_.version());
    res->keep_alive(false);
    res->set(http::field::content_type, "application/json");
    res->set(http::field::access_control_allow_origin, "*");
    if (req_.method() == http::verb::get && target == "/map" && map_json_) {
      res->result(http::status::ok);
      res->body() = map_json_();
    } else if (req_.method() == http::verb::get && target == "/health") {
      res->result(http::status::ok);
      res->body() = "{\"ok\":true}";
    } else {
      res->result(http::status::not_found);
      res->body() = "{\"error\":\"not found\"}";
    }
    res->prepare_payload();
    http::async_write(stream_, *res,
                      [self = shared_from_this(), res](beast::error_code, std::size_t) {
                        beast::error_code ignored;
                        self->stream_.socket().shutdown(tcp::socket::shutdown_send, ignored);
                      });
  }

  beast::tcp_stream stream_;
  RelayHub& hub_;
  std::function<double()> now_;
  const std::function<std::string()>& map_json_;
  beast::flat_buffer buffer_;
  http::request<http::string_body> req_;
};

}  // namespace

struct RelayServer::Impl {
  explicit Impl(ServerOptions o)
      : options(std::move(o)), hub(options.hub), acceptor(ioc), timer(ioc) {}

  double Now() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  void Accept() {
    acceptor.async_accept(net::make_strand(ioc), [this](beast::error_code ec, tcp::socket s) {
      if (ec) return;
      std::make_shared<HttpSession>(std::move(s), hub, [this] { return Now(); },
                                    options.map_json)
          ->Run();
      Accept();
    });
  }

  void Tick() {
    timer.expires_after(options.monitor_period);
    timer.async_wait([this](beast::error_code ec) {
      if (ec) return;
      hub.Monitor(Now());
      Tick();
    });
  }

  ServerOptions options;
  RelayHub hub;
  net::io_context ioc;
  tcp::acceptor acceptor;
  net::steady_timer timer;
  std::thread thread;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  bool running = false;
};

RelayServer::RelayServer(ServerOptions options)
    : impl_(std::make_unique<Impl>(std::move(options))) {}

RelayServer::~RelayServer() { Stop(); }

void RelayServer::Start() {
  if (impl_->running) return;
  beast::error_code ec;
  const auto address = net::ip::make_address(impl_->options.address, ec);
  if (ec) throw Error(ErrorCode::kIoError, "bad listen address " + impl_->options.address);
  const tcp::endpoint endpoint(address, impl_->options.port);
  tcp::acceptor& a = impl_->acceptor;
  a.open(endpoint.protocol(), ec);
  if (!ec) a.set_option(net::socket_base::reuse_address(true), ec);
  if (!ec) a.bind(endpoint, ec);
  if (!ec) a.listen(net::socket_base::max_listen_connections, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError, "cannot listen on " + impl_->options.address + ":" +
                                         std::to_string(impl_->options.port) + ": " +
                                         ec.message());
  }
  impl_->start = std::chrono::steady_clock::now();
  impl_->Accept();
  impl_->Tick();
  impl_->running = true;
  impl_->thread = std::thread([this] { impl_->ioc.run(); });
}

void RelayServer::Stop() {
  if (!impl_->running) return;
  impl_->running = false;
  impl_->ioc.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

std::uint16_t RelayServer::port() const {
  beast::error_code ec;
  const auto ep = impl_->acceptor.local_endpoint(ec);
  return ec ? 0 : ep.port();
}

RelayHub& RelayServer::hub() { return impl_->hub; }

double RelayServer::Now() const { return impl_->Now(); }

}  // namespace uvbot::protocol
