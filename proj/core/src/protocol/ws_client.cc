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

#include "uvbot/protocol/ws_client.h"

#include <condition_variable>
#include <deque>
#include <mutex>
#include <thread>

#include <boost/asio/connect.hpp>
#include <boost/asio/ip/tcp.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

#include "uvbot/common/error.h"

namespace uvbot::protocol {
namespace {

namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
namespace net = boost::asio;
using tcp = net::ip::tcp;

}  // namespace

struct WsClient::Impl {
  net::io_context ioc;
  websocket::stream<tcp::socket> ws{ioc};
  beast::flat_buffer buffer;
  std::deque<std::string> outbox;
  std::thread thread;

  mutable std::mutex mu;
  std::condition_variable cv;
  std::deque<std::string> inbox;
  bool open = false;

  void Read() {
    ws.async_read(buffer, [this](beast::error_code ec, std::size_t) {
      if (ec) {
        std::lock_guard lock(mu);
        open = false;
        cv.notify_all();
        return;
      }
      {
        std::lock_guard lock(mu);
        inbox.push_back(beast::buffers_to_string(buffer.data()));
      }
      buffer.consume(buffer.size());
      cv.notify_all();
      Read();
    });
  }

  void Write() {
    ws.async_write(net::buffer(outbox.front()), [this](beast::error_code ec, std::size_t) {
      if (ec) {
        outbox.clear();
        return;
      }
      outbox.pop_front();
      if (!outbox.empty()) Write();
    });
  }
};

WsClient::WsClient() : impl_(std::make_unique<Impl>()) {}

WsClient::~WsClient() { Close(); }

void WsClient::Connect(const std::string& host, std::uint16_t port, const std::string& path) {
  try {
    tcp::resolver resolver(impl_->ioc);
    const auto results = resolver.resolve(host, std::to_string(port));
    net::connect(impl_->ws.next_layer(), results);
    impl_->ws.text(true);
    impl_->ws.handshake(host, path);
  } catch (const boost::system::system_error& e) {
    throw Error(ErrorCode::kIoError, "websocket connect failed: " + std::string(e.what()));
  }
  {
    std::lock_guard lock(impl_->mu);
    impl_->open = true;
  }
  impl_->Read();
  impl_->thread = std::thread([impl = impl_.get()] { impl->ioc.run(); });
}

void WsClient::Send(std::string text) {
  net::post(impl_->ioc, [impl = impl_.get(), t = std::move(text)]() mutable {
    impl->outbox.push_back(std::move(t));
    if (impl->outbox.size() == 1) impl->Write();
  });
}

std::optional<std::string> WsClient::Receive(std::chrono::milliseconds timeout) {
  std::unique_lock lock(impl_->mu);
  impl_->cv.wait_for(lock, timeout, [&] { return !impl_->inbox.empty() || !impl_->open; });
  if (impl_->inbox.empty()) return std::nullopt;
  std::string s = std::move(impl_->inbox.front());
  impl_->inbox.pop_front();
  return s;
}

void WsClient::Close() {
  if (!impl_->thread.joinable()) return;
  net::post(impl_->ioc, [impl = impl_.get()] {
    impl->ws.async_close(websocket::close_code::normal, [](beast::error_code) {});
  });
  // The read loop ends once the close handshake completes; bound the wait.
  std::unique_lock lock(impl_->mu);
  impl_->cv.wait_for(lock, std::chrono::seconds(2), [&] { return !impl_->open; });
  lock.unlock();
  impl_->ioc.stop();
  impl_->thread.join();
}

bool WsClient::is_open() const {
  std::lock_guard lock(impl_->mu);
  return impl_->open;
}

std::string HttpGet(const std::string& host, std::uint16_t port, const std::string& target) {
  try {
    net::io_context ioc;
    tcp::resolver resolver(ioc);
    beast::tcp_stream stream(ioc);
    stream.connect(resolver.resolve(host, std::to_string(port)));
    http::request<http::empty_body> req{http::verb::get, target, 11};
    req.set(http::field::host, host);
    http::write(stream, req);
    beast::flat_buffer buffer;
    http::response<http::string_body> res;
    http::read(stream, buffer, res);
    beast::error_code ec;
    stream.socket().shutdown(tcp::socket::shutdown_both, ec);
    if (res.result() != http::status::ok) {
      throw Error(ErrorCode::kIoError, "GET " + target + " returned " +
                                           std::to_string(res.result_int()));
    }
    return res.body();
  } catch (const boost::system::system_error& e) {
    throw Error(ErrorCode::kIoError, "GET " + target + " failed: " + std::string(e.what()));
  }
}

}  // namespace uvbot::protocol
