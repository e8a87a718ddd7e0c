#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>

#include "strategos/bridge/frame.h"
#include "strategos/bridge/service.h"

namespace strategos::bridge {

FrameServer::FrameServer(SessionApi& api) : api_(api) {}

FrameServer::~FrameServer() { stop(); }

std::string FrameServer::handle_payload(const std::string& payload) {
  Json request;
  try {
    request = Json::parse(payload);
  } catch (const std::exception& e) {
    Json err;
    err["kind"] = "response";
    err["ok"] = false;
    err["error"] = Json{{"code", "MALFORMED"}, {"message", std::string("payload is not JSON: ") + e.what()}};
    return err.dump();
  }
  try {
    return api_.handle(request).dump();
  } catch (const std::exception& e) {
    Json err;
    err["kind"] = "response";
    err["ok"] = false;
    err["error"] = Json{{"code", "INTERNAL"}, {"message", e.what()}};
    if (request.is_object() && request.contains("id")) err["id"] = request.at("id");
    return err.dump();
  }
}

int FrameServer::start(const std::string& bind_addr, int port) {
  const std::string addr = bind_address_or_default(bind_addr);

  listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (listen_fd_ < 0) return -1;
  int reuse = 1;
  ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &reuse, sizeof(reuse));

  sockaddr_in sa{};
  sa.sin_family = AF_INET;
  sa.sin_port = htons(static_cast<std::uint16_t>(port));
  if (::inet_pton(AF_INET, addr.c_str(), &sa.sin_addr) != 1) {
    ::close(listen_fd_);
    listen_fd_ = -1;
    return -1;
  }
  if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&sa), sizeof(sa)) != 0 ||
      ::listen(listen_fd_, 1) != 0) {
    ::close(listen_fd_);
    listen_fd_ = -1;
    return -1;
  }
  sockaddr_in bound{};
  socklen_t len = sizeof(bound);
  ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&bound), &len);
  port_ = ntohs(bound.sin_port);

  stopping_ = false;
  thread_ = std::thread([this] { serve_loop(); });
  return port_;
}

void FrameServer::serve_loop() {
  while (!stopping_) {
    const int client = ::accept(listen_fd_, nullptr, nullptr);
    if (client < 0) {
      if (stopping_) return;
      continue;
    }
    serve_client(client);
    ::close(client);
  }
}

void FrameServer::serve_client(int fd) {
  FrameParser parser;
  char buf[4096];
  while (!stopping_) {
    const ssize_t n = ::recv(fd, buf, sizeof(buf), 0);
    if (n <= 0) return;
    parser.feed(std::string_view(buf, static_cast<std::size_t>(n)));
    if (parser.poisoned()) return;  // oversize declared length: drop the connection
    while (auto payload = parser.next()) {
      const std::string response = handle_payload(*payload);
      const auto send_frame = [&](const std::string& text) {
        const std::string frame = encode_frame(text);
        std::size_t sent = 0;
        while (sent < frame.size()) {
          const ssize_t w = ::send(fd, frame.data() + sent, frame.size() - sent, MSG_NOSIGNAL);
          if (w <= 0) return false;
          sent += static_cast<std::size_t>(w);
        }
        return true;
      };
      if (!send_frame(response)) return;

      // Turn boundaries also push an event frame.
      try {
        const Json request = Json::parse(*payload);
        if (request.is_object() && request.value("op", "") == "advance") {
          const Json parsed = Json::parse(response);
          if (parsed.value("ok", false)) {
            Json ev;
            ev["kind"] = "event";
            ev["event"] = "turn_advanced";
            ev["turn"] = parsed.at("turn");
            ev["terminal"] = parsed.value("terminal", false);
            if (!send_frame(ev.dump())) return;
          }
        }
      } catch (const std::exception&) {
        // Non-JSON payloads already got their MALFORMED response.
      }
    }
  }
}

void FrameServer::stop() {
  stopping_ = true;
  if (listen_fd_ >= 0) {
    ::shutdown(listen_fd_, SHUT_RDWR);
    ::close(listen_fd_);
    listen_fd_ = -1;
  }
  if (thread_.joinable()) thread_.join();
}

}  // namespace strategos::bridge
