#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "strategos/bridge/tool_server.h"
#include "strategos/harness/session.h"

namespace strategos::bridge {

// Serialized operations over one hosted game. Every result is content-equal
// to the corresponding direct in-process call on the same snapshot; the
// transports below are thin shells around this.
class SessionApi {
 public:
  // The API owns episode lifecycle: one open episode for `player` at a time,
  // reopened after every advance.
  explicit SessionApi(harness::GameSession& session, engine::PlayerId player = 0,
                      bool allow_advance = true);

  Json get_turn();
  Json get_state(engine::PlayerId player);      // {"document": ...}
  Json get_catalog(engine::PlayerId player);
  Json get_events(engine::PlayerId player, int since_index);
  Json list_tools();
  Json call_tool(const std::string& name, const Json& arguments);
  Json advance();  // {"error": {...}} with code TERMINAL when finished
  Json get_save();

  // Frame-protocol dispatch: full request object in, response object out.
  Json handle(const Json& request);

  harness::GameSession& session() { return session_; }
  std::mutex& mutex() { return mu_; }

 private:
  Json error_json(const std::string& code, const std::string& message);

  harness::GameSession& session_;
  engine::PlayerId controlled_player_;
  bool allow_advance_;
  std::mutex mu_;
};

Json catalog_json(const strategy::OptionCatalog& catalog);

// REST facade bound to loopback (or STRATEGOS_BIND_ADDR).
class RestServer {
 public:
  explicit RestServer(SessionApi& api);
  ~RestServer();
  int start(const std::string& bind_addr = "", int port = 0);  // returns bound port
  void stop();

 private:
  struct Impl;
  SessionApi& api_;
  std::unique_ptr<Impl> impl_;
};

// Length-prefixed frame protocol over a local stream socket. One client per
// game; requests processed strictly in order; event frames emitted at turn
// boundaries. Malformed payloads get error responses; an oversize frame
// closes the connection. No byte sequence terminates the server.
class FrameServer {
 public:
  explicit FrameServer(SessionApi& api);
  ~FrameServer();
  int start(const std::string& bind_addr = "", int port = 0);
  void stop();

  // Pure request handling, used directly by fuzz tests.
  std::string handle_payload(const std::string& payload);

 private:
  void serve_loop();
  void serve_client(int fd);

  SessionApi& api_;
  int listen_fd_ = -1;
  int port_ = 0;
  std::thread thread_;
  std::atomic<bool> stopping_{false};
};

std::string bind_address_or_default(const std::string& requested);

}  // namespace strategos::bridge
