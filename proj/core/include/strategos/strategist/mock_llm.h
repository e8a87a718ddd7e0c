#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "strategos/strategist/episode.h"

namespace strategos::strategist {

// In-process chat-completions endpoint replaying canned responses, for
// deterministic strategist tests. Responses play back in order; the last one
// repeats once the list is exhausted.
class MockLlmServer {
 public:
  MockLlmServer();
  ~MockLlmServer();

  MockLlmServer(const MockLlmServer&) = delete;
  MockLlmServer& operator=(const MockLlmServer&) = delete;

  void enqueue_response(Json body);
  // Convenience: a response carrying the given tool calls plus usage counts.
  void enqueue_tool_calls(const std::vector<ToolCall>& calls, long long prompt_tokens = 0,
                          long long completion_tokens = 0);
  // The next `count` requests fail with the given HTTP status.
  void fail_next(int count, int status = 503);

  std::string base_url() const;
  int port() const { return port_; }
  int requests_seen() const { return requests_seen_.load(); }
  std::vector<Json> received_requests() const;

  static Json tool_call_response(const std::vector<ToolCall>& calls, long long prompt_tokens = 0,
                                 long long completion_tokens = 0);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int port_ = 0;
  std::atomic<int> requests_seen_{0};
};

}  // namespace strategos::strategist
