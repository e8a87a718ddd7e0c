#pragma once

#include <optional>
#include <string>

#include "strategos/strategist/episode.h"

namespace strategos::strategist {

// Chat-completions-style HTTP+JSON endpoint configuration. The API key is
// read from the named environment variable, never stored in files.
struct LlmConfig {
  std::string base_url = "http://127.0.0.1:8080";  // scheme://host[:port]
  std::string path = "/v1/chat/completions";
  std::string model = "local-model";
  std::string api_key_env = "STRATEGOS_LLM_API_KEY";
  int max_tries = 5;           // exponential backoff: 1s, 2s, 4s, ...
  int backoff_base_ms = 1000;
  int request_timeout_ms = 25000;
};

// LLM strategist: sends the system prompt plus the state document, parses
// tool calls (single or parallel form), records usage tokens from the
// response. Transport failures surface as RoundReply.transport_error after
// the retry budget is spent.
class LlmStrategist : public Strategist {
 public:
  LlmStrategist(LlmConfig config, std::string system_prompt);

  std::string name() const override { return "llm:" + config_.model; }
  RoundReply decide(const RoundInput& input) override;

  // Conversation reset between episodes.
  void begin_episode();

  const Json& last_request() const { return last_request_; }

 private:
  LlmConfig config_;
  std::string system_prompt_;
  Json messages_ = Json::array();
  Json last_request_;
};

// Parses a chat-completion response body into tool calls + usage. Tolerates
// both the parallel `tool_calls` array and the legacy single `function_call`.
RoundReply parse_chat_completion(const std::string& body);

}  // namespace strategos::strategist
