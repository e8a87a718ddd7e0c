#include "strategos/strategist/llm_client.h"

#include <cstdlib>
#include <thread>

#include "httplib.h"

namespace strategos::strategist {

LlmStrategist::LlmStrategist(LlmConfig config, std::string system_prompt)
    : config_(std::move(config)), system_prompt_(std::move(system_prompt)) {
  begin_episode();
}

void LlmStrategist::begin_episode() {
  messages_ = Json::array();
  Json system;
  system["role"] = "system";
  system["content"] = system_prompt_;
  messages_.push_back(std::move(system));
}

RoundReply parse_chat_completion(const std::string& body) {
  RoundReply reply;
  Json parsed;
  try {
    parsed = Json::parse(body);
  } catch (const std::exception& e) {
    reply.transport_error = true;
    reply.error = std::string("malformed response body: ") + e.what();
    return reply;
  }

  if (parsed.contains("usage")) {
    const auto& usage = parsed["usage"];
    if (usage.contains("prompt_tokens")) reply.input_tokens = usage["prompt_tokens"].get<long long>();
    if (usage.contains("completion_tokens")) {
      reply.output_tokens = usage["completion_tokens"].get<long long>();
    }
  }

  if (!parsed.contains("choices") || parsed["choices"].empty()) {
    reply.transport_error = true;
    reply.error = "response carried no choices";
    return reply;
  }
  const auto& message = parsed["choices"][0]["message"];

  const auto parse_arguments = [](const Json& raw) -> Json {
    // Arguments arrive either as a JSON string or as an inline object.
    if (raw.is_string()) {
      try {
        return Json::parse(raw.get<std::string>());
      } catch (const std::exception&) {
        return Json::object();
      }
    }
    if (raw.is_object()) return raw;
    return Json::object();
  };

  if (message.contains("tool_calls") && message["tool_calls"].is_array()) {
    for (const auto& tc : message["tool_calls"]) {
      if (!tc.contains("function")) continue;
      ToolCall call;
      call.name = tc["function"].value("name", "");
      call.arguments = parse_arguments(tc["function"].value("arguments", Json()));
      if (!call.name.empty()) reply.calls.push_back(std::move(call));
    }
  } else if (message.contains("function_call")) {
    ToolCall call;
    call.name = message["function_call"].value("name", "");
    call.arguments = parse_arguments(message["function_call"].value("arguments", Json()));
    if (!call.name.empty()) reply.calls.push_back(std::move(call));
  }
  return reply;
}

RoundReply LlmStrategist::decide(const RoundInput& input) {
  if (input.round == 1) begin_episode();

  if (input.round == 1) {
    Json user;
    user["role"] = "user";
    user["content"] = input.doc->text;
    messages_.push_back(std::move(user));
  } else {
    Json user;
    user["role"] = "user";
    user["content"] = input.feedback.empty()
                          ? std::string("Continue; finish with set-strategy or keep-status-quo.")
                          : input.feedback;
    messages_.push_back(std::move(user));
  }

  Json tools = Json::array();
  for (const auto& t : input.tools) {
    Json fn;
    fn["name"] = t.name;
    fn["description"] = t.description;
    fn["parameters"] = t.parameters;
    Json tj;
    tj["type"] = "function";
    tj["function"] = std::move(fn);
    tools.push_back(std::move(tj));
  }

  Json request;
  request["model"] = config_.model;
  request["messages"] = messages_;
  request["tools"] = std::move(tools);
  request["tool_choice"] = "required";
  last_request_ = request;

  httplib::Client client(config_.base_url);
  client.set_connection_timeout(std::chrono::milliseconds(config_.request_timeout_ms));
  client.set_read_timeout(std::chrono::milliseconds(config_.request_timeout_ms));

  httplib::Headers headers;
  if (const char* key = std::getenv(config_.api_key_env.c_str())) {
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }

  std::string body = request.dump();
  std::string error;
  bool timed_out = false;
  for (int attempt = 0; attempt < config_.max_tries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(
          std::chrono::milliseconds(config_.backoff_base_ms * (1 << (attempt - 1))));
    }
    auto res = client.Post(config_.path, headers, body, "application/json");
    if (!res) {
      timed_out = res.error() == httplib::Error::ConnectionTimeout ||
                  res.error() == httplib::Error::Read;
      error = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      timed_out = false;
      error = "HTTP " + std::to_string(res->status);
      continue;
    }
    RoundReply reply = parse_chat_completion(res->body);
    if (reply.transport_error) {
      error = reply.error;
      continue;
    }
    // Record the assistant turn so corrective rounds keep context.
    Json assistant;
    assistant["role"] = "assistant";
    Json tool_calls = Json::array();
    for (std::size_t i = 0; i < reply.calls.size(); ++i) {
      Json tc;
      tc["id"] = "call_" + std::to_string(i);
      tc["type"] = "function";
      Json fn;
      fn["name"] = reply.calls[i].name;
      fn["arguments"] = reply.calls[i].arguments.dump();
      tc["function"] = std::move(fn);
      tool_calls.push_back(std::move(tc));
    }
    assistant["tool_calls"] = std::move(tool_calls);
    messages_.push_back(std::move(assistant));
    for (std::size_t i = 0; i < reply.calls.size(); ++i) {
      Json tool_msg;
      tool_msg["role"] = "tool";
      tool_msg["tool_call_id"] = "call_" + std::to_string(i);
      tool_msg["content"] = "acknowledged";
      messages_.push_back(std::move(tool_msg));
    }
    return reply;
  }

  RoundReply reply;
  reply.transport_error = true;
  reply.transport_timeout = timed_out;
  reply.error = error.empty() ? "transport failed" : error;
  return reply;
}

}  // namespace strategos::strategist
