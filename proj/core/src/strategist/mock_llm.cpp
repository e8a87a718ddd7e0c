#include "strategos/strategist/mock_llm.h"

#include <deque>
#include <thread>

#include "httplib.h"

namespace strategos::strategist {

struct MockLlmServer::Impl {
  httplib::Server server;
  std::thread thread;
  std::mutex mu;
  std::deque<Json> responses;
  Json last_response;
  int fail_count = 0;
  int fail_status = 503;
  std::vector<Json> requests;
};

Json MockLlmServer::tool_call_response(const std::vector<ToolCall>& calls,
                                       long long prompt_tokens, long long completion_tokens) {
  Json tool_calls = Json::array();
  for (std::size_t i = 0; i < calls.size(); ++i) {
    Json fn;
    fn["name"] = calls[i].name;
    fn["arguments"] = calls[i].arguments.dump();
    Json tc;
    tc["id"] = "call_" + std::to_string(i);
    tc["type"] = "function";
    tc["function"] = std::move(fn);
    tool_calls.push_back(std::move(tc));
  }
  Json message;
  message["role"] = "assistant";
  message["content"] = nullptr;
  message["tool_calls"] = std::move(tool_calls);
  Json choice;
  choice["index"] = 0;
  choice["message"] = std::move(message);
  choice["finish_reason"] = "tool_calls";
  Json body;
  body["id"] = "mock-completion";
  body["object"] = "chat.completion";
  body["choices"] = Json::array({std::move(choice)});
  if (prompt_tokens > 0 || completion_tokens > 0) {
    Json usage;
    usage["prompt_tokens"] = prompt_tokens;
    usage["completion_tokens"] = completion_tokens;
    usage["total_tokens"] = prompt_tokens + completion_tokens;
    body["usage"] = std::move(usage);
  }
  return body;
}

MockLlmServer::MockLlmServer() : impl_(std::make_unique<Impl>()) {
  impl_->server.Post("/v1/chat/completions", [this](const httplib::Request& req,
                                                    httplib::Response& res) {
    requests_seen_.fetch_add(1);
    std::lock_guard<std::mutex> lock(impl_->mu);
    try {
      impl_->requests.push_back(Json::parse(req.body));
    } catch (const std::exception&) {
      impl_->requests.push_back(Json::object());
    }
    if (impl_->fail_count > 0) {
      --impl_->fail_count;
      res.status = impl_->fail_status;
      res.set_content("{\"error\":\"injected failure\"}", "application/json");
      return;
    }
    Json body;
    if (!impl_->responses.empty()) {
      body = impl_->responses.front();
      impl_->responses.pop_front();
      impl_->last_response = body;
    } else if (!impl_->last_response.is_null()) {
      body = impl_->last_response;
    } else {
      body = tool_call_response(
          {ToolCall{"keep-status-quo", Json{{"rationale", "Mock default: no change."}}}});
    }
    res.status = 200;
    res.set_content(body.dump(), "application/json");
  });

  port_ = impl_->server.bind_to_any_port("127.0.0.1");
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

MockLlmServer::~MockLlmServer() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

void MockLlmServer::enqueue_response(Json body) {
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->responses.push_back(std::move(body));
}

void MockLlmServer::enqueue_tool_calls(const std::vector<ToolCall>& calls, long long prompt_tokens,
                                       long long completion_tokens) {
  enqueue_response(tool_call_response(calls, prompt_tokens, completion_tokens));
}

void MockLlmServer::fail_next(int count, int status) {
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->fail_count = count;
  impl_->fail_status = status;
}

std::string MockLlmServer::base_url() const { return "http://127.0.0.1:" + std::to_string(port_); }

std::vector<Json> MockLlmServer::received_requests() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->requests;
}

}  // namespace strategos::strategist
