#include "strategos/bridge/tool_server.h"

#include "strategos/util/text.h"

namespace strategos::bridge {

namespace {

ToolResponse error_response(const char* code, std::string message, std::string field = {},
                            std::string suggestion = {}) {
  ToolResponse r;
  r.ok = false;
  r.error = ToolError{code, std::move(message), std::move(field), std::move(suggestion)};
  return r;
}

ToolResponse from_validation(const strategy::ValidationError& err) {
  ToolResponse r;
  r.ok = false;
  r.error = ToolError{"VALIDATION", err.describe(), err.value, err.suggestion};
  return r;
}

}  // namespace

Json ToolResponse::to_json() const {
  Json j;
  j["ok"] = ok;
  if (ok) {
    j["result"] = payload.is_null() ? Json::object() : payload;
  } else {
    Json e;
    e["code"] = error.code;
    e["message"] = error.message;
    if (!error.field.empty()) e["field"] = error.field;
    if (!error.suggestion.empty()) e["suggestion"] = error.suggestion;
    j["error"] = std::move(e);
  }
  return j;
}

ToolSession::ToolSession(strategy::OptionCatalog catalog, strategy::OverrideState& overrides)
    : catalog_(std::move(catalog)), overrides_(overrides) {}

std::vector<codec::ToolDescriptor> ToolSession::remaining_tools() const {
  std::vector<codec::ToolDescriptor> out;
  if (closed_) return out;
  for (const auto& t : codec::tool_schemas()) {
    if (!consumed_.count(t.name)) out.push_back(t);
  }
  return out;
}

ToolResponse ToolSession::call(const std::string& name, const Json& arguments) {
  const auto* descriptor = codec::find_tool(name);
  if (!descriptor) {
    return error_response("UNKNOWN_TOOL", "unknown tool '" + name + "'", name);
  }
  if (closed_) {
    return error_response("CLOSED", "the decision episode is already closed", name);
  }
  if (consumed_.count(name)) {
    return error_response("REUSED", "tool '" + name + "' was already used this episode", name);
  }
  if (!arguments.is_object() && !arguments.is_null()) {
    return error_response("BAD_ARGS", "tool arguments must be an object", name);
  }

  const ToolResponse r = dispatch(name, arguments.is_null() ? Json::object() : arguments);
  if (r.ok) {
    consumed_.insert(name);
    if (descriptor->finishing) closed_ = true;
  }
  return r;
}

ToolResponse ToolSession::dispatch(const std::string& name, const Json& args) {
  const auto rationale_of = [&]() -> std::string {
    if (args.contains("rationale") && args.at("rationale").is_string()) {
      return args.at("rationale").get<std::string>();
    }
    return {};
  };
  const std::string rationale = rationale_of();
  if (rationale.empty()) {
    return error_response("BAD_ARGS", "a non-empty rationale is required", "rationale");
  }

  if (name == "keep-status-quo") {
    overrides_.rationale(strategy::DecisionCategory::Strategy) = rationale;
    ToolResponse r;
    r.ok = true;
    r.payload = Json{{"kept", true}};
    return r;
  }

  if (name == "set-research") {
    if (!args.contains("technology") || !args.at("technology").is_string()) {
      return error_response("BAD_ARGS", "missing string argument 'technology'", "technology");
    }
    strategy::OverrideRequest req;
    req.category = strategy::DecisionCategory::Research;
    req.choice = args.at("technology").get<std::string>();
    req.rationale = rationale;
    if (auto err = strategy::queue_override(req, catalog_, overrides_)) {
      return from_validation(*err);
    }
    ToolResponse r;
    r.ok = true;
    r.payload = Json{{"queued", req.choice}};
    return r;
  }

  if (name == "set-policy") {
    if (!args.contains("policy") || !args.at("policy").is_string()) {
      return error_response("BAD_ARGS", "missing string argument 'policy'", "policy");
    }
    strategy::OverrideRequest req;
    req.category = strategy::DecisionCategory::Policy;
    req.choice = args.at("policy").get<std::string>();
    req.rationale = rationale;
    if (auto err = strategy::queue_override(req, catalog_, overrides_)) {
      return from_validation(*err);
    }
    ToolResponse r;
    r.ok = true;
    r.payload = Json{{"queued", req.choice}};
    return r;
  }

  if (name == "set-persona") {
    strategy::OverrideRequest req;
    req.category = strategy::DecisionCategory::Persona;
    req.rationale = rationale;
    for (const auto& [key, value] : args.items()) {
      if (key == "rationale") continue;
      if (!value.is_number_integer()) {
        return error_response("BAD_ARGS", "persona parameter '" + key + "' must be an integer",
                              key);
      }
      req.persona_updates.emplace_back(key, value.get<int>());
    }
    if (auto err = strategy::queue_override(req, catalog_, overrides_)) {
      return from_validation(*err);
    }
    ToolResponse r;
    r.ok = true;
    r.payload = Json{{"updated", static_cast<int>(req.persona_updates.size())}};
    return r;
  }

  if (name == "set-strategy") {
    strategy::OverrideRequest req;
    req.category = strategy::DecisionCategory::Strategy;
    req.rationale = rationale;
    req.set = overrides_.active_set;  // partial update keeps unspecified parts
    req.set.rationale = rationale;
    if (args.contains("grand")) {
      if (!args.at("grand").is_string()) {
        return error_response("BAD_ARGS", "'grand' must be a string", "grand");
      }
      engine::GrandStrategy g;
      const std::string grand = args.at("grand").get<std::string>();
      if (!engine::parse_grand_strategy(grand, g)) {
        strategy::ValidationError err;
        err.kind = "grand";
        err.value = grand;
        err.message = "'" + grand + "' is not in the current grand options";
        err.suggestion = strategos::nearest_match(grand, catalog_.grand);
        return from_validation(err);
      }
      req.set.grand = g;
    }
    const auto read_set = [&](const char* key, std::vector<std::string>& out) -> bool {
      if (!args.contains(key)) return true;
      if (!args.at(key).is_array()) return false;
      out.clear();
      for (const auto& v : args.at(key)) {
        if (!v.is_string()) return false;
        out.push_back(v.get<std::string>());
      }
      return true;
    };
    if (!read_set("economic", req.set.economic)) {
      return error_response("BAD_ARGS", "'economic' must be an array of strings", "economic");
    }
    if (!read_set("military", req.set.military)) {
      return error_response("BAD_ARGS", "'military' must be an array of strings", "military");
    }
    if (auto err = strategy::queue_override(req, catalog_, overrides_)) {
      return from_validation(*err);
    }
    ToolResponse r;
    r.ok = true;
    r.payload = Json{{"grand", engine::to_string(overrides_.active_set.grand)}};
    return r;
  }

  return error_response("UNKNOWN_TOOL", "unknown tool '" + name + "'", name);
}

}  // namespace strategos::bridge
