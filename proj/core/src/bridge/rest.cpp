#include <cstdlib>

#include "httplib.h"

#include "strategos/bridge/service.h"
#include "strategos/codec/tool_schema.h"
#include "strategos/engine/save.h"

namespace strategos::bridge {

std::string bind_address_or_default(const std::string& requested) {
  if (!requested.empty()) return requested;
  if (const char* env = std::getenv("STRATEGOS_BIND_ADDR")) return env;
  return "127.0.0.1";
}

Json catalog_json(const strategy::OptionCatalog& catalog) {
  Json j;
  j["grand"] = catalog.grand;
  Json economic = Json::array();
  for (const auto& o : catalog.economic) {
    economic.push_back(Json{{"name", o.name}, {"description", o.description}});
  }
  j["economic"] = std::move(economic);
  Json military = Json::array();
  for (const auto& o : catalog.military) {
    military.push_back(Json{{"name", o.name}, {"description", o.description}});
  }
  j["military"] = std::move(military);
  Json research = Json::array();
  for (const auto& o : catalog.research) {
    Json rj;
    rj["name"] = o.name;
    rj["description"] = o.description;
    rj["leads_to"] = o.leads_to;
    research.push_back(std::move(rj));
  }
  j["research"] = std::move(research);
  Json policy = Json::array();
  for (const auto& o : catalog.policy) {
    policy.push_back(Json{{"name", o.name}, {"description", o.description}});
  }
  j["policy"] = std::move(policy);
  j["current"] = Json{{"grand", engine::to_string(catalog.current_grand)},
                      {"economic", catalog.current_economic},
                      {"military", catalog.current_military},
                      {"research", catalog.current_research},
                      {"queued_research", catalog.queued_research},
                      {"queued_policy", catalog.queued_policy}};
  return j;
}

SessionApi::SessionApi(harness::GameSession& session, engine::PlayerId player, bool allow_advance)
    : session_(session), controlled_player_(player), allow_advance_(allow_advance) {
  std::lock_guard<std::mutex> lock(mu_);
  if (session_.state().players[controlled_player_].alive) {
    session_.open_episode(controlled_player_);
  }
}

Json SessionApi::error_json(const std::string& code, const std::string& message) {
  Json j;
  j["ok"] = false;
  j["error"] = Json{{"code", code}, {"message", message}};
  return j;
}

Json SessionApi::get_turn() {
  std::lock_guard<std::mutex> lock(mu_);
  Json j;
  j["ok"] = true;
  j["turn"] = session_.state().turn;
  j["terminal"] = session_.state().terminal();
  return j;
}

Json SessionApi::get_state(engine::PlayerId player) {
  std::lock_guard<std::mutex> lock(mu_);
  if (player < 0 || player >= session_.state().config.player_count ||
      !session_.state().players[player].alive) {
    return error_json("BAD_PLAYER", "player " + std::to_string(player) + " is dead or unknown");
  }
  Json j;
  j["ok"] = true;
  j["player"] = player;
  j["document"] = session_.document(player).text;
  return j;
}

Json SessionApi::get_catalog(engine::PlayerId player) {
  std::lock_guard<std::mutex> lock(mu_);
  if (player < 0 || player >= session_.state().config.player_count ||
      !session_.state().players[player].alive) {
    return error_json("BAD_PLAYER", "player " + std::to_string(player) + " is dead or unknown");
  }
  Json j;
  j["ok"] = true;
  j["catalog"] = catalog_json(session_.catalog(player));
  return j;
}

Json SessionApi::get_events(engine::PlayerId player, int since_index) {
  std::lock_guard<std::mutex> lock(mu_);
  if (player < 0 || player >= session_.state().config.player_count) {
    return error_json("BAD_PLAYER", "player " + std::to_string(player) + " is unknown");
  }
  Json events = Json::array();
  for (const auto& e : session_.state().event_log) {
    if (e.index <= since_index || !e.visible(player)) continue;
    Json ej;
    ej["turn"] = e.turn;
    ej["index"] = e.index;
    ej["kind"] = engine::to_string(e.kind);
    ej["payload"] = e.payload;
    events.push_back(std::move(ej));
  }
  Json j;
  j["ok"] = true;
  j["events"] = std::move(events);
  return j;
}

Json SessionApi::list_tools() {
  std::lock_guard<std::mutex> lock(mu_);
  Json tools = Json::array();
  if (auto* episode = session_.current_episode()) {
    for (const auto& t : episode->remaining_tools()) {
      Json tj;
      tj["name"] = t.name;
      tj["description"] = t.description;
      tj["finishing"] = t.finishing;
      tj["parameters"] = t.parameters;
      tools.push_back(std::move(tj));
    }
  }
  Json j;
  j["ok"] = true;
  j["tools"] = std::move(tools);
  return j;
}

Json SessionApi::call_tool(const std::string& name, const Json& arguments) {
  std::lock_guard<std::mutex> lock(mu_);
  auto* episode = session_.current_episode();
  if (!episode) {
    return error_json("CLOSED", "no open decision episode");
  }
  const ToolResponse r = episode->call(name, arguments);
  return r.to_json();
}

Json SessionApi::advance() {
  std::lock_guard<std::mutex> lock(mu_);
  if (!allow_advance_) {
    return error_json("FORBIDDEN", "advance is disabled on this server");
  }
  if (session_.state().terminal()) {
    return error_json("TERMINAL", "the game already has a victory result");
  }
  if (session_.state().turn >= session_.state().config.max_turns) {
    return error_json("TERMINAL", "turn limit reached");
  }
  // A still-open episode is late: its partial decisions stand, the episode
  // closes without a finishing tool.
  session_.close_episode();
  const auto events = session_.advance();
  if (!session_.state().terminal() && session_.state().players[controlled_player_].alive) {
    session_.open_episode(controlled_player_);
  }
  Json j;
  j["ok"] = true;
  j["turn"] = session_.state().turn;
  j["events_appended"] = static_cast<int>(events.size());
  j["terminal"] = session_.state().terminal();
  return j;
}

Json SessionApi::get_save() {
  std::lock_guard<std::mutex> lock(mu_);
  Json j;
  j["ok"] = true;
  j["save"] = engine::serialize_state(session_.state());
  return j;
}

Json SessionApi::handle(const Json& request) {
  Json response;
  const auto finish = [&](Json body) {
    body["kind"] = "response";
    if (request.is_object() && request.contains("id")) body["id"] = request.at("id");
    return body;
  };

  if (!request.is_object() || !request.contains("op") || !request.at("op").is_string()) {
    return finish(error_json("MALFORMED", "request must be an object with a string 'op'"));
  }
  const std::string op = request.at("op").get<std::string>();
  const auto player_of = [&]() -> engine::PlayerId {
    if (request.contains("player") && request.at("player").is_number_integer()) {
      return request.at("player").get<int>();
    }
    return controlled_player_;
  };

  if (op == "get_turn") return finish(get_turn());
  if (op == "get_state") return finish(get_state(player_of()));
  if (op == "get_catalog") return finish(get_catalog(player_of()));
  if (op == "get_events") {
    int since = -1;
    if (request.contains("since") && request.at("since").is_number_integer()) {
      since = request.at("since").get<int>();
    }
    return finish(get_events(player_of(), since));
  }
  if (op == "list_tools") return finish(list_tools());
  if (op == "call_tool") {
    if (!request.contains("tool") || !request.at("tool").is_string()) {
      return finish(error_json("MALFORMED", "call_tool requires a string 'tool'"));
    }
    return finish(
        call_tool(request.at("tool").get<std::string>(), request.value("arguments", Json())));
  }
  if (op == "advance") return finish(advance());
  if (op == "get_save") return finish(get_save());
  return finish(error_json("UNKNOWN_OP", "unknown op '" + op + "'"));
}

struct RestServer::Impl {
  httplib::Server server;
  std::thread thread;
};

RestServer::RestServer(SessionApi& api) : api_(api), impl_(std::make_unique<Impl>()) {}

RestServer::~RestServer() { stop(); }

int RestServer::start(const std::string& bind_addr, int port) {
  auto& server = impl_->server;

  const auto parse_player = [this](const httplib::Request& req) -> int {
    if (!req.has_param("player")) return 0;
    try {
      return std::stoi(req.get_param_value("player"));
    } catch (const std::exception&) {
      return -1;
    }
  };

  server.Get("/state", [this, parse_player](const httplib::Request& req, httplib::Response& res) {
    const Json r = api_.get_state(parse_player(req));
    if (!r.value("ok", false)) {
      res.status = 400;
      res.set_content(r.dump(), "application/json");
      return;
    }
    res.set_content(r.at("document").get<std::string>(), "text/markdown");
  });

  server.Get("/catalog", [this, parse_player](const httplib::Request& req, httplib::Response& res) {
    const Json r = api_.get_catalog(parse_player(req));
    if (!r.value("ok", false)) {
      res.status = 400;
      res.set_content(r.dump(), "application/json");
      return;
    }
    res.set_content(r.at("catalog").dump(2), "application/json");
  });

  server.Get("/events", [this, parse_player](const httplib::Request& req, httplib::Response& res) {
    int since = -1;
    if (req.has_param("since")) {
      try {
        since = std::stoi(req.get_param_value("since"));
      } catch (const std::exception&) {
        res.status = 400;
        res.set_content("{\"error\":\"bad 'since' parameter\"}", "application/json");
        return;
      }
    }
    const Json r = api_.get_events(parse_player(req), since);
    if (!r.value("ok", false)) {
      res.status = 400;
      res.set_content(r.dump(), "application/json");
      return;
    }
    res.set_content(r.at("events").dump(2), "application/json");
  });

  server.Get("/tools", [this](const httplib::Request&, httplib::Response& res) {
    res.set_content(api_.list_tools().dump(2), "application/json");
  });

  server.Get("/save", [this](const httplib::Request&, httplib::Response& res) {
    res.set_content(api_.get_save().at("save").get<std::string>(), "text/plain");
  });

  server.Post("/tool", [this](const httplib::Request& req, httplib::Response& res) {
    Json body;
    try {
      body = Json::parse(req.body);
    } catch (const std::exception&) {
      res.status = 400;
      res.set_content("{\"error\":{\"code\":\"MALFORMED\",\"message\":\"body is not JSON\"}}",
                      "application/json");
      return;
    }
    if (!body.contains("tool") || !body.at("tool").is_string()) {
      res.status = 400;
      res.set_content("{\"error\":{\"code\":\"MALFORMED\",\"message\":\"missing 'tool'\"}}",
                      "application/json");
      return;
    }
    const std::string tool = body.at("tool").get<std::string>();
    const Json r = api_.call_tool(tool, body.value("arguments", Json()));
    if (r.value("ok", false)) {
      res.set_content(r.dump(), "application/json");
      return;
    }
    const std::string code = r.at("error").value("code", "");
    res.status = (code == "REUSED" || code == "CLOSED") ? 409 : 400;
    res.set_content(r.dump(), "application/json");
  });

  server.Post("/advance", [this](const httplib::Request&, httplib::Response& res) {
    const Json r = api_.advance();
    if (r.value("ok", false)) {
      res.set_content(r.dump(), "application/json");
      return;
    }
    const std::string code = r.at("error").value("code", "");
    res.status = code == "TERMINAL" ? 409 : 403;
    res.set_content(r.dump(), "application/json");
  });

  const std::string addr = bind_address_or_default(bind_addr);
  int bound = port;
  if (port == 0) {
    bound = server.bind_to_any_port(addr);
  } else if (!server.bind_to_port(addr, port)) {
    return -1;
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

void RestServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
  if (impl_ && impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace strategos::bridge
