#include "strategos/strategist/scripted.h"

#include <stdexcept>

namespace strategos::strategist {

namespace {

ToolCall keep_call(const std::string& why) {
  ToolCall c;
  c.name = "keep-status-quo";
  c.arguments = Json{{"rationale", why}};
  return c;
}

}  // namespace

bool ScriptedStrategist::is_known_preset(const std::string& preset) {
  return preset == "always-keep" || preset == "fixed-conquest" || preset == "rotate-grand";
}

ScriptedStrategist::ScriptedStrategist(std::string preset) {
  if (!is_known_preset(preset)) {
    throw std::invalid_argument("unknown scripted preset: " + preset);
  }
  preset_ = std::move(preset);
  name_ = "scripted:" + preset_;
}

ScriptedStrategist ScriptedStrategist::with_calls(std::vector<std::vector<ToolCall>> per_episode) {
  ScriptedStrategist s;
  s.fixed_calls_ = std::move(per_episode);
  s.name_ = "scripted:fixed-calls";
  return s;
}

ScriptedStrategist ScriptedStrategist::with_function(
    std::function<RoundReply(const RoundInput&)> fn, std::string name) {
  ScriptedStrategist s;
  s.fn_ = std::move(fn);
  s.name_ = std::move(name);
  return s;
}

RoundReply ScriptedStrategist::decide(const RoundInput& input) {
  if (input.round == 1) ++episodes_started_;
  const int episode = episodes_started_ - 1;

  if (fn_) return fn_(input);

  RoundReply reply;
  if (!fixed_calls_.empty()) {
    const auto& calls = episode < static_cast<int>(fixed_calls_.size()) ? fixed_calls_[episode]
                                                                        : fixed_calls_.back();
    reply.calls = calls;
    return reply;
  }

  if (preset_ == "always-keep") {
    reply.calls.push_back(keep_call("Holding course; the current setup is working."));
    return reply;
  }

  if (preset_ == "fixed-conquest") {
    if (episode == 0) {
      ToolCall c;
      c.name = "set-strategy";
      c.arguments = Json{{"grand", "Conquest"},
                         {"military", Json::array({"WarMobilization"})},
                         {"rationale", "Commit fully to conquest: mobilize and keep pressure on "
                                       "rival capitals for a domination win."}};
      reply.calls.push_back(std::move(c));
    } else {
      reply.calls.push_back(keep_call("Conquest posture locked in; continuing the campaign."));
    }
    return reply;
  }

  // rotate-grand: walk the catalog's grand options in order, one per episode.
  const char* kGrandOrder[4] = {"Culture", "UnitedNations", "Spaceship", "Conquest"};
  ToolCall c;
  c.name = "set-strategy";
  c.arguments = Json{{"grand", kGrandOrder[episode % 4]},
                     {"rationale", "Rotating the grand strategy for coverage."}};
  reply.calls.push_back(std::move(c));
  return reply;
}

}  // namespace strategos::strategist
