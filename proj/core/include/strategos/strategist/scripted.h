#pragma once

#include <functional>
#include <string>
#include <vector>

#include "strategos/strategist/episode.h"

namespace strategos::strategist {

// Deterministic strategist driven by a preset or an explicit call table.
// Presets: "always-keep", "fixed-conquest", "rotate-grand".
class ScriptedStrategist : public Strategist {
 public:
  explicit ScriptedStrategist(std::string preset);

  // Explicit per-episode rounds; the outer index is the episode, the inner
  // the calls emitted that round. Rounds repeat the last entry when episodes
  // outrun the table.
  static ScriptedStrategist with_calls(std::vector<std::vector<ToolCall>> per_episode);

  // Fully custom decision function (used by property tests).
  static ScriptedStrategist with_function(std::function<RoundReply(const RoundInput&)> fn,
                                          std::string name = "custom-script");

  std::string name() const override { return name_; }
  RoundReply decide(const RoundInput& input) override;

  // Episodes completed so far (episodes begin on round 1).
  int episodes_started() const { return episodes_started_; }

  static bool is_known_preset(const std::string& preset);

 private:
  ScriptedStrategist() = default;

  std::string name_;
  std::string preset_;
  std::vector<std::vector<ToolCall>> fixed_calls_;
  std::function<RoundReply(const RoundInput&)> fn_;
  int episodes_started_ = 0;
};

}  // namespace strategos::strategist
