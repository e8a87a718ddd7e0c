#pragma once

#include <functional>
#include <memory>
#include <string>

#include "strategos/harness/record.h"
#include "strategos/harness/session.h"
#include "strategos/strategist/episode.h"
#include "strategos/strategist/llm_client.h"

namespace strategos::harness {

// What controls player 0. Players 1..n-1 always run the builtin strategist.
struct Condition {
  std::string name;          // unique label, e.g. "builtin", "fixed-conquest"
  std::string kind;          // builtin | scripted | llm
  std::string scripted_preset;  // for kind == scripted
  strategist::LlmConfig llm;    // for kind == llm

  static Condition builtin();
  static Condition scripted(const std::string& preset);
  // Parses "builtin", "scripted:<preset>" or "llm:<model>@<base_url>".
  static Condition parse(const std::string& text);
};

// Injected strategist faults: each episode fails (error_gap) with probability
// `failure_per_mille`/1000; a triggered failure lasts `burst_length`
// consecutive episodes.
struct FaultPlan {
  int failure_per_mille = 0;
  int burst_length = 1;
};

struct RunOptions {
  std::chrono::milliseconds episode_deadline{30000};
  int round_cap = 8;
  std::optional<FaultPlan> faults;
  // Strategist factory override for tests (wins over condition.kind).
  std::function<std::unique_ptr<strategist::Strategist>()> make_strategist;
  // Called after every episode with the live record (transcript logging).
  std::function<void(const strategist::DecisionRecord&)> on_episode;
};

// Runs one full game; never throws on engine faults - those come back as
// exclusion == "crash". Deterministic for builtin/scripted conditions.
GameRecord run_game(const Condition& condition, std::uint64_t seed,
                    const engine::GameConfig& base_config, const RunOptions& options = {});

}  // namespace strategos::harness
