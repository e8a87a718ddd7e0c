#include "strategos/strategist/episode.h"

#include <sstream>

#include "strategos/embedded_data.h"
#include "strategos/engine/internal.h"

namespace strategos::strategist {

const char* to_string(EpisodeOutcome o) {
  switch (o) {
    case EpisodeOutcome::Completed: return "completed";
    case EpisodeOutcome::TimeoutGap: return "timeout_gap";
    case EpisodeOutcome::ErrorGap: return "error_gap";
    case EpisodeOutcome::ForcedClose: return "forced_close";
  }
  return "completed";
}

bool parse_episode_outcome(const std::string& s, EpisodeOutcome& out) {
  if (s == "completed") out = EpisodeOutcome::Completed;
  else if (s == "timeout_gap") out = EpisodeOutcome::TimeoutGap;
  else if (s == "error_gap") out = EpisodeOutcome::ErrorGap;
  else if (s == "forced_close") out = EpisodeOutcome::ForcedClose;
  else return false;
  return true;
}

namespace {

void force_close(bridge::ToolSession& session, DecisionRecord& record) {
  if (session.closed()) return;
  Json args;
  args["rationale"] = "Decision budget exhausted; keeping the status quo.";
  const auto r = session.call("keep-status-quo", args);
  ToolCallRecord call;
  call.name = "keep-status-quo";
  call.arguments = args;
  call.ok = r.ok;
  if (!r.ok) call.error = r.error.message;
  record.tool_calls.push_back(std::move(call));
}

void capture_rationales(const bridge::ToolSession& session, DecisionRecord& record) {
  for (int c = 0; c < strategy::kDecisionCategoryCount; ++c) {
    record.rationale[c] = session.overrides().last_rationale[c];
  }
}

}  // namespace

DecisionRecord run_decision_episode(const EpisodeContext& ctx, Strategist& strategist,
                                    bridge::ToolSession& session) {
  DecisionRecord record;
  record.turn = ctx.turn;
  record.episode_id = ctx.episode_id;

  const auto start = std::chrono::steady_clock::now();
  const auto deadline = start + ctx.deadline;
  const auto estimator = codec::default_estimator();

  std::string feedback;

  for (int round = 1; round <= ctx.round_cap; ++round) {
    if (std::chrono::steady_clock::now() >= deadline) {
      force_close(session, record);
      record.outcome = EpisodeOutcome::ForcedClose;
      record.rounds = round - 1;
      record.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
      capture_rationales(session, record);
      return record;
    }

    RoundInput input;
    input.doc = ctx.doc;
    input.tools = session.remaining_tools();
    input.feedback = feedback;
    input.round = round;

    const RoundReply reply = strategist.decide(input);
    record.rounds = round;

    // Token accounting: strategist-reported usage wins, estimate otherwise.
    if (reply.input_tokens > 0) {
      record.input_tokens += reply.input_tokens;
    } else {
      record.input_tokens += estimator(ctx.doc->text).input_tokens;
      if (!feedback.empty()) record.input_tokens += estimator(feedback).input_tokens;
    }
    if (reply.output_tokens > 0) {
      record.output_tokens += reply.output_tokens;
    } else {
      for (const auto& call : reply.calls) {
        record.output_tokens += estimator(call.arguments.dump()).input_tokens;
      }
    }

    if (reply.transport_error) {
      record.outcome =
          reply.transport_timeout ? EpisodeOutcome::TimeoutGap : EpisodeOutcome::ErrorGap;
      record.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
      capture_rationales(session, record);
      return record;
    }

    std::ostringstream round_feedback;
    for (const auto& call : reply.calls) {
      const auto result = session.call(call.name, call.arguments);
      ToolCallRecord tc;
      tc.name = call.name;
      tc.arguments = call.arguments;
      tc.ok = result.ok;
      if (!result.ok) {
        tc.error = result.error.code + ": " + result.error.message;
        round_feedback << "Tool '" << call.name << "' failed: " << result.error.message;
        if (!result.error.suggestion.empty()) {
          round_feedback << " Did you mean '" << result.error.suggestion << "'?";
        }
        round_feedback << "\n";
      }
      record.tool_calls.push_back(std::move(tc));
      if (session.closed()) break;
    }

    if (session.closed()) {
      record.outcome = EpisodeOutcome::Completed;
      record.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
      capture_rationales(session, record);
      return record;
    }

    feedback = round_feedback.str();
    if (feedback.empty() && reply.calls.empty()) {
      feedback = "You must call tools; finish with set-strategy or keep-status-quo.";
    } else if (feedback.empty()) {
      feedback = "Decisions were applied; finish with set-strategy or keep-status-quo.";
    }
  }

  force_close(session, record);
  record.outcome = EpisodeOutcome::ForcedClose;
  record.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  capture_rationales(session, record);
  return record;
}

Json decision_record_json(const DecisionRecord& record) {
  Json j;
  j["turn"] = record.turn;
  j["episode_id"] = record.episode_id;
  j["outcome"] = to_string(record.outcome);
  j["rounds"] = record.rounds;
  j["input_tokens"] = record.input_tokens;
  j["output_tokens"] = record.output_tokens;
  j["latency_ms"] = record.latency_ms;
  Json calls = Json::array();
  for (const auto& c : record.tool_calls) {
    Json cj;
    cj["name"] = c.name;
    cj["arguments"] = c.arguments;
    cj["ok"] = c.ok;
    if (!c.error.empty()) cj["error"] = c.error;
    calls.push_back(std::move(cj));
  }
  j["tool_calls"] = std::move(calls);
  Json rationales;
  for (int c = 0; c < strategy::kDecisionCategoryCount; ++c) {
    rationales[strategy::to_string(static_cast<strategy::DecisionCategory>(c))] =
        record.rationale[c];
  }
  j["rationale"] = std::move(rationales);
  return j;
}

std::string render_system_prompt(const engine::GameState& state, engine::PlayerId player) {
  std::string text(data::kSystemPromptTemplate);

  std::ostringstream situation;
  situation << "You are Player " << player << ".\n";
  situation << "- MapWidth: " << state.config.map_width << "\n";
  situation << "- MapHeight: " << state.config.map_height << "\n";
  situation << "- MaxTurns: " << state.config.max_turns << "\n";
  situation << "- VictoryTypes:\n";
  int i = 0;
  for (const auto k : engine::kAllVictoryKinds) {
    if (state.config.victory_toggles.count(k)) {
      situation << "  - " << i++ << ": " << engine::to_string(k) << "\n";
    }
  }
  const auto& arch = engine::archetype(state.players[player].archetype);
  situation << "- YouAre:\n";
  situation << "  - Name: " << arch.name << "\n";
  situation << "  - Traits:\n";
  int trait = 0;
  const auto add_trait = [&](const std::string& text_line) {
    situation << "    - " << trait++ << ": " << text_line << "\n";
  };
  if (arch.production_pct != 100) {
    add_trait("Ability: " + std::to_string(arch.production_pct - 100) +
              "% production in all cities");
  }
  if (arch.science_pct != 100) {
    add_trait("Ability: +" + std::to_string(arch.science_pct - 100) + "% science output");
  }
  if (arch.culture_pct != 100) {
    add_trait("Ability: +" + std::to_string(arch.culture_pct - 100) + "% culture output");
  }
  if (arch.gold_pct != 100) {
    add_trait("Ability: +" + std::to_string(arch.gold_pct - 100) + "% gold output");
  }
  if (arch.faith_flat > 0) {
    add_trait("Ability: +" + std::to_string(arch.faith_flat) + " faith per city");
  }
  if (arch.food_flat > 0) {
    add_trait("Ability: +" + std::to_string(arch.food_flat) + " food per city");
  }
  if (arch.unit_strength > 0) {
    add_trait("Ability: +" + std::to_string(arch.unit_strength) + " combat strength for all units");
  }
  if (arch.settler_cost_pct > 0) {
    add_trait("Ability: settlers are " + std::to_string(arch.settler_cost_pct) + "% cheaper");
  }
  if (arch.influence_gain_pct > 100) {
    add_trait("Ability: +" + std::to_string(arch.influence_gain_pct - 100) +
              "% influence gains with city-states");
  }
  if (trait == 0) add_trait("Ability: balanced, adaptable civilization");
  situation << "  - PlayerID: " << player << "\n";

  const std::string placeholder = "{{SITUATION}}";
  const auto pos = text.find(placeholder);
  if (pos != std::string::npos) {
    text.replace(pos, placeholder.size(), situation.str());
  }
  return text;
}

}  // namespace strategos::strategist
