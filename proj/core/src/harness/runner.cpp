#include "strategos/harness/runner.h"

#include <algorithm>

#include "strategos/strategist/scripted.h"
#include "strategos/util/rng.h"

namespace strategos::harness {

Condition Condition::builtin() {
  Condition c;
  c.name = "builtin";
  c.kind = "builtin";
  return c;
}

Condition Condition::scripted(const std::string& preset) {
  Condition c;
  c.name = preset;
  c.kind = "scripted";
  c.scripted_preset = preset;
  return c;
}

Condition Condition::parse(const std::string& text) {
  if (text == "builtin") return builtin();
  if (text.rfind("scripted:", 0) == 0) return scripted(text.substr(9));
  if (text.rfind("llm:", 0) == 0) {
    Condition c;
    c.name = text.substr(4);
    c.kind = "llm";
    const auto at = c.name.find('@');
    if (at != std::string::npos) {
      c.llm.model = c.name.substr(0, at);
      c.llm.base_url = c.name.substr(at + 1);
    } else {
      c.llm.model = c.name;
    }
    return c;
  }
  // Bare preset names are accepted as scripted conditions.
  if (strategist::ScriptedStrategist::is_known_preset(text)) return scripted(text);
  throw std::invalid_argument("unknown condition: " + text);
}

namespace {

std::unique_ptr<strategist::Strategist> make_condition_strategist(const Condition& condition,
                                                                  const engine::GameState& state) {
  if (condition.kind == "builtin") return nullptr;
  if (condition.kind == "scripted") {
    return std::make_unique<strategist::ScriptedStrategist>(condition.scripted_preset);
  }
  if (condition.kind == "llm") {
    return std::make_unique<strategist::LlmStrategist>(
        condition.llm, strategist::render_system_prompt(state, 0));
  }
  throw std::invalid_argument("unknown condition kind: " + condition.kind);
}

EpisodeSummary summarize(const strategist::DecisionRecord& r) {
  EpisodeSummary s;
  s.turn = r.turn;
  s.input_tokens = r.input_tokens;
  s.output_tokens = r.output_tokens;
  s.rounds = r.rounds;
  s.latency_ms = r.latency_ms;
  s.outcome = strategist::to_string(r.outcome);
  return s;
}

}  // namespace

GameRecord run_game(const Condition& condition, std::uint64_t seed,
                    const engine::GameConfig& base_config, const RunOptions& options) {
  GameRecord record;
  record.condition = condition.name;
  record.seed = seed;

  engine::GameConfig config = base_config;
  config.seed = seed;
  record.player_count = config.player_count;
  record.map_width = config.map_width;
  record.map_height = config.map_height;
  record.max_turns = config.max_turns;

  try {
    GameSession session(config);
    for (const auto& p : session.state().players) record.archetypes.push_back(p.archetype);

    std::unique_ptr<strategist::Strategist> strategist_impl =
        options.make_strategist ? options.make_strategist()
                                : make_condition_strategist(condition, session.state());

    // Fault stream independent of game randomness.
    Rng fault_rng = Rng::seeded(seed, 97);
    int fault_burst_remaining = 0;

    int gap_run = 0;
    int episode_id = 0;
    strategy::StrategySet prev_set = session.overrides(0).active_set;
    strategy::Persona prev_persona = session.overrides(0).active_persona;

    while (!session.state().terminal() && session.state().turn < config.max_turns &&
           session.state().players[0].alive) {
      session.advance();

      const int played_turn = session.state().turn - 1;

      // Strategy-change accounting: the set live during the played turn.
      const auto& current_set = session.overrides(0).active_set;
      if (played_turn > 0 && !current_set.same_choices(prev_set)) {
        record.strategy_change_turns.push_back(played_turn);
      }
      prev_set = current_set;

      if (session.state().terminal() || !session.state().players[0].alive) break;
      if (session.state().turn >= config.max_turns) break;

      if (strategist_impl) {
        auto& tool_session = session.open_episode(0);
        strategist::DecisionRecord decision;
        ++episode_id;

        bool inject_fault = false;
        if (options.faults) {
          if (fault_burst_remaining > 0) {
            inject_fault = true;
            --fault_burst_remaining;
          } else if (static_cast<int>(fault_rng.below(1000)) < options.faults->failure_per_mille) {
            inject_fault = true;
            fault_burst_remaining = std::max(0, options.faults->burst_length - 1);
          }
        }

        if (inject_fault) {
          decision.turn = played_turn;
          decision.episode_id = episode_id;
          decision.outcome = strategist::EpisodeOutcome::ErrorGap;
        } else {
          strategist::EpisodeContext ctx;
          ctx.player = 0;
          const codec::MarkdownDoc doc = session.document(0);
          ctx.doc = &doc;
          ctx.deadline = options.episode_deadline;
          ctx.round_cap = options.round_cap;
          ctx.turn = played_turn;
          ctx.episode_id = episode_id;
          decision = strategist::run_decision_episode(ctx, *strategist_impl, tool_session);
        }
        session.close_episode();
        record.episodes.push_back(summarize(decision));
        if (options.on_episode) options.on_episode(decision);

        // Gap bookkeeping: failed episodes extend the run, completed resets
        // it, forced_close leaves it unchanged.
        if (decision.outcome == strategist::EpisodeOutcome::Completed) {
          gap_run = 0;
        } else if (decision.outcome == strategist::EpisodeOutcome::ErrorGap ||
                   decision.outcome == strategist::EpisodeOutcome::TimeoutGap) {
          ++gap_run;
          record.max_gap = std::max(record.max_gap, gap_run);
        }

        if (!(session.overrides(0).active_persona == prev_persona)) {
          record.persona_change_turns.push_back(played_turn);
          prev_persona = session.overrides(0).active_persona;
        }
      }
    }

    const auto& state = session.state();
    record.end_turn = state.turn;

    if (state.victory) {
      record.outcome_type = "victory";
      record.victory_kind = engine::to_string(state.victory->kind);
      record.winner = state.victory->winner;
    } else if (!state.players[0].alive) {
      record.outcome_type = "player0_eliminated";
    } else {
      record.outcome_type = "draw";
    }

    for (const auto& p : state.players) {
      record.survived_turns.push_back(p.alive ? state.turn : p.survived_until);
      record.final_scores.push_back(engine::compute_score(state, p.id));
    }
    for (engine::PlayerId p = 0; p < state.config.player_count; ++p) {
      int peak = record.final_scores[p];
      for (const int s : session.peak_scores()[p]) peak = std::max(peak, s);
      record.peak_scores.push_back(peak);
    }

    record.grand_history.reserve(session.grand_history().size());
    for (const auto& per_turn : session.grand_history()) {
      const int g = per_turn[0];
      record.grand_history.push_back(g >= 0 ? static_cast<char>('0' + g) : '-');
    }

    for (const auto& e : state.event_log) {
      if (e.kind == engine::EventKind::PolicyAdopted && e.payload.value("Player", -1) == 0) {
        record.policy_sequence.push_back(e.payload.at("Policy").get<std::string>());
      }
      if (e.kind == engine::EventKind::IdeologyAdopted && e.payload.value("Player", -1) == 0) {
        record.policy_sequence.push_back(e.payload.at("Ideology").get<std::string>() +
                                         " (Ideology)");
        record.ideology = e.payload.at("Ideology").get<std::string>();
      }
    }

    if (record.max_gap >= 15) record.exclusion = "gap15";
  } catch (const std::exception& e) {
    record.exclusion = "crash";
    record.outcome_type = "draw";
    const int n = record.player_count;
    record.survived_turns.assign(n, record.end_turn);
    record.final_scores.assign(n, 0);
    record.peak_scores.assign(n, 0);
    (void)e;
  }

  return record;
}

}  // namespace strategos::harness
