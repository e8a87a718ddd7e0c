#include "strategos/harness/session.h"

#include "strategos/tables.h"

namespace strategos::harness {

using engine::PlayerId;

GameSession::GameSession(const engine::GameConfig& config) : state_(engine::new_game(config)) {
  init();
}

GameSession::GameSession(engine::GameState state) : state_(std::move(state)) { init(); }

void GameSession::init() {
  const int n = state_.config.player_count;
  overrides_.resize(n);
  last_decision_turn_.assign(n, -1);
  writer_history_.resize(n);
  peak_scores_.resize(n);
  for (PlayerId p = 0; p < n; ++p) {
    overrides_[p].active_persona = strategy::Persona::archetype_default(state_.players[p].archetype);
    // Seed the active set with the builtin's opening decision so turn 0 has a
    // defined grand strategy for everyone.
    const auto decision = tactical::builtin_macro_decide(state_, p);
    overrides_[p].active_set = decision.set;
  }
}

strategy::OptionCatalog GameSession::catalog(PlayerId p) const {
  return strategy::option_catalog(state_, p, overrides_[p]);
}

codec::MarkdownDoc GameSession::document(PlayerId p) const {
  return codec::encode_state(state_, p, overrides_[p], catalog(p), last_decision_turn_[p]);
}

engine::StrategyDirectives GameSession::resolve_directives(PlayerId p, WriterLog* log) {
  auto& ov = overrides_[p];
  const auto decision = tactical::builtin_macro_decide(state_, p);
  WriterLog writers;
  writers.writer.fill(strategy::Writer::Builtin);

  if (ov.is_controlled(strategy::DecisionCategory::Strategy)) {
    writers.writer[static_cast<int>(strategy::DecisionCategory::Strategy)] =
        strategy::Writer::Override;
  } else {
    ov.active_set = decision.set;
  }
  if (ov.is_controlled(strategy::DecisionCategory::Research)) {
    writers.writer[static_cast<int>(strategy::DecisionCategory::Research)] =
        strategy::Writer::Override;
  } else {
    ov.queued_research = decision.next_research;
  }
  if (ov.is_controlled(strategy::DecisionCategory::Policy)) {
    writers.writer[static_cast<int>(strategy::DecisionCategory::Policy)] =
        strategy::Writer::Override;
  } else {
    ov.queued_policy = decision.next_policy;
    ov.queued_ideology = decision.next_ideology;
  }
  if (ov.is_controlled(strategy::DecisionCategory::Persona)) {
    writers.writer[static_cast<int>(strategy::DecisionCategory::Persona)] =
        strategy::Writer::Override;
  }
  // The builtin never touches persona: archetype default stays until an
  // external strategist changes it.

  if (log) *log = writers;

  engine::StrategyDirectives d;
  d.grand = ov.active_set.grand;
  d.flavors = strategy::apply_strategy_set(ov.active_set, tactical::FlavorVector{});
  // Money pressure is a tactical-layer reaction, applied for every player.
  if (state_.players[p].gold_rate < 0) {
    d.flavors.add(tactical::Flavor::Gold, tables::get().rule("gold_deficit_flavor_bonus"));
  }
  d.queued_research = ov.queued_research;
  d.queued_policy = ov.queued_policy;
  d.queued_ideology = ov.queued_ideology;
  d.diplo = strategy::apply_persona(ov.active_persona);
  return d;
}

std::vector<engine::Event> GameSession::advance() {
  const int n = state_.config.player_count;
  std::vector<engine::StrategyDirectives> directives;
  directives.reserve(n);

  std::array<std::int8_t, 8> grands{};
  grands.fill(-1);
  for (PlayerId p = 0; p < n; ++p) {
    WriterLog log;
    if (state_.players[p].alive) {
      directives.push_back(resolve_directives(p, &log));
      grands[p] = static_cast<std::int8_t>(directives.back().grand);
    } else {
      directives.push_back(engine::StrategyDirectives{});
      log.writer.fill(strategy::Writer::Builtin);
    }
    writer_history_[p].push_back(log);
  }
  grand_history_.push_back(grands);

  auto events = engine::advance_turn(state_, directives);

  for (PlayerId p = 0; p < n; ++p) {
    peak_scores_[p].push_back(state_.players[p].alive ? engine::compute_score(state_, p) : 0);
    // Consume queues the engine picked up.
    auto& ov = overrides_[p];
    if (ov.queued_research != engine::kNoTech &&
        (state_.players[p].current_research == ov.queued_research ||
         state_.players[p].has_tech(ov.queued_research))) {
      ov.queued_research = engine::kNoTech;
    }
    if (ov.queued_policy >= 0 && state_.players[p].has_policy(ov.queued_policy)) {
      ov.queued_policy = -1;
    }
    if (ov.queued_ideology != engine::Ideology::None &&
        state_.players[p].ideology == ov.queued_ideology) {
      ov.queued_ideology = engine::Ideology::None;
    }
  }
  return events;
}

bridge::ToolSession& GameSession::open_episode(PlayerId p) {
  episode_ = std::make_unique<bridge::ToolSession>(catalog(p), overrides_[p]);
  episode_player_ = p;
  return *episode_;
}

void GameSession::close_episode() {
  if (episode_) mark_decision(episode_player_);
  episode_.reset();
}

}  // namespace strategos::harness
