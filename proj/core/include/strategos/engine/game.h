#pragma once

#include <optional>
#include <vector>

#include "strategos/engine/state.h"
#include "strategos/tactical/flavor.h"

namespace strategos::engine {

// Stance-transition propensities derived from a diplomatic persona.
// The engine consumes these; it never sees the persona itself.
struct DiplomacyWeights {
  int war_propensity = 100;
  int hostile_propensity = 70;
  int friendly_propensity = 70;
  int peace_propensity = 70;
  int denounce_propensity = 50;
  int deception_propensity = 30;
  int warmonger_penalty = 50;
  int neutral_pull = 40;
  int caution = 60;
  int loyalty_hold = 50;
  int coalition_drive = 40;
  int competitiveness = 50;
  int minor_influence_drive = 50;
  int minor_aggression = 40;
  int minor_neutrality = 40;
  int chatter = 50;
};

// One player's macro-level marching orders for the upcoming turn. The macro
// layer (builtin rules or an external strategist) resolves these; the engine
// only executes.
struct StrategyDirectives {
  tactical::FlavorVector flavors;
  GrandStrategy grand = GrandStrategy::Culture;
  TechId queued_research = kNoTech;
  PolicyId queued_policy = -1;
  Ideology queued_ideology = Ideology::None;
  DiplomacyWeights diplo;
};

// Builds the starting world from config alone; identical config yields a
// bit-identical state. Throws std::invalid_argument on bad config.
GameState new_game(const GameConfig& config);

// Runs one full game turn (all players in index order). Returns the events
// appended this turn. Throws std::logic_error on a terminal state.
std::vector<Event> advance_turn(GameState& state, const std::vector<StrategyDirectives>& directives);

// First satisfied victory condition in precedence order
// Domination > Science > Cultural > Diplomatic > Time, or nullopt.
std::optional<VictoryResult> check_victory(const GameState& state);

// Weighted component score; weights come from the published table.
int compute_score(const GameState& state, PlayerId player);

// Delegate votes unlock in later eras: once any major knows 8+ techs.
bool votes_unlocked(const GameState& state);

// Summed combat strength of a player's units (military components only).
int military_strength(const GameState& state, PlayerId player);

// Effective combat strength of one unit, all modifiers applied.
int unit_effective_strength(const GameState& state, const Unit& unit, bool defending);

// City defense strength used in combat and reporting.
int city_defense_strength(const GameState& state, const City& city);

// True when `item` may be produced in `city` right now.
bool production_legal(const GameState& state, const City& city, ProducibleId item);

// All currently legal production choices for a city, ascending by id.
std::vector<ProducibleId> legal_production(const GameState& state, const City& city);

// Best unclaimed settle spots for a player, used by settler planning and the
// builtin strategist's expansion trigger.
int settle_site_score(const GameState& state, Hex h);
bool is_valid_settle_site(const GameState& state, Hex h);
std::optional<Hex> best_settle_site(const GameState& state, PlayerId player);

}  // namespace strategos::engine
