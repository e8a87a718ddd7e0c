#pragma once

#include "strategos/engine/game.h"
#include "strategos/strategy/strategy.h"
#include "strategos/tactical/flavor.h"

namespace strategos::strategy {

// Exactly the legal choices for this player this turn, deterministically
// ordered (fixed enum order, then id). Throws std::invalid_argument for a
// dead player.
OptionCatalog option_catalog(const engine::GameState& state, engine::PlayerId player,
                             const OverrideState& overrides);

// base + sum of per-strategy flavor deltas (grand included), clamped.
// Throws std::invalid_argument on a strategy name missing from the tables.
tactical::FlavorVector apply_strategy_set(const StrategySet& set,
                                          const tactical::FlavorVector& base);

// Linear persona->weight mapping from the published coefficient table;
// war propensity is the product-form exception (WarBias x Boldness).
engine::DiplomacyWeights apply_persona(const Persona& p);

// Pure membership + exclusivity check; never mutates, never throws.
ValidationResult validate_choice(const std::string& kind, const std::string& choice,
                                 const OptionCatalog& catalog);

// Full strategy-set validation: every name known, no exclusive pair
// co-active within the new set.
ValidationResult validate_strategy_set(const StrategySet& set, const OptionCatalog& catalog);

// Queues an override decision after validating against the catalog. On
// success marks the category controlled and stores the rationale; on error
// leaves `overrides` untouched.
struct OverrideRequest {
  DecisionCategory category = DecisionCategory::Strategy;
  // Strategy payload.
  StrategySet set;
  // Research / policy payload (display string as listed in the catalog).
  std::string choice;
  // Persona payload: (name, value) updates.
  std::vector<std::pair<std::string, int>> persona_updates;
  std::string rationale;
};

ValidationResult queue_override(const OverrideRequest& request, const OptionCatalog& catalog,
                                OverrideState& overrides);

}  // namespace strategos::strategy
