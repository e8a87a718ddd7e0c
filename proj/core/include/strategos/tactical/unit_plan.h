#pragma once

#include <optional>

#include "strategos/engine/game.h"
#include "strategos/tactical/flavor.h"
#include "strategos/tactical/zones.h"

namespace strategos::tactical {

enum class ActionKind { Move, Attack, Fortify, FoundCity, ImproveTile, Explore };

const char* to_string(ActionKind k);

struct UnitAction {
  ActionKind kind = ActionKind::Fortify;
  engine::Hex target;             // destination tile or attack target
  engine::UnitId target_unit = -1;  // set for unit attacks
  engine::CityId target_city = -1;  // set for city attacks
};

// Picks one action for the unit this turn. Military classes weigh
// Offense/Defense against zone dominance; settlers seek the best unclaimed
// site when Expansion is positive; scouts maximize newly revealed tiles;
// workers head for unimproved worked tiles. Fortify is the universal
// fallback, so this never fails.
UnitAction plan_unit_turn(const engine::GameState& state, const engine::Unit& unit,
                          const ZonePartition& zones, const FlavorVector& flavors);

}  // namespace strategos::tactical
