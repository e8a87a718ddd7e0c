#pragma once

#include "strategos/engine/game.h"
#include "strategos/tactical/flavor.h"
#include "strategos/tactical/zones.h"

namespace strategos::tactical {

// Flavor-weighted score for one producible item in one city:
// sum over flavors of weight * affinity, plus situational bonuses.
// Throws std::invalid_argument when the item is not legal in the city.
int score_production_item(const engine::GameState& state, const engine::City& city,
                          engine::ProducibleId item, const FlavorVector& flavors);

// Highest-scoring legal item; ties break toward the lowest item id.
// Throws std::logic_error when nothing is legal (cannot happen for a live
// city, which can always train a Warrior).
engine::ProducibleId choose_city_production(const engine::GameState& state,
                                            const engine::City& city,
                                            const FlavorVector& flavors);

}  // namespace strategos::tactical
