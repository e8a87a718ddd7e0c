#pragma once

// Engine internals shared between the rules/turn translation units and the
// modules that report on the world (docs, builtin strategist).

#include "strategos/engine/game.h"

namespace strategos::engine::internal {

Yields tile_yields(const Tile& t);
int worked_tile_weight(const Yields& y);
Yields city_yields(const GameState& state, const City& city);
int player_happiness(const GameState& state, PlayerId player);
int count_cities(const GameState& state, PlayerId player);
int count_wonders(const GameState& state, PlayerId player);
int settler_cost(const GameState& state, PlayerId player);
int production_cost(const GameState& state, const City& city, ProducibleId item);

// Marks tiles within `radius` of center revealed for `player`; returns the
// newly revealed hexes in scan order.
std::vector<Hex> reveal_area(GameState& state, PlayerId player, Hex center, int radius);

// Line-of-sight "now": within radius 2 of any of the player's units/cities.
bool tile_visible_now(const GameState& state, PlayerId player, Hex h);

// Visibility bitmask for an event: the actor plus every major that can see
// one of the plots; public events are visible to all majors.
int event_visibility(const GameState& state, PlayerId actor, const std::vector<Hex>& plots,
                     bool public_event);

const char* unit_role(UnitClass cls);
Json unit_json(const Unit& u);
Json plot_json(const GameState& state, Hex h);
Json city_json(const City& c);

Unit& spawn_unit(GameState& state, PlayerId owner, UnitClass cls, Hex pos);
City& found_city(GameState& state, PlayerId owner, Hex pos, const std::string& name);

}  // namespace strategos::engine::internal
