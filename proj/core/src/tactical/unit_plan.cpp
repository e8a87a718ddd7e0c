#include "strategos/tactical/unit_plan.h"

#include <algorithm>

#include "strategos/engine/internal.h"

namespace strategos::tactical {

using engine::GameState;
using engine::Hex;
using engine::Unit;

const char* to_string(ActionKind k) {
  switch (k) {
    case ActionKind::Move: return "Move";
    case ActionKind::Attack: return "Attack";
    case ActionKind::Fortify: return "Fortify";
    case ActionKind::FoundCity: return "FoundCity";
    case ActionKind::ImproveTile: return "ImproveTile";
    case ActionKind::Explore: return "Explore";
  }
  return "Fortify";
}

namespace {

struct Candidate {
  int score = 0;
  int seq = 0;
  UnitAction action;
};

void consider(std::vector<Candidate>& cs, int score, UnitAction action) {
  cs.push_back(Candidate{score, static_cast<int>(cs.size()), std::move(action)});
}

UnitAction pick(const std::vector<Candidate>& cs) {
  const Candidate* best = &cs.front();
  for (const auto& c : cs) {
    if (c.score > best->score) best = &c;
  }
  return best->action;
}

int newly_revealed_around(const GameState& state, engine::PlayerId p, Hex h) {
  int fresh = 0;
  for (const Hex n : engine::hexes_within(h, 2, state.config.map_width, state.config.map_height)) {
    if (!state.is_revealed(p, n)) ++fresh;
  }
  return fresh;
}

UnitAction plan_scout(const GameState& state, const Unit& unit) {
  int best_fresh = 0;
  Hex best{-1, -1};
  for (const Hex n : engine::hex_neighbors(unit.pos)) {
    if (!state.in_bounds(n) || !state.tile(n).passable()) continue;
    if (state.unit_at(n) != nullptr) continue;
    const int fresh = newly_revealed_around(state, unit.owner, n);
    if (fresh == 0) continue;
    if (fresh > best_fresh ||
        (fresh == best_fresh && state.tile_index(n) < state.tile_index(best))) {
      best_fresh = fresh;
      best = n;
    }
  }
  if (best_fresh > 0) return UnitAction{ActionKind::Explore, best};

  // Nothing new nearby: head for the closest unrevealed tile.
  int best_dist = 1 << 20;
  Hex target{-1, -1};
  for (int y = 0; y < state.config.map_height; ++y) {
    for (int x = 0; x < state.config.map_width; ++x) {
      const Hex h{x, y};
      if (state.is_revealed(unit.owner, h)) continue;
      const int d = engine::hex_distance(unit.pos, h);
      if (d < best_dist) {
        best_dist = d;
        target = h;
      }
    }
  }
  if (target.x >= 0) return UnitAction{ActionKind::Move, target};
  return UnitAction{ActionKind::Fortify, unit.pos};
}

UnitAction plan_settler(const GameState& state, const Unit& unit, const FlavorVector& flavors) {
  if (flavors[Flavor::Expansion] <= 0) return UnitAction{ActionKind::Fortify, unit.pos};
  const auto best = engine::best_settle_site(state, unit.owner);
  if (!best) return UnitAction{ActionKind::Fortify, unit.pos};
  if (engine::is_valid_settle_site(state, unit.pos)) {
    const int here = engine::settle_site_score(state, unit.pos);
    const int there = engine::settle_site_score(state, *best);
    if (here >= there - 2 || unit.pos == *best) {
      return UnitAction{ActionKind::FoundCity, unit.pos};
    }
  }
  return UnitAction{ActionKind::Move, *best};
}

bool improvable(const GameState& state, Hex h, engine::PlayerId owner) {
  const engine::Tile& t = state.tile(h);
  if (t.owner != owner || t.city >= 0) return false;
  if (t.improvement != engine::Improvement::None) return false;
  switch (t.terrain) {
    case engine::Terrain::Grassland:
    case engine::Terrain::Plains:
    case engine::Terrain::Hills:
      return true;
    default:
      return false;
  }
}

UnitAction plan_worker(const GameState& state, const Unit& unit) {
  if (improvable(state, unit.pos, unit.owner)) {
    return UnitAction{ActionKind::ImproveTile, unit.pos};
  }
  int best_dist = 1 << 20;
  Hex target{-1, -1};
  for (const auto& [id, c] : state.cities) {
    if (c.owner != unit.owner) continue;
    for (const Hex h :
         engine::hexes_within(c.pos, 2, state.config.map_width, state.config.map_height)) {
      if (!improvable(state, h, unit.owner)) continue;
      if (state.unit_at(h) != nullptr && !(h == unit.pos)) continue;
      const int d = engine::hex_distance(unit.pos, h);
      if (d < best_dist ||
          (d == best_dist && target.x >= 0 && state.tile_index(h) < state.tile_index(target))) {
        best_dist = d;
        target = h;
      }
    }
  }
  if (target.x >= 0) return UnitAction{ActionKind::Move, target};
  return UnitAction{ActionKind::Fortify, unit.pos};
}

UnitAction plan_military(const GameState& state, const Unit& unit, const ZonePartition& zones,
                         const FlavorVector& flavors) {
  const engine::PlayerId p = unit.owner;
  const bool ranged = unit.cls == engine::UnitClass::Ranged;
  const int reach = ranged ? engine::unit_stats_for_class(unit.cls)->range : 1;
  const int offense = flavors[Flavor::Offense];
  const int defense = flavors[Flavor::Defense];
  const int my_eff = engine::unit_effective_strength(state, unit, false);

  std::vector<Candidate> cs;
  consider(cs, 1, UnitAction{ActionKind::Fortify, unit.pos});

  // Attack targets in reach.
  for (const auto& [id, u] : state.units) {
    if (engine::is_city_state_owner(u.owner) || !state.at_war(p, u.owner)) continue;
    if (engine::hex_distance(unit.pos, u.pos) > reach) continue;
    const int their_eff = std::max(1, engine::unit_effective_strength(state, u, true));
    const int expected = 30 * my_eff / their_eff;
    int score = offense * 2 * expected / 30 + 10;
    if (u.hp <= expected) score += 25;  // likely kill
    UnitAction a{ActionKind::Attack, u.pos};
    a.target_unit = id;
    consider(cs, score, a);
  }
  for (const auto& [id, c] : state.cities) {
    const bool cs_target = engine::is_city_state_owner(c.owner);
    if (cs_target || !state.at_war(p, c.owner)) continue;
    if (engine::hex_distance(unit.pos, c.pos) > reach) continue;
    const int their_eff = std::max(1, engine::city_defense_strength(state, c));
    const int expected = 30 * my_eff / their_eff;
    int score = offense * 2 * expected / 30 + 40;
    if (!ranged && c.hp <= expected) score += 120;  // capture in reach
    UnitAction a{ActionKind::Attack, c.pos};
    a.target_city = id;
    consider(cs, score, a);
  }

  // Zone posture.
  const TacticalZone* zone = zones.at(state, unit.pos);
  const bool in_trouble = zone && (zone->dominance == Dominance::Enemy ||
                                   zone->dominance == Dominance::Contested);

  // Nearest own city (guard anchor).
  const engine::City* home = nullptr;
  int home_dist = 1 << 20;
  for (const auto& [id, c] : state.cities) {
    if (c.owner != p) continue;
    const int d = engine::hex_distance(unit.pos, c.pos);
    if (d < home_dist) {
      home_dist = d;
      home = &c;
    }
  }

  if (home) {
    if (home_dist <= 1) {
      // Hold the line near the city.
      int score = defense * 2 + (in_trouble ? 20 : 0);
      consider(cs, score, UnitAction{ActionKind::Fortify, unit.pos});
    } else {
      // Retreat toward home, stronger when outmatched and defense-minded.
      int score = defense * 2 - 4 + (in_trouble ? 15 : -10);
      consider(cs, score, UnitAction{ActionKind::Move, home->pos});
    }
  }

  // March on the nearest enemy city when at war.
  const engine::City* objective = nullptr;
  int objective_dist = 1 << 20;
  for (const auto& [id, c] : state.cities) {
    if (engine::is_city_state_owner(c.owner) || !state.at_war(p, c.owner)) continue;
    if (!state.is_revealed(p, c.pos)) continue;
    const int d = engine::hex_distance(unit.pos, c.pos);
    if (d < objective_dist) {
      objective_dist = d;
      objective = &c;
    }
  }
  if (objective) {
    const int score = offense * 2 - objective_dist;
    consider(cs, score, UnitAction{ActionKind::Move, objective->pos});
  }

  // Garrison drift in peacetime: cover an ungarrisoned city.
  if (!objective && home && home_dist > 1) {
    const Unit* garrison = state.unit_at(home->pos);
    if (!garrison || garrison->owner != p) {
      consider(cs, 8, UnitAction{ActionKind::Move, home->pos});
    }
  }

  return pick(cs);
}

}  // namespace

UnitAction plan_unit_turn(const GameState& state, const Unit& unit, const ZonePartition& zones,
                          const FlavorVector& flavors) {
  switch (unit.cls) {
    case engine::UnitClass::Scout:
      return plan_scout(state, unit);
    case engine::UnitClass::Settler:
      return plan_settler(state, unit, flavors);
    case engine::UnitClass::Worker:
      return plan_worker(state, unit);
    default:
      return plan_military(state, unit, zones, flavors);
  }
}

}  // namespace strategos::tactical
