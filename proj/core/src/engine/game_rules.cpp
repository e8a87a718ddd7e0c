#include <algorithm>
#include <stdexcept>

#include "strategos/engine/game.h"
#include "strategos/engine/internal.h"
#include "strategos/tables.h"

namespace strategos::engine {

namespace internal {

Yields tile_yields(const Tile& t) {
  Yields y;
  switch (t.terrain) {
    case Terrain::Grassland: y.food = 2; break;
    case Terrain::Plains: y.food = 1; y.production = 1; break;
    case Terrain::Hills: y.production = 2; break;
    case Terrain::Forest: y.food = 1; y.production = 1; break;
    case Terrain::Desert: break;
    case Terrain::Mountain: break;
    case Terrain::Water: y.food = 1; y.gold = 1; break;
  }
  if (t.improvement == Improvement::Farm) y.food += 1;
  if (t.improvement == Improvement::Mine) y.production += 1;
  return y;
}

int worked_tile_weight(const Yields& y) { return y.food * 3 + y.production * 2 + y.gold; }

Yields city_yields(const GameState& state, const City& city) {
  Yields y{.food = 2, .production = 2, .gold = 1, .science = 2, .culture = 2};
  const bool city_state = is_city_state_owner(city.owner);
  const PlayerState* owner = city_state ? nullptr : &state.players[city.owner];

  const bool capital = owner && owner->original_capital == city.id;
  if (capital) {
    y.gold += 1;
    y.science += 1;
    y.culture += 1;
  }
  y.science += (city.population + 1) / 2;

  // Work the best `population` owned tiles within radius 2 (center excluded).
  std::vector<std::pair<int, int>> candidates;  // (-weight, tile index)
  for (const Hex h : hexes_within(city.pos, 2, state.config.map_width, state.config.map_height)) {
    if (h == city.pos) continue;
    const Tile& t = state.tile(h);
    if (t.owner != city.owner) continue;
    const Yields ty = tile_yields(t);
    candidates.emplace_back(-worked_tile_weight(ty), state.tile_index(h));
  }
  std::sort(candidates.begin(), candidates.end());
  const int worked = std::min<int>(city.population, static_cast<int>(candidates.size()));
  for (int i = 0; i < worked; ++i) {
    const int idx = candidates[i].second;
    y += tile_yields(state.tiles[idx]);
  }

  for (const ProducibleId b : city.buildings) {
    if (const auto* stats = find_building_stats(b)) y += stats->yields;
  }

  if (owner) {
    if (owner->has_tech(6)) y.production += 1;  // TheWheel
    if (owner->has_tech(8)) y.production += 1;  // Construction
    if (owner->has_tech(9)) y.gold += 2;        // Currency
    if (owner->has_tech(3) && city.is_coastal) y.food += 1;  // Fishing
    for (const PolicyId p : owner->policies_adopted) {
      const auto* stats = find_policy(p);
      y += stats->per_city;
      if (capital) y += stats->capital;
    }
    if (const auto* ideo = find_ideology(owner->ideology)) y += ideo->per_city;
    const auto& arch = archetype(owner->archetype);
    y.production = y.production * arch.production_pct / 100;
    y.faith += arch.faith_flat;
    y.food += arch.food_flat;
  }
  return y;
}

int city_happiness_bonus(const City& city) {
  int h = 0;
  for (const ProducibleId b : city.buildings) {
    if (const auto* stats = find_building_stats(b)) h += stats->happiness;
  }
  return h;
}

int player_happiness(const GameState& state, PlayerId player) {
  const PlayerState& ps = state.players[player];
  int happiness = 10;
  int cities = 0;
  int pop = 0;
  for (const auto& [id, c] : state.cities) {
    if (c.owner != player) continue;
    ++cities;
    pop += c.population;
    happiness += city_happiness_bonus(c);
  }
  for (const PolicyId p : ps.policies_adopted) {
    happiness += find_policy(p)->happiness_per_city * cities;
  }
  happiness -= 2 * std::max(0, cities - 1);
  happiness -= pop * 2 / 3;
  return happiness;
}

int count_cities(const GameState& state, PlayerId player) {
  int n = 0;
  for (const auto& [id, c] : state.cities) {
    if (c.owner == player) ++n;
  }
  return n;
}

int count_wonders(const GameState& state, PlayerId player) {
  int n = 0;
  for (const auto& [id, c] : state.cities) {
    if (c.owner != player) continue;
    for (const ProducibleId b : c.buildings) {
      const auto* stats = find_building_stats(b);
      if (stats && stats->wonder) ++n;
    }
  }
  return n;
}

int settler_cost(const GameState& state, PlayerId player) {
  const auto* settler = find_unit_stats(producible::kSettler);
  int discount = archetype(state.players[player].archetype).settler_cost_pct;
  for (const PolicyId p : state.players[player].policies_adopted) {
    discount += find_policy(p)->settler_cost_pct;
  }
  discount = std::min(discount, 60);
  return settler->cost * (100 - discount) / 100;
}

int production_cost(const GameState& state, const City& city, ProducibleId item) {
  if (item == producible::kSettler) return settler_cost(state, city.owner);
  if (const auto* u = find_unit_stats(item)) return u->cost;
  if (const auto* b = find_building_stats(item)) return b->cost;
  if (const auto* p = find_project_stats(item)) return p->cost;
  throw std::invalid_argument("unknown producible id");
}

}  // namespace internal

using namespace internal;

int unit_effective_strength(const GameState& state, const Unit& unit, bool defending) {
  const auto* stats = unit_stats_for_class(unit.cls);
  int s = stats->strength;
  s += 2 * (unit.level - 1);
  if (!is_city_state_owner(unit.owner)) {
    const PlayerState& owner = state.players[unit.owner];
    const auto& arch = archetype(owner.archetype);
    s += arch.unit_strength;
    if (owner.has_tech(4) && (unit.cls == UnitClass::Melee || unit.cls == UnitClass::Mounted)) {
      s += 1;  // BronzeWorking
    }
    for (const PolicyId p : owner.policies_adopted) s += find_policy(p)->unit_strength;
    if (const auto* ideo = find_ideology(owner.ideology)) s += ideo->unit_strength;
  }
  if (defending) {
    if (unit.fortified) s += 2;
    const Tile& t = state.tile(unit.pos);
    if (t.terrain == Terrain::Hills) s += 2;
    if (t.terrain == Terrain::Forest) s += 1;
  }
  // Wounded units fight at reduced strength.
  s = s * (50 + unit.hp / 2) / 100;
  return std::max(1, s);
}

int city_defense_strength(const GameState& state, const City& city) {
  int s = 11 + 2 * city.population;
  if (!is_city_state_owner(city.owner)) {
    const PlayerState& owner = state.players[city.owner];
    if (owner.has_tech(8)) s += 4;  // Construction
    if (owner.original_capital == city.id) s += 2;
  }
  if (state.tile(city.pos).terrain == Terrain::Hills) s += 2;
  const Unit* garrison = state.unit_at(city.pos);
  if (garrison && garrison->owner == city.owner) {
    s += unit_effective_strength(state, *garrison, true) / 4;
  }
  return s;
}

int military_strength(const GameState& state, PlayerId player) {
  int total = 0;
  for (const auto& [id, u] : state.units) {
    if (u.owner != player) continue;
    if (u.cls == UnitClass::Settler || u.cls == UnitClass::Worker) continue;
    const auto* stats = unit_stats_for_class(u.cls);
    const int base = std::max(stats->strength, stats->ranged_strength) + 2 * (u.level - 1);
    total += base * (50 + u.hp / 2) / 100;
  }
  return total;
}

int compute_score(const GameState& state, PlayerId player) {
  if (player < 0 || player >= static_cast<int>(state.players.size())) {
    throw std::invalid_argument("compute_score: unknown player");
  }
  const auto& w = tables::get().score_weights;
  const PlayerState& ps = state.players[player];
  int population = 0;
  for (const auto& [id, c] : state.cities) {
    if (c.owner == player) population += c.population;
  }
  int score = 0;
  score += w.at("population") * population;
  score += w.at("cities") * count_cities(state, player);
  score += w.at("wonders") * count_wonders(state, player);
  score += w.at("military_strength") * military_strength(state, player);
  score += w.at("policies") * static_cast<int>(ps.policies_adopted.size());
  score += w.at("techs") * static_cast<int>(ps.techs_known.size());
  return score;
}

bool production_legal(const GameState& state, const City& city, ProducibleId item) {
  if (is_city_state_owner(city.owner)) return false;
  const PlayerState& owner = state.players[city.owner];
  if (const auto* u = find_unit_stats(item)) {
    if (u->requires_tech != kNoTech && !owner.has_tech(u->requires_tech)) return false;
    if (item == producible::kSettler && city.population < 2) return false;
    return true;
  }
  if (const auto* b = find_building_stats(item)) {
    if (city.has_building(item)) return false;
    if (b->requires_tech != kNoTech && !owner.has_tech(b->requires_tech)) return false;
    if (b->wonder) {
      for (const auto& [id, c] : state.cities) {
        if (c.has_building(item)) return false;
        if (c.id != city.id && c.current_production == item && c.owner == city.owner) return false;
      }
    }
    return true;
  }
  if (find_project_stats(item) != nullptr) {
    if (static_cast<int>(owner.techs_known.size()) < kTechCount) return false;
    const int bit = 1 << (item - producible::kFirstProject);
    if ((owner.spaceship_parts & bit) != 0) return false;
    for (const auto& [id, c] : state.cities) {
      if (c.id != city.id && c.owner == city.owner && c.current_production == item) return false;
    }
    return true;
  }
  return false;
}

std::vector<ProducibleId> legal_production(const GameState& state, const City& city) {
  std::vector<ProducibleId> out;
  for (ProducibleId id = 0; id < producible::kCount; ++id) {
    if (production_legal(state, city, id)) out.push_back(id);
  }
  return out;
}

int settle_site_score(const GameState& state, Hex h) {
  int score = 0;
  for (const Hex n : hexes_within(h, 1, state.config.map_width, state.config.map_height)) {
    score += worked_tile_weight(tile_yields(state.tile(n)));
  }
  return score;
}

bool is_valid_settle_site(const GameState& state, Hex h) {
  const Tile& t = state.tile(h);
  if (!t.passable()) return false;
  if (t.owner != kNoPlayer) return false;
  for (const auto& [id, c] : state.cities) {
    if (hex_distance(c.pos, h) < 3) return false;
  }
  return true;
}

std::optional<Hex> best_settle_site(const GameState& state, PlayerId player) {
  std::optional<Hex> best;
  int best_score = -1;
  for (int y = 0; y < state.config.map_height; ++y) {
    for (int x = 0; x < state.config.map_width; ++x) {
      const Hex h{x, y};
      if (!state.is_revealed(player, h)) continue;
      if (!is_valid_settle_site(state, h)) continue;
      const int s = settle_site_score(state, h);
      if (s > best_score) {
        best_score = s;
        best = h;
      }
    }
  }
  return best;
}

bool votes_unlocked(const GameState& state) {
  for (const auto& p : state.players) {
    if (static_cast<int>(p.techs_known.size()) >= 8) return true;
  }
  return false;
}

std::optional<VictoryResult> check_victory(const GameState& state) {
  const auto& cfg = state.config;
  const auto enabled = [&](VictoryKind k) { return cfg.victory_toggles.count(k) > 0; };
  const int n = cfg.player_count;

  // Domination: one player controls every original capital.
  if (enabled(VictoryKind::Domination)) {
    for (PlayerId p = 0; p < n; ++p) {
      if (!state.players[p].alive) continue;
      bool all = true;
      for (PlayerId q = 0; q < n; ++q) {
        const City* cap = state.find_city(state.players[q].original_capital);
        if (!cap || cap->owner != p) {
          all = false;
          break;
        }
      }
      if (all) return VictoryResult{p, VictoryKind::Domination, state.turn};
    }
  }

  // Science: all spaceship parts completed.
  if (enabled(VictoryKind::Science)) {
    const int full = (1 << kSpaceshipPartCount) - 1;
    for (PlayerId p = 0; p < n; ++p) {
      if (state.players[p].alive && state.players[p].spaceship_parts == full) {
        return VictoryResult{p, VictoryKind::Science, state.turn};
      }
    }
  }

  // Cultural: influential over every living opponent.
  if (enabled(VictoryKind::Cultural)) {
    for (PlayerId p = 0; p < n; ++p) {
      if (!state.players[p].alive) continue;
      bool influential_over_all = true;
      int opponents = 0;
      for (PlayerId q = 0; q < n; ++q) {
        if (q == p || !state.players[q].alive) continue;
        ++opponents;
        if (state.players[p].tourism_exported[q] <= state.players[q].cumulative_culture) {
          influential_over_all = false;
          break;
        }
      }
      if (opponents > 0 && influential_over_all) {
        return VictoryResult{p, VictoryKind::Cultural, state.turn};
      }
    }
  }

  // Diplomatic: enough delegates and a strict plurality.
  if (enabled(VictoryKind::Diplomatic)) {
    const int threshold = n + 1;
    PlayerId leader = kNoPlayer;
    int best = -1;
    bool tie = false;
    for (PlayerId p = 0; p < n; ++p) {
      if (!state.players[p].alive) continue;
      const int d = state.players[p].delegates;
      if (d > best) {
        best = d;
        leader = p;
        tie = false;
      } else if (d == best) {
        tie = true;
      }
    }
    if (leader != kNoPlayer && !tie && best >= threshold) {
      return VictoryResult{leader, VictoryKind::Diplomatic, state.turn};
    }
  }

  // Time: highest score once the turn limit is reached.
  if (enabled(VictoryKind::Time) && state.turn >= cfg.max_turns) {
    PlayerId leader = kNoPlayer;
    int best = -1;
    for (PlayerId p = 0; p < n; ++p) {
      if (!state.players[p].alive) continue;
      const int s = compute_score(state, p);
      if (s > best) {
        best = s;
        leader = p;
      }
    }
    if (leader != kNoPlayer) return VictoryResult{leader, VictoryKind::Time, state.turn};
  }

  return std::nullopt;
}

}  // namespace strategos::engine
