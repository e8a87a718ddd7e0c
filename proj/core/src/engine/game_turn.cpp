#include <algorithm>
#include <map>
#include <stdexcept>

#include "strategos/engine/game.h"
#include "strategos/engine/internal.h"
#include "strategos/tactical/production.h"
#include "strategos/tactical/unit_plan.h"
#include "strategos/tactical/zones.h"

namespace strategos::engine {

using namespace internal;

namespace {

struct TurnContext {
  GameState& state;
  const std::vector<StrategyDirectives>& directives;
  int turn;
};

void log_with_visibility(GameState& state, PlayerId actor, EventKind kind, Json payload,
                         const std::vector<Hex>& plots, bool public_event) {
  Event& e = state.log_event(state.turn, kind, std::move(payload));
  e.visible_to = event_visibility(state, actor, plots, public_event);
}

void update_met(GameState& state, PlayerId p, Hex pos) {
  for (PlayerId q = 0; q < state.config.player_count; ++q) {
    if (q == p || !state.players[q].alive) continue;
    if (state.players[p].relations[q].met) continue;
    bool seen = false;
    for (const auto& [id, u] : state.units) {
      if (u.owner == q && hex_distance(u.pos, pos) <= 2) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      for (const auto& [id, c] : state.cities) {
        if (c.owner == q && hex_distance(c.pos, pos) <= 2) {
          seen = true;
          break;
        }
      }
    }
    if (seen) {
      state.players[p].relations[q].met = true;
      state.players[q].relations[p].met = true;
    }
  }
}

void destroy_unit(GameState& state, UnitId id, const char* reason) {
  const auto it = state.units.find(id);
  if (it == state.units.end()) return;
  const Unit u = it->second;
  Json payload;
  payload["Player"] = u.owner;
  payload["Unit"] = unit_json(u);
  payload["Reason"] = reason;
  state.units.erase(it);
  log_with_visibility(state, u.owner, EventKind::UnitDestroyed, std::move(payload), {u.pos}, false);
}

void eliminate_player(GameState& state, PlayerId p, PlayerId by) {
  PlayerState& ps = state.players[p];
  ps.alive = false;
  ps.survived_until = state.turn;
  std::vector<UnitId> owned;
  for (const auto& [id, u] : state.units) {
    if (u.owner == p) owned.push_back(id);
  }
  for (const UnitId id : owned) destroy_unit(state, id, "owner_eliminated");
  Json payload;
  payload["Player"] = p;
  payload["By"] = by;
  log_with_visibility(state, p, EventKind::PlayerEliminated, std::move(payload), {}, true);
}

void capture_city(GameState& state, City& city, PlayerId attacker) {
  const PlayerId old_owner = city.owner;
  city.owner = attacker;
  city.population = std::max(1, city.population - 1);
  city.hp = 50;
  city.current_production = -1;
  for (const Hex n : hexes_within(city.pos, 1, state.config.map_width, state.config.map_height)) {
    Tile& t = state.tile(n);
    if (t.owner == old_owner) t.owner = attacker;
  }
  Json payload;
  payload["Player"] = attacker;
  payload["OldOwner"] = old_owner;
  payload["City"] = city_json(city);
  log_with_visibility(state, attacker, EventKind::CityCaptured, std::move(payload), {city.pos}, true);

  // Other majors resent the conqueror.
  for (PlayerId obs = 0; obs < state.config.player_count; ++obs) {
    if (obs == attacker || !state.players[obs].alive) continue;
    if (!is_city_state_owner(attacker)) {
      Relation& rel = state.players[obs].relations[attacker];
      rel.opinion = std::max(-100, rel.opinion - 8);
    }
  }

  if (!is_city_state_owner(old_owner)) {
    state.players[attacker].relations[old_owner].last_war_capture = state.turn;
    state.players[old_owner].relations[attacker].last_war_capture = state.turn;
    bool has_city = false;
    for (const auto& [id, c] : state.cities) {
      if (c.owner == old_owner) {
        has_city = true;
        break;
      }
    }
    if (!has_city) eliminate_player(state, old_owner, attacker);
  }
}

void promote_if_due(GameState& state, Unit& unit) {
  const int due_level = std::min(3, 1 + unit.kills);
  if (due_level <= unit.level) return;
  unit.level = due_level;
  Json payload;
  payload["Player"] = unit.owner;
  payload["Unit"] = unit_json(unit);
  payload["Promotion"] = due_level == 2 ? "Veteran II" : "Veteran III";
  log_with_visibility(state, unit.owner, EventKind::UnitPromoted, std::move(payload), {unit.pos},
                      false);
}

// Returns true when the attacker is spent (attack executed).
void execute_attack(GameState& state, Unit& attacker, const tactical::UnitAction& action) {
  const bool ranged = attacker.cls == UnitClass::Ranged;
  const auto* stats = unit_stats_for_class(attacker.cls);
  const int att_base = ranged ? stats->ranged_strength : stats->strength;
  int att_eff = unit_effective_strength(state, attacker, false);
  // Ranged attacks use ranged strength in place of melee strength.
  if (ranged) att_eff = std::max(1, att_eff + (att_base - stats->strength));

  const int roll = 80 + static_cast<int>(state.rng.below(41));

  Json payload;
  payload["Player"] = attacker.owner;
  payload["Attacker"] = unit_json(attacker);

  if (action.target_city >= 0) {
    City* city = state.find_city(action.target_city);
    if (!city) return;
    const int def_eff = city_defense_strength(state, *city);
    int dmg = std::clamp(30 * att_eff * roll / (std::max(1, def_eff) * 100), 5, 100);
    if (ranged) dmg = dmg * 3 / 4;
    const bool can_capture = !ranged;
    if (!can_capture && city->hp - dmg < 1) dmg = city->hp - 1;  // ranged cannot capture
    city->hp -= dmg;
    city->attacked_this_turn = true;
    int retaliation = 0;
    if (!ranged) {
      const int roll2 = 80 + static_cast<int>(state.rng.below(41));
      retaliation = std::clamp(12 * def_eff * roll2 / (std::max(1, att_eff) * 100), 3, 100);
      attacker.hp -= retaliation;
    }
    payload["DefenderCity"] = city_json(*city);
    payload["DamageToDefender"] = dmg;
    payload["DamageToAttacker"] = retaliation;
    const bool captured = city->hp <= 0 && can_capture && attacker.hp > 0;
    payload["CityCaptured"] = captured;
    log_with_visibility(state, attacker.owner, EventKind::CombatResolved, std::move(payload),
                        {attacker.pos, city->pos}, false);
    if (attacker.hp <= 0) {
      destroy_unit(state, attacker.id, "combat");
      return;
    }
    if (captured) {
      attacker.kills += 1;
      promote_if_due(state, attacker);
      capture_city(state, *city, attacker.owner);
    }
    return;
  }

  Unit* defender = nullptr;
  const auto it = state.units.find(action.target_unit);
  if (it != state.units.end()) defender = &it->second;
  if (!defender) return;
  const int def_eff = unit_effective_strength(state, *defender, true);
  int dmg = std::clamp(30 * att_eff * roll / (std::max(1, def_eff) * 100), 5, 100);
  if (ranged) dmg = dmg * 3 / 4;
  defender->hp -= dmg;
  int retaliation = 0;
  if (!ranged && defender->hp > 0) {
    const int roll2 = 80 + static_cast<int>(state.rng.below(41));
    retaliation = std::clamp(20 * def_eff * roll2 / (std::max(1, att_eff) * 100), 3, 100);
    attacker.hp -= retaliation;
  }
  payload["Defender"] = unit_json(*defender);
  payload["DefenderPlayer"] = defender->owner;
  payload["DamageToDefender"] = dmg;
  payload["DamageToAttacker"] = retaliation;
  const bool killed = defender->hp <= 0;
  payload["DefenderKilled"] = killed;
  const Hex defender_pos = defender->pos;
  log_with_visibility(state, attacker.owner, EventKind::CombatResolved, std::move(payload),
                      {attacker.pos, defender_pos}, false);
  if (killed) {
    destroy_unit(state, defender->id, "combat");
    attacker.kills += 1;
    promote_if_due(state, attacker);
    // Melee moves into the vacated tile.
    if (!ranged && hex_distance(attacker.pos, defender_pos) == 1 &&
        state.tile(defender_pos).passable() && state.city_at(defender_pos) == nullptr) {
      attacker.pos = defender_pos;
    }
  }
  if (attacker.hp <= 0) destroy_unit(state, attacker.id, "combat");
}

Hex step_toward(const GameState& state, const Unit& unit, Hex target) {
  Hex best = unit.pos;
  int best_dist = hex_distance(unit.pos, target);
  for (const Hex n : hex_neighbors(unit.pos)) {
    if (!state.in_bounds(n) || !state.tile(n).passable()) continue;
    if (state.unit_at(n) != nullptr) continue;
    const int d = hex_distance(n, target);
    if (d < best_dist) {
      best_dist = d;
      best = n;
    }
  }
  return best;
}

void move_unit_step(GameState& state, Unit& unit, Hex dest) {
  unit.pos = dest;
  unit.moves_left -= 1;
  unit.fortified = false;
  Json payload;
  payload["Player"] = unit.owner;
  payload["Unit"] = unit_json(unit);
  payload["Plots"] = Json::array({plot_json(state, dest)});
  log_with_visibility(state, unit.owner, EventKind::UnitMoved, std::move(payload), {dest}, false);

  const auto fresh = reveal_area(state, unit.owner, dest, 2);
  if (!fresh.empty()) {
    Json reveal;
    reveal["Player"] = unit.owner;
    reveal["Unit"] = unit_json(unit);
    Json plots = Json::array();
    for (const Hex h : fresh) plots.push_back(plot_json(state, h));
    reveal["Plots"] = std::move(plots);
    log_with_visibility(state, unit.owner, EventKind::TileRevealed, std::move(reveal), {}, false);
  }
  update_met(state, unit.owner, dest);
}

void run_income_phase(TurnContext& ctx, PlayerId p, std::map<CityId, Yields>& city_snapshot) {
  GameState& state = ctx.state;
  PlayerState& ps = state.players[p];
  const StrategyDirectives& d = ctx.directives[p];
  const auto& arch = archetype(ps.archetype);

  Yields totals;
  for (auto& [id, city] : state.cities) {
    if (city.owner != p) continue;
    const Yields y = city_yields(state, city);
    city_snapshot[id] = y;
    totals += y;
  }
  ps.science_rate = totals.science * arch.science_pct / 100;
  ps.culture_rate = totals.culture * arch.culture_pct / 100;
  ps.faith_rate = totals.faith;

  int maintenance = 0;
  for (const auto& [id, u] : state.units) {
    if (u.owner == p) maintenance += unit_stats_for_class(u.cls)->maintenance;
  }
  maintenance = std::max(0, maintenance - 2);
  ps.gold_rate = totals.gold * arch.gold_pct / 100 - maintenance;
  ps.treasury += ps.gold_rate;
  if (ps.treasury < 0) {
    UnitId newest_military = -1;
    for (const auto& [id, u] : state.units) {
      if (u.owner != p) continue;
      if (u.cls == UnitClass::Settler || u.cls == UnitClass::Worker) continue;
      newest_military = std::max(newest_military, id);
    }
    if (newest_military >= 0) destroy_unit(state, newest_military, "deficit");
    ps.treasury = 0;
  }

  const int wonders = count_wonders(state, p);
  int tourism = 2 * wonders;
  if (ps.ideology != Ideology::None) tourism += ps.culture_rate / 3;
  if (const auto* ideo = find_ideology(ps.ideology)) {
    tourism = tourism * (100 + ideo->tourism_pct_bonus) / 100;
  }
  ps.tourism_rate = tourism;
  for (PlayerId q = 0; q < state.config.player_count; ++q) {
    if (q == p || !state.players[q].alive) continue;
    ps.tourism_exported[q] += tourism;
  }

  // Research.
  const auto select_research = [&]() {
    if (ps.current_research != kNoTech) return;
    const auto legal = [&](TechId t) {
      const auto* tech = find_tech(t);
      if (!tech || ps.has_tech(t)) return false;
      for (const TechId pre : tech->prereqs) {
        if (!ps.has_tech(pre)) return false;
      }
      return true;
    };
    if (d.queued_research != kNoTech && legal(d.queued_research)) {
      ps.current_research = d.queued_research;
      return;
    }
    TechId cheapest = kNoTech;
    int cheapest_cost = 0;
    for (TechId t = 0; t < kTechCount; ++t) {
      if (!legal(t)) continue;
      if (cheapest == kNoTech || find_tech(t)->cost < cheapest_cost) {
        cheapest = t;
        cheapest_cost = find_tech(t)->cost;
      }
    }
    ps.current_research = cheapest;
  };

  select_research();
  if (ps.current_research != kNoTech) {
    ps.research_progress += ps.science_rate;
    const auto* tech = find_tech(ps.current_research);
    if (ps.research_progress >= tech->cost) {
      ps.research_progress -= tech->cost;
      ps.techs_known.insert(
          std::lower_bound(ps.techs_known.begin(), ps.techs_known.end(), ps.current_research),
          ps.current_research);
      Json payload;
      payload["Player"] = p;
      payload["Tech"] = tech->name;
      log_with_visibility(state, p, EventKind::TechFinished, std::move(payload), {}, false);
      ps.current_research = kNoTech;
      select_research();
    }
  }

  // Culture and policies.
  ps.culture_stockpile += ps.culture_rate;
  ps.cumulative_culture += ps.culture_rate;
  ps.faith_stockpile += ps.faith_rate;

  const int adopted = static_cast<int>(ps.policies_adopted.size()) +
                      (ps.ideology != Ideology::None ? 1 : 0);
  const int cost = policy_cost(adopted);
  if (ps.culture_stockpile >= cost) {
    const auto policy_legal = [&](PolicyId id) {
      const auto* pol = find_policy(id);
      if (!pol || ps.has_policy(id)) return false;
      if (pol->branch_index == 0) return true;
      // Requires the previous policy in the branch.
      for (const auto& other : all_policies()) {
        if (other.branch == pol->branch && other.branch_index == pol->branch_index - 1) {
          return ps.has_policy(other.id);
        }
      }
      return false;
    };
    const auto branch_complete = [&](int branch) {
      int have = 0;
      for (const auto& pol : all_policies()) {
        if (pol.branch == branch && ps.has_policy(pol.id)) ++have;
      }
      return have == kPoliciesPerBranch;
    };
    const bool ideology_eligible = ps.ideology == Ideology::None &&
                                   (branch_complete(0) || branch_complete(1) || branch_complete(2));

    bool spent = false;
    if (d.queued_policy >= 0 && policy_legal(d.queued_policy)) {
      ps.policies_adopted.push_back(d.queued_policy);
      Json payload;
      payload["Player"] = p;
      payload["Policy"] = find_policy(d.queued_policy)->name;
      log_with_visibility(state, p, EventKind::PolicyAdopted, std::move(payload), {}, false);
      spent = true;
    } else if (d.queued_ideology != Ideology::None && ideology_eligible) {
      ps.ideology = d.queued_ideology;
      Json payload;
      payload["Player"] = p;
      payload["Ideology"] = to_string(ps.ideology);
      log_with_visibility(state, p, EventKind::IdeologyAdopted, std::move(payload), {}, true);
      spent = true;
    } else {
      for (PolicyId id = 0; id < kPolicyCount && !spent; ++id) {
        if (policy_legal(id)) {
          ps.policies_adopted.push_back(id);
          Json payload;
          payload["Player"] = p;
          payload["Policy"] = find_policy(id)->name;
          log_with_visibility(state, p, EventKind::PolicyAdopted, std::move(payload), {}, false);
          spent = true;
        }
      }
    }
    if (spent) ps.culture_stockpile -= cost;
  }
}

void run_production_phase(TurnContext& ctx, PlayerId p,
                          const std::map<CityId, Yields>& city_snapshot) {
  GameState& state = ctx.state;
  const StrategyDirectives& d = ctx.directives[p];

  std::vector<CityId> owned;
  for (const auto& [id, c] : state.cities) {
    if (c.owner == p) owned.push_back(id);
  }

  for (const CityId id : owned) {
    City* city = state.find_city(id);
    if (!city || city->owner != p) continue;
    if (city->current_production < 0 || !production_legal(state, *city, city->current_production)) {
      city->current_production = tactical::choose_city_production(state, *city, d.flavors);
    }
    const auto snap = city_snapshot.find(id);
    if (snap != city_snapshot.end()) city->production_stored += snap->second.production;

    const ProducibleId item = city->current_production;
    const int cost = production_cost(state, *city, item);
    if (city->production_stored < cost) continue;

    if (is_unit(item)) {
      const auto* stats = find_unit_stats(item);
      Hex spot = city->pos;
      if (state.unit_at(spot) != nullptr) {
        spot = Hex{-1, -1};
        for (const Hex n : hex_neighbors(city->pos)) {
          if (state.in_bounds(n) && state.tile(n).passable() && state.unit_at(n) == nullptr) {
            spot = n;
            break;
          }
        }
      }
      if (spot.x < 0) continue;  // no room, hold production
      Unit& u = spawn_unit(state, p, stats->cls, spot);
      Json payload;
      payload["Player"] = p;
      payload["Unit"] = unit_json(u);
      payload["City"] = city->name;
      log_with_visibility(state, p, EventKind::UnitCreated, std::move(payload), {spot}, false);
    } else if (is_building(item)) {
      city->buildings.insert(
          std::lower_bound(city->buildings.begin(), city->buildings.end(), item), item);
      Json payload;
      payload["Player"] = p;
      payload["City"] = city->name;
      payload["Building"] = producible_name(item);
      const auto* stats = find_building_stats(item);
      log_with_visibility(state, p, EventKind::BuildingCompleted, std::move(payload), {city->pos},
                          stats->wonder);
    } else {
      PlayerState& ps = state.players[p];
      ps.spaceship_parts |= 1 << (item - producible::kFirstProject);
      Json payload;
      payload["Player"] = p;
      payload["City"] = city->name;
      payload["Project"] = producible_name(item);
      int parts = 0;
      for (int b = 0; b < kSpaceshipPartCount; ++b) {
        if (ps.spaceship_parts & (1 << b)) ++parts;
      }
      payload["PartsCompleted"] = parts;
      log_with_visibility(state, p, EventKind::ProjectCompleted, std::move(payload), {}, true);
    }
    city->production_stored -= cost;
    city->current_production = -1;
  }
}

void run_tactical_phase(TurnContext& ctx, PlayerId p) {
  GameState& state = ctx.state;
  const StrategyDirectives& d = ctx.directives[p];

  std::vector<UnitId> owned;
  for (auto& [id, u] : state.units) {
    if (u.owner != p) continue;
    owned.push_back(id);
    u.moves_left = unit_stats_for_class(u.cls)->moves;
    if (u.fortified && u.hp < 100) u.hp = std::min(100, u.hp + 10);
  }

  const auto zones = tactical::compute_tactical_zones(state, p);

  for (const UnitId id : owned) {
    for (int step = 0; step < 8; ++step) {
      auto it = state.units.find(id);
      if (it == state.units.end()) break;
      Unit& unit = it->second;
      if (unit.moves_left <= 0) break;

      const auto action = tactical::plan_unit_turn(state, unit, zones, d.flavors);
      if (action.kind == tactical::ActionKind::Fortify) {
        unit.fortified = true;
        unit.moves_left = 0;
        break;
      }
      if (action.kind == tactical::ActionKind::Attack) {
        unit.fortified = false;
        unit.moves_left = 0;
        execute_attack(state, unit, action);
        break;
      }
      if (action.kind == tactical::ActionKind::FoundCity) {
        const Hex pos = unit.pos;
        const auto& arch = archetype(state.players[p].archetype);
        const int city_count = count_cities(state, p);
        std::string name;
        if (city_count < 4) {
          name = arch.city_names[city_count];
        } else {
          name = std::string(arch.city_names[0]) + " " + std::to_string(city_count + 1);
        }
        destroy_unit(state, id, "consumed");
        City& city = found_city(state, p, pos, name);
        Json payload;
        payload["Player"] = p;
        payload["City"] = city_json(city);
        log_with_visibility(state, p, EventKind::CityFounded, std::move(payload), {pos}, true);
        reveal_area(state, p, pos, 2);
        break;
      }
      if (action.kind == tactical::ActionKind::ImproveTile) {
        Tile& t = state.tile(unit.pos);
        t.improvement = t.terrain == Terrain::Hills ? Improvement::Mine : Improvement::Farm;
        Json payload;
        payload["Player"] = p;
        payload["Unit"] = unit_json(unit);
        payload["Improvement"] = t.improvement == Improvement::Farm ? "Farm" : "Mine";
        payload["X"] = unit.pos.x;
        payload["Y"] = unit.pos.y;
        log_with_visibility(state, p, EventKind::TileImproved, std::move(payload), {unit.pos},
                            false);
        unit.moves_left = 0;
        break;
      }
      // Move / Explore: one greedy step.
      const Hex dest =
          action.kind == tactical::ActionKind::Explore ? action.target : step_toward(state, unit, action.target);
      if (dest == unit.pos) {
        unit.fortified = true;
        unit.moves_left = 0;
        break;
      }
      move_unit_step(state, unit, dest);
    }
  }
}

void run_diplomacy_phase(TurnContext& ctx, PlayerId p) {
  GameState& state = ctx.state;
  PlayerState& ps = state.players[p];
  const StrategyDirectives& d = ctx.directives[p];
  const DiplomacyWeights& w = d.diplo;

  // A conquest-minded player fixates on the nearest rival capital.
  PlayerId conquest_target = kNoPlayer;
  if (d.grand == GrandStrategy::Conquest) {
    const City* my_cap = state.find_city(ps.original_capital);
    int best_dist = 1 << 20;
    for (PlayerId q = 0; q < state.config.player_count; ++q) {
      if (q == p || !state.players[q].alive || !ps.relations[q].met) continue;
      const City* cap = state.find_city(state.players[q].original_capital);
      if (!cap || !my_cap) continue;
      const int dist = hex_distance(my_cap->pos, cap->pos);
      if (dist < best_dist) {
        best_dist = dist;
        conquest_target = q;
      }
    }
  }

  const int my_score = compute_score(state, p);
  bool declared_this_turn = false;
  int my_military = -1;

  for (PlayerId q = 0; q < state.config.player_count; ++q) {
    if (q == p || !state.players[q].alive) continue;
    Relation& rel = ps.relations[q];
    if (!rel.met) continue;

    // Opinion drift: proximity, rivalry, and conquest ambitions erode it;
    // quiet borders let it recover.
    bool border_contest = false;
    for (const auto& [cid, c] : state.cities) {
      if (c.owner != q) continue;
      for (const auto& [cid2, c2] : state.cities) {
        if (c2.owner == p && hex_distance(c.pos, c2.pos) <= 4) {
          border_contest = true;
          break;
        }
      }
      if (border_contest) break;
    }
    int drift = 0;
    if (border_contest) drift -= 2;
    if (w.competitiveness >= 40 && compute_score(state, q) * 4 >= my_score * 5) drift -= 1;
    if (conquest_target == q) drift -= 2;
    if (drift == 0) {
      if (rel.opinion < 0) drift = 1 + w.peace_propensity / 100;
      else if (rel.opinion > 0) drift = -1;
    }
    rel.opinion = std::clamp(rel.opinion + drift, -100, 100);

    if (rel.stance == Stance::War) {
      const int duration = state.turn - rel.war_since;
      const int since_capture =
          rel.last_war_capture < 0 ? duration : state.turn - rel.last_war_capture;
      if (duration >= 12 && since_capture >= 8) {
        const int peace_score = w.peace_propensity + w.caution + 20 * (duration - 12);
        if (static_cast<int>(state.rng.below(3000)) < peace_score) {
          rel.stance = Stance::Neutral;
          rel.war_since = -1;
          rel.opinion = std::max(rel.opinion, -20);
          Relation& back = state.players[q].relations[p];
          back.stance = Stance::Neutral;
          back.war_since = -1;
          back.opinion = std::max(back.opinion, -20);
          Json payload;
          payload["Player"] = p;
          payload["Target"] = q;
          log_with_visibility(state, p, EventKind::PeaceMade, std::move(payload), {}, true);
        }
      }
      continue;
    }

    // Stance thresholds, persona-shifted.
    const int friendly_thr = 35 - w.friendly_propensity / 20;
    const int hostile_thr = -30 + w.hostile_propensity / 10;
    Stance next = Stance::Neutral;
    if (rel.opinion >= friendly_thr) next = Stance::Friendly;
    else if (rel.opinion <= hostile_thr) next = Stance::Hostile;
    if (rel.stance == Stance::Friendly && next != Stance::Friendly) {
      // Loyalty resists downgrades.
      if (rel.opinion >= friendly_thr - w.loyalty_hold / 10) next = Stance::Friendly;
    }
    rel.stance = next;

    // War declaration.
    if (!declared_this_turn && rel.stance == Stance::Hostile) {
      int military_units = 0;
      for (const auto& [id, u] : state.units) {
        if (u.owner == p && u.cls != UnitClass::Settler && u.cls != UnitClass::Worker) {
          ++military_units;
        }
      }
      if (military_units >= 2) {
        if (my_military < 0) my_military = military_strength(state, p);
        const int their_military = std::max(1, military_strength(state, q));
        const int ratio = my_military * 100 / their_military;
        int score = w.war_propensity;
        if (ratio >= 150) score *= 2;
        else if (ratio < 70) score /= 4;
        if (d.grand == GrandStrategy::Conquest) score *= 2;
        if (d.flavors[tactical::Flavor::Offense] >= 60) score += score / 2;
        if (static_cast<int>(state.rng.below(4000)) < score) {
          rel.stance = Stance::War;
          rel.war_since = state.turn;
          rel.opinion = std::max(-100, rel.opinion - 40);
          Relation& back = state.players[q].relations[p];
          back.stance = Stance::War;
          back.war_since = state.turn;
          back.opinion = std::max(-100, back.opinion - 40);
          declared_this_turn = true;
          Json payload;
          payload["Player"] = p;
          payload["Target"] = q;
          log_with_visibility(state, p, EventKind::WarDeclared, std::move(payload), {}, true);
        }
      }
    }
  }

  // City-state patronage: sustained investment in the nearest active
  // city-state; influence decays elsewhere, so patronage is contestable.
  if (d.flavors[tactical::Flavor::Diplomacy] >= 25 && ps.treasury >= 5 && !state.city_states.empty()) {
    const City* my_cap = state.find_city(ps.original_capital);
    int best = -1;
    int best_dist = 1 << 20;
    for (int i = 0; i < static_cast<int>(state.city_states.size()); ++i) {
      const auto& cs = state.city_states[i];
      const City* city = state.find_city(cs.city);
      if (!city || city->owner != cs.id) continue;  // captured city-states are gone
      const int dist = my_cap ? hex_distance(my_cap->pos, city->pos) : 0;
      if (dist < best_dist) {
        best_dist = dist;
        best = i;
      }
    }
    if (best >= 0) {
      ps.treasury -= 5;
      const auto& arch = archetype(ps.archetype);
      state.city_states[best].influence[p] += 2 * arch.influence_gain_pct / 100;
    }
  }
}

void run_growth_phase(TurnContext& ctx, PlayerId p, const std::map<CityId, Yields>& city_snapshot) {
  GameState& state = ctx.state;
  const int happiness = player_happiness(state, p);

  for (auto& [id, city] : state.cities) {
    if (city.owner != p) continue;
    const auto snap = city_snapshot.find(id);
    if (snap == city_snapshot.end()) continue;  // captured this turn
    int surplus = snap->second.food - 2 * city.population;
    if (happiness < 0) surplus = std::min(surplus, 0);
    city.food_stored += surplus;
    const int threshold = growth_threshold(city.population);
    const int old_pop = city.population;
    if (city.food_stored >= threshold) {
      city.population += 1;
      city.food_stored -= threshold;
    } else if (city.food_stored < 0) {
      city.population = std::max(1, city.population - 1);
      city.food_stored = 0;
    }
    if (city.population != old_pop) {
      Json payload;
      payload["Player"] = p;
      payload["OldPopulation"] = old_pop;
      payload["NewPopulation"] = city.population;
      payload["City"] = city_json(city);
      log_with_visibility(state, p, EventKind::SetPopulation, std::move(payload), {city.pos},
                          false);
    }
  }

  for (auto& [id, city] : state.cities) {
    if (city.owner != p) continue;
    if (!city.attacked_this_turn) city.hp = std::min(100, city.hp + 10);
    city.attacked_this_turn = false;
  }
}

void hold_vote(GameState& state) {
  state.last_vote_turn = state.turn;
  const int n = state.config.player_count;
  for (PlayerId p = 0; p < n; ++p) {
    if (state.players[p].alive) state.players[p].delegates += 1;
  }
  // A city-state backs its strict-majority patron, and only a committed one.
  constexpr int kPatronMinInfluence = 20;
  for (const auto& cs : state.city_states) {
    const City* city = state.find_city(cs.city);
    if (!city || city->owner != cs.id) continue;
    PlayerId patron = kNoPlayer;
    int best = kPatronMinInfluence - 1;
    bool tie = false;
    for (PlayerId p = 0; p < n; ++p) {
      if (!state.players[p].alive) continue;
      if (cs.influence[p] > best) {
        best = cs.influence[p];
        patron = p;
        tie = false;
      } else if (cs.influence[p] == best && patron != kNoPlayer) {
        tie = true;
      }
    }
    if (patron != kNoPlayer && !tie) state.players[patron].delegates += 1;
  }
  Json payload;
  payload["Turn"] = state.turn;
  Json delegates = Json::array();
  for (PlayerId p = 0; p < n; ++p) delegates.push_back(state.players[p].delegates);
  payload["Delegates"] = std::move(delegates);
  payload["Threshold"] = n + 1;
  Event& e = state.log_event(state.turn, EventKind::VoteHeld, std::move(payload));
  e.visible_to = (1 << n) - 1;
}

void set_victory(GameState& state, const VictoryResult& v) {
  state.victory = v;
  Json payload;
  payload["Player"] = v.winner;
  payload["Kind"] = to_string(v.kind);
  payload["Turn"] = v.turn;
  Event& e = state.log_event(state.turn, EventKind::VictoryAchieved, std::move(payload));
  e.visible_to = (1 << state.config.player_count) - 1;
}

}  // namespace

std::vector<Event> advance_turn(GameState& state,
                                const std::vector<StrategyDirectives>& directives) {
  if (state.terminal()) throw std::logic_error("advance_turn: game already has a victory result");
  if (static_cast<int>(directives.size()) != state.config.player_count) {
    throw std::invalid_argument("advance_turn: one StrategyDirectives entry per player required");
  }

  const std::size_t log_start = state.event_log.size();
  TurnContext ctx{state, directives, state.turn};

  // City-state influence decays slowly; patronage must be maintained.
  if (state.turn % 2 == 0) {
    for (auto& cs : state.city_states) {
      for (auto& inf : cs.influence) inf = std::max(0, inf - 1);
    }
  }

  if (state.turn > 0 && state.turn % 25 == 0 && state.last_vote_turn != state.turn &&
      votes_unlocked(state)) {
    hold_vote(state);
    if (const auto v = check_victory(state)) set_victory(state, *v);
  }

  for (PlayerId p = 0; p < state.config.player_count && !state.terminal(); ++p) {
    if (!state.players[p].alive) continue;

    std::map<CityId, Yields> snapshot;
    run_income_phase(ctx, p, snapshot);
    run_production_phase(ctx, p, snapshot);
    run_tactical_phase(ctx, p);
    run_diplomacy_phase(ctx, p);
    run_growth_phase(ctx, p, snapshot);

    PlayerId next = kNoPlayer;
    for (PlayerId q = p + 1; q < state.config.player_count; ++q) {
      if (state.players[q].alive) {
        next = q;
        break;
      }
    }
    Json payload;
    payload["Player"] = p;
    payload["NextPlayer"] = next;
    Event& e = state.log_event(state.turn, EventKind::PlayerDoneTurn, std::move(payload));
    e.visible_to = (1 << state.config.player_count) - 1;

    if (const auto v = check_victory(state)) set_victory(state, *v);
  }

  if (!state.terminal()) {
    state.turn += 1;
    if (const auto v = check_victory(state)) set_victory(state, *v);
  }

  return std::vector<Event>(state.event_log.begin() + static_cast<std::ptrdiff_t>(log_start),
                            state.event_log.end());
}

}  // namespace strategos::engine
