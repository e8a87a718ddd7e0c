#include "strategos/tactical/production.h"

#include <stdexcept>

#include "strategos/engine/internal.h"
#include "strategos/tables.h"

namespace strategos::tactical {

using engine::GameState;
using engine::City;
using engine::ProducibleId;

namespace {

int count_player_units(const GameState& state, engine::PlayerId p, bool military_only) {
  int n = 0;
  for (const auto& [id, u] : state.units) {
    if (u.owner != p) continue;
    if (military_only &&
        (u.cls == engine::UnitClass::Settler || u.cls == engine::UnitClass::Worker)) {
      continue;
    }
    ++n;
  }
  return n;
}

int count_units_of_class(const GameState& state, engine::PlayerId p, engine::UnitClass cls) {
  int n = 0;
  for (const auto& [id, u] : state.units) {
    if (u.owner == p && u.cls == cls) ++n;
  }
  return n;
}

// Enemy pressure near the city: summed strength of at-war units within 3.
int defense_need(const GameState& state, const City& city) {
  int need = 0;
  for (const auto& [id, u] : state.units) {
    if (engine::is_city_state_owner(u.owner)) continue;
    if (!state.at_war(city.owner, u.owner)) continue;
    if (engine::hex_distance(u.pos, city.pos) <= 3) {
      need += engine::unit_effective_strength(state, u, false);
    }
  }
  return need;
}

int unrevealed_count(const GameState& state, engine::PlayerId p) {
  int n = 0;
  for (const auto cell : state.revealed[p]) {
    if (cell == 0) ++n;
  }
  return n;
}

int situational_bonus(const GameState& state, const City& city, ProducibleId item) {
  const engine::PlayerId p = city.owner;
  const auto* unit = engine::find_unit_stats(item);

  if (unit) {
    const int cities = engine::internal::count_cities(state, p);
    switch (unit->cls) {
      case engine::UnitClass::Melee:
      case engine::UnitClass::Ranged:
      case engine::UnitClass::Mounted: {
        int bonus = 2 * defense_need(state, city);
        if (count_player_units(state, p, true) >= cities * 4 + 4) bonus -= 200;
        return bonus;
      }
      case engine::UnitClass::Scout: {
        const int total = static_cast<int>(state.tiles.size());
        const bool frontier = unrevealed_count(state, p) * 100 / total >= 15;
        if (count_units_of_class(state, p, engine::UnitClass::Scout) >= 2) return -100;
        return frontier ? 15 : -20;
      }
      case engine::UnitClass::Settler: {
        if (cities >= 6) return -1000;
        if (count_units_of_class(state, p, engine::UnitClass::Settler) >= 2) return -500;
        return engine::best_settle_site(state, p).has_value() ? 30 : -1000;
      }
      case engine::UnitClass::Worker: {
        if (count_units_of_class(state, p, engine::UnitClass::Worker) >= cities) return -50;
        return 20;
      }
    }
  }
  if (engine::is_project(item)) return 50;
  return 0;
}

}  // namespace

int score_production_item(const GameState& state, const City& city, ProducibleId item,
                          const FlavorVector& flavors) {
  if (!engine::production_legal(state, city, item)) {
    throw std::invalid_argument(std::string("score_production_item: illegal item ") +
                                engine::producible_name(item));
  }
  const auto& affinity = tables::get().affinity[item];
  int score = 0;
  for (int f = 0; f < kFlavorCount; ++f) {
    score += flavors[static_cast<Flavor>(f)] * affinity[f];
  }
  return score + situational_bonus(state, city, item);
}

ProducibleId choose_city_production(const GameState& state, const City& city,
                                    const FlavorVector& flavors) {
  const auto legal = engine::legal_production(state, city);
  if (legal.empty()) throw std::logic_error("choose_city_production: no legal items");
  ProducibleId best = legal.front();
  int best_score = score_production_item(state, city, best, flavors);
  for (std::size_t i = 1; i < legal.size(); ++i) {
    const int s = score_production_item(state, city, legal[i], flavors);
    if (s > best_score) {  // ties keep the lower id
      best_score = s;
      best = legal[i];
    }
  }
  return best;
}

}  // namespace strategos::tactical
