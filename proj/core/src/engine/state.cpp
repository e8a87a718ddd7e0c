#include "strategos/engine/state.h"

#include <algorithm>

namespace strategos::engine {

namespace {
constexpr const char* kEventNames[] = {
    "UnitMoved",     "TileRevealed",   "SetPopulation",    "UnitPromoted",  "PlayerDoneTurn",
    "CityFounded",   "CombatResolved", "WarDeclared",      "PeaceMade",     "PolicyAdopted",
    "TechFinished",  "UnitCreated",    "UnitDestroyed",    "CityCaptured",  "BuildingCompleted",
    "ProjectCompleted", "TileImproved", "PlayerEliminated", "IdeologyAdopted", "VoteHeld",
    "VictoryAchieved",
};
}

const char* to_string(EventKind k) { return kEventNames[static_cast<int>(k)]; }

bool parse_event_kind(const std::string& s, EventKind& out) {
  for (std::size_t i = 0; i < std::size(kEventNames); ++i) {
    if (s == kEventNames[i]) {
      out = static_cast<EventKind>(i);
      return true;
    }
  }
  return false;
}

bool City::has_building(ProducibleId b) const {
  return std::binary_search(buildings.begin(), buildings.end(), b);
}

bool PlayerState::has_tech(TechId t) const {
  return std::binary_search(techs_known.begin(), techs_known.end(), t);
}

bool PlayerState::has_policy(PolicyId p) const {
  return std::find(policies_adopted.begin(), policies_adopted.end(), p) != policies_adopted.end();
}

const City* GameState::find_city(CityId id) const {
  const auto it = cities.find(id);
  return it == cities.end() ? nullptr : &it->second;
}

City* GameState::find_city(CityId id) {
  const auto it = cities.find(id);
  return it == cities.end() ? nullptr : &it->second;
}

const Unit* GameState::find_unit(UnitId id) const {
  const auto it = units.find(id);
  return it == units.end() ? nullptr : &it->second;
}

const Unit* GameState::unit_at(Hex h) const {
  for (const auto& [id, u] : units) {
    if (u.pos == h) return &u;
  }
  return nullptr;
}

const City* GameState::city_at(Hex h) const {
  for (const auto& [id, c] : cities) {
    if (c.pos == h) return &c;
  }
  return nullptr;
}

bool GameState::at_war(PlayerId a, PlayerId b) const {
  if (a == b || is_city_state_owner(a) || is_city_state_owner(b)) return false;
  return players[a].relations[b].stance == Stance::War;
}

Event& GameState::log_event(int turn_no, EventKind kind, Json payload) {
  Event e;
  e.turn = turn_no;
  e.index = static_cast<int>(event_log.size());
  e.kind = kind;
  e.payload = std::move(payload);
  event_log.push_back(std::move(e));
  return event_log.back();
}

}  // namespace strategos::engine
