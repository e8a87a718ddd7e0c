#include "strategos/engine/types.h"

#include <stdexcept>
#include <string>

namespace strategos::engine {

const char* to_string(VictoryKind k) {
  switch (k) {
    case VictoryKind::Domination: return "Domination";
    case VictoryKind::Science: return "Science";
    case VictoryKind::Cultural: return "Cultural";
    case VictoryKind::Diplomatic: return "Diplomatic";
    case VictoryKind::Time: return "Time";
  }
  return "Time";
}

const char* to_string(GrandStrategy g) {
  switch (g) {
    case GrandStrategy::Culture: return "Culture";
    case GrandStrategy::UnitedNations: return "UnitedNations";
    case GrandStrategy::Spaceship: return "Spaceship";
    case GrandStrategy::Conquest: return "Conquest";
  }
  return "Culture";
}

const char* to_string(Stance s) {
  switch (s) {
    case Stance::War: return "War";
    case Stance::Hostile: return "Hostile";
    case Stance::Neutral: return "Neutral";
    case Stance::Friendly: return "Friendly";
  }
  return "Neutral";
}

const char* to_string(Ideology i) {
  switch (i) {
    case Ideology::None: return "None";
    case Ideology::Freedom: return "Freedom";
    case Ideology::Order: return "Order";
    case Ideology::Autocracy: return "Autocracy";
  }
  return "None";
}

const char* to_string(Terrain t) {
  switch (t) {
    case Terrain::Grassland: return "Grassland";
    case Terrain::Plains: return "Plains";
    case Terrain::Hills: return "Hills";
    case Terrain::Forest: return "Forest";
    case Terrain::Desert: return "Desert";
    case Terrain::Mountain: return "Mountain";
    case Terrain::Water: return "Water";
  }
  return "Grassland";
}

const char* to_string(UnitClass c) {
  switch (c) {
    case UnitClass::Melee: return "Melee";
    case UnitClass::Ranged: return "Ranged";
    case UnitClass::Mounted: return "Mounted";
    case UnitClass::Scout: return "Scout";
    case UnitClass::Settler: return "Settler";
    case UnitClass::Worker: return "Worker";
  }
  return "Melee";
}

bool parse_victory_kind(const std::string& s, VictoryKind& out) {
  for (const auto k : kAllVictoryKinds) {
    if (s == to_string(k)) {
      out = k;
      return true;
    }
  }
  return false;
}

bool parse_grand_strategy(const std::string& s, GrandStrategy& out) {
  for (int i = 0; i < kGrandStrategyCount; ++i) {
    const auto g = static_cast<GrandStrategy>(i);
    if (s == to_string(g)) {
      out = g;
      return true;
    }
  }
  return false;
}

void GameConfig::validate() const {
  if (map_width < 8 || map_width > 64) throw std::invalid_argument("map_width must be in [8, 64]");
  if (map_height < 8 || map_height > 64) throw std::invalid_argument("map_height must be in [8, 64]");
  if (player_count < 2) throw std::invalid_argument("player_count must be >= 2");
  if (player_count > 8) throw std::invalid_argument("player_count must be <= 8");
  if (max_turns < 1) throw std::invalid_argument("max_turns must be >= 1");
  if (archetype_pool_size < 1 || archetype_pool_size > 8) {
    throw std::invalid_argument("archetype_pool_size must be in [1, 8]");
  }
  if (victory_toggles.empty()) throw std::invalid_argument("victory_toggles must not be empty");
}

}  // namespace strategos::engine
