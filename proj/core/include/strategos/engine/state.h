#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strategos/engine/content.h"
#include "strategos/engine/hex.h"
#include "strategos/engine/types.h"
#include "strategos/util/rng.h"

#include "json.hpp"

namespace strategos::engine {

using Json = nlohmann::ordered_json;

enum class EventKind {
  UnitMoved,
  TileRevealed,
  SetPopulation,
  UnitPromoted,
  PlayerDoneTurn,
  CityFounded,
  CombatResolved,
  WarDeclared,
  PeaceMade,
  PolicyAdopted,
  TechFinished,
  UnitCreated,
  UnitDestroyed,
  CityCaptured,
  BuildingCompleted,
  ProjectCompleted,
  TileImproved,
  PlayerEliminated,
  IdeologyAdopted,
  VoteHeld,
  VictoryAchieved,
};

const char* to_string(EventKind k);
bool parse_event_kind(const std::string& s, EventKind& out);

struct Event {
  int turn = 0;
  int index = 0;  // position in the log; strictly increasing
  EventKind kind = EventKind::PlayerDoneTurn;
  Json payload;   // kind-specific fields, insertion-ordered
  int visible_to = 0;  // bitmask over major players, stamped at log time

  bool visible(PlayerId p) const { return (visible_to & (1 << p)) != 0; }
};

struct Tile {
  Terrain terrain = Terrain::Grassland;
  Improvement improvement = Improvement::None;
  PlayerId owner = kNoPlayer;
  CityId city = -1;  // city occupying this tile, if any

  bool passable() const { return terrain != Terrain::Mountain && terrain != Terrain::Water; }
};

struct City {
  CityId id = -1;
  PlayerId owner = kNoPlayer;
  Hex pos;
  std::string name;
  int population = 1;
  int food_stored = 0;
  int production_stored = 0;
  ProducibleId current_production = -1;
  std::vector<ProducibleId> buildings;  // sorted, unique
  int hp = 100;
  bool attacked_this_turn = false;
  bool is_coastal = false;
  int founded_turn = 0;

  bool has_building(ProducibleId b) const;
};

struct Unit {
  UnitId id = -1;
  PlayerId owner = kNoPlayer;
  UnitClass cls = UnitClass::Melee;
  Hex pos;
  int hp = 100;
  int moves_left = 0;
  int level = 1;
  int kills = 0;
  bool fortified = false;
};

struct Relation {
  Stance stance = Stance::Neutral;
  int opinion = 0;        // [-100, 100]
  int war_since = -1;     // turn war started, -1 when at peace
  int last_war_capture = -1;
  bool met = false;
};

struct PlayerState {
  PlayerId id = 0;
  int archetype = 0;
  bool alive = true;
  CityId original_capital = -1;

  // Stockpiles.
  int treasury = 0;
  int research_progress = 0;
  TechId current_research = kNoTech;
  int culture_stockpile = 0;
  int faith_stockpile = 0;
  long long cumulative_culture = 0;

  // Rates recomputed every income phase (kept for reporting).
  int gold_rate = 0;
  int science_rate = 0;
  int culture_rate = 0;
  int faith_rate = 0;
  int tourism_rate = 0;

  std::vector<TechId> techs_known;       // sorted, unique
  std::vector<PolicyId> policies_adopted;  // adoption order, no duplicates
  Ideology ideology = Ideology::None;
  int delegates = 0;

  std::vector<Relation> relations;  // indexed by opponent player id
  std::vector<long long> tourism_exported;  // cumulative, indexed by opponent

  int spaceship_parts = 0;  // bitmask over the part projects
  int survived_until = -1;  // turn of elimination, -1 while alive

  bool has_tech(TechId t) const;
  bool has_policy(PolicyId p) const;
};

struct CityStateInfo {
  PlayerId id = kCityStateOwnerBase;
  std::string name;
  CityId city = -1;
  std::vector<int> influence;  // per major player
};

struct GameState {
  GameConfig config;
  int turn = 0;
  std::vector<Tile> tiles;  // row-major, size map_width * map_height
  std::vector<PlayerState> players;
  std::vector<CityStateInfo> city_states;
  std::map<CityId, City> cities;
  std::map<UnitId, Unit> units;
  std::vector<Event> event_log;
  Rng rng;
  std::optional<VictoryResult> victory;

  CityId next_city_id = 1000;
  UnitId next_unit_id = 2000;
  int last_vote_turn = -1;

  // Fog of war: revealed[p][tile_index] != 0 once player p has seen the tile.
  std::vector<std::vector<std::uint8_t>> revealed;

  int tile_index(Hex h) const { return h.y * config.map_width + h.x; }
  bool in_bounds(Hex h) const {
    return h.x >= 0 && h.x < config.map_width && h.y >= 0 && h.y < config.map_height;
  }
  const Tile& tile(Hex h) const { return tiles[tile_index(h)]; }
  Tile& tile(Hex h) { return tiles[tile_index(h)]; }

  bool is_revealed(PlayerId p, Hex h) const { return revealed[p][tile_index(h)] != 0; }
  const City* find_city(CityId id) const;
  City* find_city(CityId id);
  const Unit* find_unit(UnitId id) const;
  const Unit* unit_at(Hex h) const;
  const City* city_at(Hex h) const;
  bool terminal() const { return victory.has_value(); }

  // Majors at war with `p` (city-states never declare war here).
  bool at_war(PlayerId a, PlayerId b) const;

  Event& log_event(int turn_no, EventKind kind, Json payload);
};

}  // namespace strategos::engine
