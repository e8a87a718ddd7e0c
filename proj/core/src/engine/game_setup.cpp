#include <algorithm>
#include <stdexcept>

#include "strategos/engine/game.h"
#include "strategos/engine/internal.h"

namespace strategos::engine {

namespace internal {

std::vector<Hex> reveal_area(GameState& state, PlayerId player, Hex center, int radius) {
  std::vector<Hex> fresh;
  for (const Hex h : hexes_within(center, radius, state.config.map_width, state.config.map_height)) {
    auto& cell = state.revealed[player][state.tile_index(h)];
    if (cell == 0) {
      cell = 1;
      fresh.push_back(h);
    }
  }
  return fresh;
}

bool tile_visible_now(const GameState& state, PlayerId player, Hex h) {
  for (const auto& [id, u] : state.units) {
    if (u.owner == player && hex_distance(u.pos, h) <= 2) return true;
  }
  for (const auto& [id, c] : state.cities) {
    if (c.owner == player && hex_distance(c.pos, h) <= 2) return true;
  }
  return false;
}

int event_visibility(const GameState& state, PlayerId actor, const std::vector<Hex>& plots,
                     bool public_event) {
  int mask = 0;
  for (PlayerId p = 0; p < state.config.player_count; ++p) {
    if (p == actor || public_event) {
      mask |= 1 << p;
      continue;
    }
    for (const Hex h : plots) {
      if (tile_visible_now(state, p, h)) {
        mask |= 1 << p;
        break;
      }
    }
  }
  if (actor >= 0 && actor < state.config.player_count) mask |= 1 << actor;
  return mask;
}

const char* unit_role(UnitClass cls) {
  switch (cls) {
    case UnitClass::Melee: return "Melee";
    case UnitClass::Ranged: return "Ranged";
    case UnitClass::Mounted: return "Mounted";
    case UnitClass::Scout: return "Explore";
    case UnitClass::Settler: return "Settle";
    case UnitClass::Worker: return "Build";
  }
  return "Melee";
}

Json unit_json(const Unit& u) {
  Json j;
  j["Level"] = u.level;
  j["AI"] = unit_role(u.cls);
  j["Unit"] = unit_stats_for_class(u.cls)->name;
  j["ID"] = u.id;
  return j;
}

Json plot_json(const GameState& state, Hex h) {
  const Tile& t = state.tile(h);
  Json j;
  j["Terrain"] = to_string(t.terrain);
  j["X"] = h.x;
  j["Y"] = h.y;
  if (t.owner != kNoPlayer) j["Owner"] = t.owner;
  if (t.improvement != Improvement::None) {
    j["Improvement"] = t.improvement == Improvement::Farm ? "Farm" : "Mine";
  }
  if (t.city >= 0) j["CityID"] = t.city;
  return j;
}

Json city_json(const City& c) {
  Json j;
  j["City"] = c.name;
  j["CityID"] = c.id;
  j["Owner"] = c.owner;
  j["X"] = c.pos.x;
  j["Y"] = c.pos.y;
  j["Population"] = c.population;
  return j;
}

Unit& spawn_unit(GameState& state, PlayerId owner, UnitClass cls, Hex pos) {
  Unit u;
  u.id = state.next_unit_id++;
  u.owner = owner;
  u.cls = cls;
  u.pos = pos;
  u.moves_left = 0;
  return state.units.emplace(u.id, u).first->second;
}

City& found_city(GameState& state, PlayerId owner, Hex pos, const std::string& name) {
  City c;
  c.id = state.next_city_id++;
  c.owner = owner;
  c.pos = pos;
  c.name = name;
  c.founded_turn = state.turn;
  for (const Hex n : hexes_within(pos, 1, state.config.map_width, state.config.map_height)) {
    if (state.tile(n).terrain == Terrain::Water) {
      c.is_coastal = true;
      break;
    }
  }
  City& placed = state.cities.emplace(c.id, c).first->second;
  Tile& center = state.tile(pos);
  center.city = placed.id;
  center.owner = owner;
  for (const Hex n : hexes_within(pos, 1, state.config.map_width, state.config.map_height)) {
    Tile& t = state.tile(n);
    if (t.owner == kNoPlayer) t.owner = owner;
  }
  return placed;
}

}  // namespace internal

using namespace internal;

namespace {

Terrain roll_terrain(Rng& rng) {
  const int r = static_cast<int>(rng.below(100));
  if (r < 28) return Terrain::Grassland;
  if (r < 54) return Terrain::Plains;
  if (r < 70) return Terrain::Hills;
  if (r < 82) return Terrain::Forest;
  if (r < 92) return Terrain::Desert;
  if (r < 96) return Terrain::Mountain;
  return Terrain::Water;
}

// Start anchors as fractions of the map, up to 8 players.
constexpr int kAnchorNum[8][2] = {{1, 1}, {3, 3}, {3, 1}, {1, 3}, {2, 0}, {2, 4}, {0, 2}, {4, 2}};

Hex player_anchor(const GameConfig& cfg, int index) {
  // Fractions are quarters; the {x,0}/{x,4} rows map to edge centers.
  const auto& a = kAnchorNum[index];
  const int x = std::clamp(a[0] * cfg.map_width / 4, 1, cfg.map_width - 2);
  const int y = std::clamp(a[1] * cfg.map_height / 4, 1, cfg.map_height - 2);
  return Hex{x, y};
}

void flatten_for_start(GameState& state, Hex center) {
  Tile& t = state.tile(center);
  t.terrain = Terrain::Plains;
  for (const Hex n : hexes_within(center, 1, state.config.map_width, state.config.map_height)) {
    Tile& tn = state.tile(n);
    if (tn.terrain == Terrain::Mountain) tn.terrain = Terrain::Hills;
    if (tn.terrain == Terrain::Water) tn.terrain = Terrain::Grassland;
  }
}

Hex jitter(const GameState& state, Rng& rng, Hex h) {
  const int dx = rng.range(-1, 1);
  const int dy = rng.range(-1, 1);
  const Hex j{std::clamp(h.x + dx, 1, state.config.map_width - 2),
              std::clamp(h.y + dy, 1, state.config.map_height - 2)};
  return j;
}

Hex adjacent_free_passable(const GameState& state, Hex center) {
  for (const Hex n : hex_neighbors(center)) {
    if (!state.in_bounds(n)) continue;
    if (!state.tile(n).passable()) continue;
    if (state.unit_at(n) != nullptr) continue;
    return n;
  }
  return center;
}

}  // namespace

GameState new_game(const GameConfig& config) {
  config.validate();

  GameState state;
  state.config = config;
  state.rng = Rng::seeded(config.seed);

  const int tile_count = config.map_width * config.map_height;
  state.tiles.resize(tile_count);
  for (auto& t : state.tiles) t.terrain = roll_terrain(state.rng);

  state.revealed.assign(config.player_count, std::vector<std::uint8_t>(tile_count, 0));

  // Random archetype assignment: shuffle the pool, deal one per player.
  std::vector<int> pool(config.archetype_pool_size);
  for (int i = 0; i < config.archetype_pool_size; ++i) pool[i] = i;
  for (int i = config.archetype_pool_size - 1; i > 0; --i) {
    const int j = static_cast<int>(state.rng.below(static_cast<std::uint32_t>(i + 1)));
    std::swap(pool[i], pool[j]);
  }

  state.players.resize(config.player_count);
  for (PlayerId p = 0; p < config.player_count; ++p) {
    PlayerState& ps = state.players[p];
    ps.id = p;
    ps.archetype = pool[p % config.archetype_pool_size];
    ps.treasury = 20;
    ps.relations.assign(config.player_count, Relation{});
    ps.tourism_exported.assign(config.player_count, 0);
  }

  // Capitals.
  for (PlayerId p = 0; p < config.player_count; ++p) {
    const Hex spot = jitter(state, state.rng, player_anchor(config, p));
    flatten_for_start(state, spot);
    const auto& arch = archetype(state.players[p].archetype);
    City& capital = found_city(state, p, spot, arch.city_names[0]);
    state.players[p].original_capital = capital.id;

    Unit& warrior = spawn_unit(state, p, UnitClass::Melee, spot);
    (void)warrior;
    const Hex scout_spot = adjacent_free_passable(state, spot);
    spawn_unit(state, p, UnitClass::Scout, scout_spot);

    reveal_area(state, p, spot, 2);
    reveal_area(state, p, scout_spot, 2);
  }

  // Two neutral city-states between the start quadrants.
  const char* cs_names[2] = {"Tidewatch", "Stonebridge"};
  for (int i = 0; i < 2; ++i) {
    Hex spot = jitter(state, state.rng,
                      Hex{config.map_width / 2, i == 0 ? config.map_height / 8
                                                       : config.map_height * 7 / 8});
    // Keep clear of capitals.
    bool clear = false;
    while (!clear) {
      clear = true;
      for (const auto& [id, c] : state.cities) {
        if (hex_distance(c.pos, spot) < 3) {
          spot = Hex{std::clamp(spot.x + 2, 1, config.map_width - 2),
                     std::clamp(spot.y, 1, config.map_height - 2)};
          clear = false;
          break;
        }
      }
      if (!clear && spot.x >= config.map_width - 2) break;
    }
    flatten_for_start(state, spot);
    const PlayerId cs_owner = kCityStateOwnerBase + i;
    City& city = found_city(state, cs_owner, spot, cs_names[i]);
    CityStateInfo info;
    info.id = cs_owner;
    info.name = cs_names[i];
    info.city = city.id;
    info.influence.assign(config.player_count, 0);
    state.city_states.push_back(std::move(info));
    spawn_unit(state, cs_owner, UnitClass::Melee, spot);
  }

  return state;
}

}  // namespace strategos::engine
