#include "strategos/tactical/zones.h"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "strategos/engine/game.h"
#include "strategos/engine/internal.h"

namespace strategos::tactical {

using engine::GameState;
using engine::Hex;
using engine::PlayerId;

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::Friendly: return "Friendly";
    case Dominance::Neutral: return "Neutral";
    case Dominance::Enemy: return "Enemy";
    case Dominance::Contested: return "Contested";
  }
  return "Neutral";
}

const TacticalZone* ZonePartition::at(const GameState& state, Hex h) const {
  const int idx = state.tile_index(h);
  if (idx < 0 || idx >= static_cast<int>(tile_zone.size())) return nullptr;
  return &zones[tile_zone[idx]];
}

namespace {

// Connected components over land (non-water) and water tiles separately.
std::vector<int> label_components(const GameState& state) {
  const int w = state.config.map_width;
  const int h = state.config.map_height;
  std::vector<int> comp(w * h, -1);
  int next = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const Hex start{x, y};
      const int si = state.tile_index(start);
      if (comp[si] != -1) continue;
      const bool water = state.tile(start).terrain == engine::Terrain::Water;
      std::deque<Hex> queue{start};
      comp[si] = next;
      while (!queue.empty()) {
        const Hex cur = queue.front();
        queue.pop_front();
        for (const Hex n : engine::hex_neighbors(cur)) {
          if (!state.in_bounds(n)) continue;
          const int ni = state.tile_index(n);
          if (comp[ni] != -1) continue;
          if ((state.tile(n).terrain == engine::Terrain::Water) != water) continue;
          comp[ni] = next;
          queue.push_back(n);
        }
      }
      ++next;
    }
  }
  return comp;
}

}  // namespace

ZonePartition compute_tactical_zones(const GameState& state, PlayerId viewer) {
  if (viewer < 0 || viewer >= state.config.player_count || !state.players[viewer].alive) {
    throw std::invalid_argument("compute_tactical_zones: viewer dead or unknown");
  }

  const int w = state.config.map_width;
  const int h = state.config.map_height;
  const std::vector<int> comp = label_components(state);

  // Known cities: city tile revealed to the viewer.
  std::vector<const engine::City*> known;
  for (const auto& [id, c] : state.cities) {
    if (state.is_revealed(viewer, c.pos)) known.push_back(&c);
  }

  ZonePartition out;
  out.tile_zone.assign(w * h, -1);

  // Zone keys: city id, or a synthetic wilderness key per component.
  std::vector<int> zone_key_of_tile(w * h, -1);
  std::map<int, int> zone_index;  // key -> index into out.zones

  const auto zone_for_key = [&](int key, const engine::City* city, bool water) -> TacticalZone& {
    auto it = zone_index.find(key);
    if (it == zone_index.end()) {
      TacticalZone z;
      z.id = key;
      z.city = city ? city->id : -1;
      z.water = water;
      if (city) z.center = city->pos;
      it = zone_index.emplace(key, static_cast<int>(out.zones.size())).first;
      out.zones.push_back(std::move(z));
    }
    return out.zones[it->second];
  };

  constexpr int kWildernessBase = 100000;

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const Hex here{x, y};
      const int idx = state.tile_index(here);
      const engine::City* nearest = nullptr;
      int nearest_dist = 0;
      for (const auto* c : known) {
        if (comp[state.tile_index(c->pos)] != comp[idx]) continue;
        const int d = engine::hex_distance(here, c->pos);
        if (!nearest || d < nearest_dist || (d == nearest_dist && c->id < nearest->id)) {
          nearest = c;
          nearest_dist = d;
        }
      }
      const bool water = state.tile(here).terrain == engine::Terrain::Water;
      const int key = nearest ? nearest->id : kWildernessBase + comp[idx];
      TacticalZone& z = zone_for_key(key, nearest, water);
      z.plots += 1;
      out.tile_zone[idx] = zone_index.at(key);
      zone_key_of_tile[idx] = key;
    }
  }

  // Wilderness centers: plot centroid.
  {
    std::map<int, std::pair<long, long>> sums;
    std::map<int, int> counts;
    for (int idx = 0; idx < w * h; ++idx) {
      const int key = zone_key_of_tile[idx];
      if (key < kWildernessBase) continue;
      sums[key].first += idx % w;
      sums[key].second += idx / w;
      counts[key] += 1;
    }
    for (auto& [key, sum] : sums) {
      TacticalZone& z = out.zones[zone_index.at(key)];
      z.center = Hex{static_cast<int>(sum.first / counts[key]),
                     static_cast<int>(sum.second / counts[key])};
    }
  }

  // Strengths from units visible to the viewer.
  for (const auto& [id, u] : state.units) {
    const bool visible = u.owner == viewer || engine::internal::tile_visible_now(state, viewer, u.pos);
    if (!visible) continue;
    TacticalZone& z = out.zones[out.tile_zone[state.tile_index(u.pos)]];
    const int strength = engine::unit_effective_strength(state, u, false);
    if (u.owner == viewer) {
      z.friendly_strength += strength;
    } else if (!engine::is_city_state_owner(u.owner) && state.at_war(viewer, u.owner)) {
      z.enemy_strength += strength;
    } else {
      z.neutral_strength += strength;
    }
  }

  // Dominance and value.
  for (TacticalZone& z : out.zones) {
    if (z.friendly_strength == 0 && z.enemy_strength == 0) {
      z.dominance = Dominance::Neutral;
    } else if (2 * z.friendly_strength >= 3 * z.enemy_strength) {
      z.dominance = Dominance::Friendly;
    } else if (2 * z.enemy_strength >= 3 * z.friendly_strength) {
      z.dominance = Dominance::Enemy;
    } else {
      z.dominance = Dominance::Contested;
    }
    if (z.city >= 0) {
      const engine::City* c = state.find_city(z.city);
      bool capital = false;
      if (c && !engine::is_city_state_owner(c->owner)) {
        capital = state.players[c->owner].original_capital == c->id;
      }
      z.zone_value = (c ? c->population * 10 : 0) + (capital ? 30 : 10);
    } else {
      z.zone_value = z.plots / 3;
    }
  }

  // Neighbor zones via tile adjacency.
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const Hex here{x, y};
      const int zi = out.tile_zone[state.tile_index(here)];
      for (const Hex n : engine::hex_neighbors(here)) {
        if (!state.in_bounds(n)) continue;
        const int zj = out.tile_zone[state.tile_index(n)];
        if (zi == zj) continue;
        auto& nb = out.zones[zi].neighbors;
        const int other = out.zones[zj].id;
        if (std::find(nb.begin(), nb.end(), other) == nb.end()) nb.push_back(other);
      }
    }
  }
  for (TacticalZone& z : out.zones) std::sort(z.neighbors.begin(), z.neighbors.end());

  return out;
}

}  // namespace strategos::tactical
