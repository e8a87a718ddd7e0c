#pragma once

#include <vector>

#include "strategos/engine/state.h"

namespace strategos::tactical {

enum class Dominance { Friendly, Neutral, Enemy, Contested };

const char* to_string(Dominance d);

// One cell of the Voronoi partition around known cities. Wilderness zones
// cover landmasses (or water bodies) whose component has no known city.
struct TacticalZone {
  int id = 0;                 // city id, or a synthetic wilderness id
  engine::CityId city = -1;   // -1 for wilderness zones
  Dominance dominance = Dominance::Neutral;
  int friendly_strength = 0;
  int enemy_strength = 0;
  int neutral_strength = 0;
  int zone_value = 0;
  int plots = 0;
  engine::Hex center;
  std::vector<int> neighbors;  // adjacent zone ids, ascending
  bool water = false;
};

struct ZonePartition {
  std::vector<TacticalZone> zones;
  std::vector<int> tile_zone;  // tile index -> index into zones

  const TacticalZone* at(const engine::GameState& state, engine::Hex h) const;
};

// Partitions the map as seen by `viewer`: every tile belongs to exactly one
// zone; strengths sum only units visible to the viewer. Dominance rule:
// Friendly when friendly >= 1.5x enemy, Enemy when enemy >= 1.5x friendly,
// Contested otherwise; Neutral when both sides are absent.
// Throws std::invalid_argument for a dead viewer.
ZonePartition compute_tactical_zones(const engine::GameState& state, engine::PlayerId viewer);

}  // namespace strategos::tactical
