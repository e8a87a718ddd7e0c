#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace strategos::engine {

using PlayerId = int;
using CityId = int;
using UnitId = int;
using TechId = int;
using PolicyId = int;
using ProducibleId = int;

inline constexpr PlayerId kNoPlayer = -1;
// City-state owners are offset out of the major-player id range.
inline constexpr PlayerId kCityStateOwnerBase = 100;

inline bool is_city_state_owner(PlayerId p) { return p >= kCityStateOwnerBase; }

enum class VictoryKind { Domination, Science, Cultural, Diplomatic, Time };
inline constexpr std::array<VictoryKind, 5> kAllVictoryKinds = {
    VictoryKind::Domination, VictoryKind::Science, VictoryKind::Cultural,
    VictoryKind::Diplomatic, VictoryKind::Time};

enum class GrandStrategy { Culture = 0, UnitedNations = 1, Spaceship = 2, Conquest = 3 };
inline constexpr int kGrandStrategyCount = 4;

enum class Stance { War, Hostile, Neutral, Friendly };

enum class Ideology { None, Freedom, Order, Autocracy };

enum class Terrain { Grassland, Plains, Hills, Forest, Desert, Mountain, Water };

enum class Improvement { None, Farm, Mine };

enum class UnitClass { Melee, Ranged, Mounted, Scout, Settler, Worker };

const char* to_string(VictoryKind k);
const char* to_string(GrandStrategy g);
const char* to_string(Stance s);
const char* to_string(Ideology i);
const char* to_string(Terrain t);
const char* to_string(UnitClass c);

bool parse_victory_kind(const std::string& s, VictoryKind& out);
bool parse_grand_strategy(const std::string& s, GrandStrategy& out);

// Per-turn yield bundle. All game economy is integral so that serialized
// state is bit-identical across platforms.
struct Yields {
  int food = 0;
  int production = 0;
  int gold = 0;
  int science = 0;
  int culture = 0;
  int faith = 0;

  Yields& operator+=(const Yields& o) {
    food += o.food;
    production += o.production;
    gold += o.gold;
    science += o.science;
    culture += o.culture;
    faith += o.faith;
    return *this;
  }
};

struct GameConfig {
  int map_width = 16;
  int map_height = 16;
  int player_count = 4;
  int max_turns = 200;
  int archetype_pool_size = 8;
  std::set<VictoryKind> victory_toggles = {VictoryKind::Domination, VictoryKind::Science,
                                           VictoryKind::Cultural, VictoryKind::Diplomatic,
                                           VictoryKind::Time};
  std::uint64_t seed = 0;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct VictoryResult {
  PlayerId winner = kNoPlayer;
  VictoryKind kind = VictoryKind::Time;
  int turn = 0;
};

}  // namespace strategos::engine
