#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strategos/engine/types.h"

namespace strategos::engine {

inline constexpr TechId kNoTech = -1;
inline constexpr int kTechCount = 10;
inline constexpr int kPolicyBranchCount = 3;
inline constexpr int kPoliciesPerBranch = 3;
inline constexpr int kPolicyCount = kPolicyBranchCount * kPoliciesPerBranch;
inline constexpr int kPersonaParamCount = 26;
inline constexpr int kSpaceshipPartCount = 3;

// Producible ids are stable; ties in production scoring break toward the
// lowest id.
namespace producible {
inline constexpr ProducibleId kWarrior = 0;
inline constexpr ProducibleId kArcher = 1;
inline constexpr ProducibleId kRider = 2;
inline constexpr ProducibleId kScout = 3;
inline constexpr ProducibleId kSettler = 4;
inline constexpr ProducibleId kWorker = 5;
inline constexpr ProducibleId kMonument = 6;
inline constexpr ProducibleId kGranary = 7;
inline constexpr ProducibleId kLibrary = 8;
inline constexpr ProducibleId kMarket = 9;
inline constexpr ProducibleId kPyramids = 10;
inline constexpr ProducibleId kColossus = 11;
inline constexpr ProducibleId kSpaceshipBooster = 12;
inline constexpr ProducibleId kSpaceshipCapsule = 13;
inline constexpr ProducibleId kSpaceshipEngine = 14;
inline constexpr int kCount = 15;
inline constexpr ProducibleId kFirstBuilding = kMonument;
inline constexpr ProducibleId kFirstProject = kSpaceshipBooster;
}  // namespace producible

struct UnitStats {
  ProducibleId id;
  UnitClass cls;
  const char* name;
  int strength;
  int ranged_strength;
  int range;
  int moves;
  int cost;
  int maintenance;
  TechId requires_tech;
};

struct BuildingStats {
  ProducibleId id;
  const char* name;
  int cost;
  bool wonder;
  TechId requires_tech;
  Yields yields;
  int happiness;
};

struct ProjectStats {
  ProducibleId id;
  const char* name;
  int cost;
};

struct TechStats {
  TechId id;
  const char* name;
  int tier;
  int cost;
  std::vector<TechId> prereqs;
  const char* description;
};

struct PolicyStats {
  PolicyId id;
  const char* name;
  int branch;        // 0..kPolicyBranchCount-1
  int branch_index;  // 0 = branch opener
  const char* description;
  Yields per_city;
  Yields capital;
  int happiness_per_city;
  int unit_strength;
  int settler_cost_pct;  // percentage discount, 0 = none
};

struct IdeologyStats {
  Ideology id;
  const char* name;
  const char* description;
  Yields per_city;
  int unit_strength;
  int tourism_pct_bonus;  // percentage added to tourism output
};

struct ArchetypeStats {
  int id;
  const char* name;
  std::array<const char*, 4> city_names;
  // Percent modifiers applied to the matching per-turn yields (100 = neutral).
  int production_pct;
  int science_pct;
  int culture_pct;
  int gold_pct;
  int faith_flat;  // flat faith per city
  int food_flat;   // flat food per city
  int unit_strength;
  int settler_cost_pct;
  int influence_gain_pct;
  std::array<int, kGrandStrategyCount> grand_bias;  // indexed by GrandStrategy
  std::array<int, kPersonaParamCount> default_persona;
};

std::span<const UnitStats> all_units();
std::span<const BuildingStats> all_buildings();
std::span<const ProjectStats> all_projects();
std::span<const TechStats> all_techs();
std::span<const PolicyStats> all_policies();
std::span<const IdeologyStats> all_ideologies();
std::span<const ArchetypeStats> all_archetypes();

const UnitStats* find_unit_stats(ProducibleId id);
const UnitStats* unit_stats_for_class(UnitClass cls);
const BuildingStats* find_building_stats(ProducibleId id);
const ProjectStats* find_project_stats(ProducibleId id);
const TechStats* find_tech(TechId id);
const TechStats* find_tech_by_name(const std::string& name);
const PolicyStats* find_policy(PolicyId id);
const PolicyStats* find_policy_by_name(const std::string& name);
const IdeologyStats* find_ideology(Ideology id);
const IdeologyStats* find_ideology_by_name(const std::string& name);
const ArchetypeStats& archetype(int id);

const char* producible_name(ProducibleId id);
std::optional<ProducibleId> producible_by_name(const std::string& name);
bool is_unit(ProducibleId id);
bool is_building(ProducibleId id);
bool is_project(ProducibleId id);

// Culture cost of the (n+1)-th policy when n policies are already adopted.
int policy_cost(int adopted_count);

// Food required for a city to grow beyond `population`.
int growth_threshold(int population);

}  // namespace strategos::engine
