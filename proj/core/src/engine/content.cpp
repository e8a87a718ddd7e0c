#include "strategos/engine/content.h"

#include <algorithm>
#include <stdexcept>

namespace strategos::engine {

namespace {

namespace tech {
constexpr TechId kMining = 0;
constexpr TechId kTrapping = 1;
constexpr TechId kAnimalHusbandry = 2;
constexpr TechId kFishing = 3;
constexpr TechId kBronzeWorking = 4;
constexpr TechId kCalendar = 5;
constexpr TechId kTheWheel = 6;
constexpr TechId kSailing = 7;
constexpr TechId kConstruction = 8;
constexpr TechId kCurrency = 9;
}  // namespace tech

const UnitStats kUnits[] = {
    {producible::kWarrior, UnitClass::Melee, "Warrior", 8, 0, 0, 2, 40, 1, kNoTech},
    {producible::kArcher, UnitClass::Ranged, "Archer", 5, 7, 2, 2, 40, 1, tech::kTrapping},
    {producible::kRider, UnitClass::Mounted, "Rider", 10, 0, 0, 4, 55, 1, tech::kAnimalHusbandry},
    {producible::kScout, UnitClass::Scout, "Scout", 4, 0, 0, 3, 25, 0, kNoTech},
    {producible::kSettler, UnitClass::Settler, "Settler", 0, 0, 0, 2, 85, 0, kNoTech},
    {producible::kWorker, UnitClass::Worker, "Worker", 0, 0, 0, 2, 45, 0, kNoTech},
};

const BuildingStats kBuildings[] = {
    {producible::kMonument, "Monument", 40, false, kNoTech, {.culture = 2}, 0},
    {producible::kGranary, "Granary", 50, false, kNoTech, {.food = 2}, 0},
    {producible::kLibrary, "Library", 65, false, tech::kCalendar, {.science = 3}, 0},
    {producible::kMarket, "Market", 65, false, tech::kCurrency, {.gold = 3}, 0},
    {producible::kPyramids, "Pyramids", 110, true, tech::kMining, {.production = 3, .faith = 2}, 0},
    {producible::kColossus, "Colossus", 110, true, tech::kSailing, {.gold = 4}, 2},
};

const ProjectStats kProjects[] = {
    {producible::kSpaceshipBooster, "SpaceshipBooster", 300},
    {producible::kSpaceshipCapsule, "SpaceshipCapsule", 300},
    {producible::kSpaceshipEngine, "SpaceshipEngine", 300},
};

const TechStats kTechs[] = {
    {tech::kMining, "Mining", 1, 35, {}, "Unlocks the Pyramids and lets Workers build Mines on hills."},
    {tech::kTrapping, "Trapping", 1, 35, {}, "Unlocks the Archer, a defensive ranged unit."},
    {tech::kAnimalHusbandry, "AnimalHusbandry", 1, 35, {}, "Unlocks the Rider, a fast mounted unit."},
    {tech::kFishing, "Fishing", 1, 35, {}, "Coastal cities gain +1 food."},
    {tech::kBronzeWorking, "BronzeWorking", 2, 85, {tech::kMining}, "Melee and mounted units gain +1 strength."},
    {tech::kCalendar, "Calendar", 2, 85, {tech::kTrapping}, "Unlocks the Library."},
    {tech::kTheWheel, "TheWheel", 2, 85, {tech::kAnimalHusbandry}, "All cities gain +1 production."},
    {tech::kSailing, "Sailing", 2, 85, {tech::kFishing}, "Unlocks the Colossus."},
    {tech::kConstruction, "Construction", 3, 170, {tech::kBronzeWorking, tech::kTheWheel},
     "Cities gain +4 defense strength and +1 production."},
    {tech::kCurrency, "Currency", 3, 170, {tech::kCalendar}, "Unlocks the Market; all cities gain +2 gold."},
};

const PolicyStats kPolicies[] = {
    {0, "Tradition", 0, 0, "Opens the Tradition branch: +2 culture in the capital.",
     {}, {.culture = 2}, 0, 0, 0},
    {1, "Aristocracy", 0, 1, "+1 happiness per city.", {}, {}, 1, 0, 0},
    {2, "Legalism", 0, 2, "+2 culture per city.", {.culture = 2}, {}, 0, 0, 0},
    {3, "Liberty", 1, 0, "Opens the Liberty branch: +1 production per city.",
     {.production = 1}, {}, 0, 0, 0},
    {4, "Citizenship", 1, 1, "Settlers are 20% cheaper to produce.", {}, {}, 0, 0, 20},
    {5, "Republic", 1, 2, "+1 production in the capital and +1 happiness per city.",
     {}, {.production = 1}, 1, 0, 0},
    {6, "Honor", 2, 0, "Opens the Honor branch: all units gain +1 strength.", {}, {}, 0, 1, 0},
    {7, "Discipline", 2, 1, "All units gain a further +1 strength.", {}, {}, 0, 1, 0},
    {8, "MilitaryCaste", 2, 2, "+1 happiness and +1 gold per city.", {.gold = 1}, {}, 1, 0, 0},
};

const IdeologyStats kIdeologies[] = {
    {Ideology::Freedom, "Freedom", "+2 culture per city and +50% tourism output.",
     {.culture = 2}, 0, 50},
    {Ideology::Order, "Order", "+1 production and +1 science per city.",
     {.production = 1, .science = 1}, 0, 0},
    {Ideology::Autocracy, "Autocracy", "All units gain +2 strength.", {}, 2, 0},
};

// Grand bias order: Culture, UnitedNations, Spaceship, Conquest.
const ArchetypeStats kArchetypes[] = {
    {0, "Warlords", {"Ironhold", "Grimgate", "Spearfall", "Ashkeep"},
     100, 100, 100, 100, 0, 0, 2, 0, 100, {0, 0, 0, 12},
     {4, 3, 5, 8, 8, 6, 3, 4, 3, 5, 4, 3, 3, 3, 7, 5, 3, 5, 6, 7, 6, 2, 7, 4, 3, 5}},
    {1, "Scholars", {"Lyceum", "Astra", "Quillholm", "Archive"},
     100, 120, 100, 100, 0, 0, 0, 0, 100, {0, 0, 12, 0},
     {5, 6, 2, 3, 2, 4, 6, 7, 5, 4, 7, 8, 6, 7, 3, 6, 5, 6, 3, 2, 3, 7, 2, 3, 4, 3}},
    {2, "Artisans", {"Muralla", "Fresco", "Gildhall", "Lumen"},
     100, 100, 120, 100, 0, 0, 0, 0, 100, {12, 0, 0, 0},
     {6, 8, 3, 3, 2, 3, 5, 6, 7, 5, 6, 7, 7, 6, 3, 6, 6, 5, 3, 2, 3, 6, 2, 4, 6, 3}},
    {3, "Diplomats", {"Concord", "Parley", "Embassy", "Accord"},
     100, 100, 100, 115, 0, 0, 0, 0, 150, {0, 12, 0, 0},
     {5, 4, 6, 3, 2, 3, 5, 7, 8, 5, 6, 9, 8, 8, 4, 7, 8, 6, 2, 2, 3, 7, 2, 6, 8, 3}},
    {4, "Expansionists", {"Farstead", "Newfield", "Broadacre", "Outmarch"},
     100, 100, 100, 100, 0, 1, 0, 25, 100, {4, 0, 4, 4},
     {5, 4, 4, 6, 5, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 4, 5, 4, 4, 4, 4, 4, 4, 4, 4}},
    {5, "Traders", {"Goldport", "Bazaar", "Ledger", "Caravan"},
     100, 100, 100, 125, 0, 0, 0, 0, 120, {0, 6, 6, 0},
     {4, 4, 4, 3, 2, 3, 5, 6, 7, 5, 6, 8, 7, 7, 4, 6, 6, 6, 3, 2, 4, 6, 3, 7, 6, 5}},
    {6, "Builders", {"Keystone", "Masonry", "Archway", "Foundry"},
     115, 100, 100, 100, 0, 0, 0, 0, 100, {4, 0, 8, 0},
     {5, 7, 3, 3, 2, 3, 4, 6, 6, 5, 6, 7, 6, 6, 4, 6, 5, 5, 3, 3, 3, 6, 3, 4, 4, 3}},
    {7, "Pious", {"Sanctum", "Vestry", "Reliquary", "Cloister"},
     100, 100, 110, 100, 2, 0, 0, 0, 100, {8, 4, 0, 0},
     {5, 5, 3, 3, 2, 4, 6, 6, 6, 5, 6, 7, 6, 6, 4, 8, 5, 5, 4, 3, 5, 7, 3, 4, 4, 2}},
};

}  // namespace

std::span<const UnitStats> all_units() { return kUnits; }
std::span<const BuildingStats> all_buildings() { return kBuildings; }
std::span<const ProjectStats> all_projects() { return kProjects; }
std::span<const TechStats> all_techs() { return kTechs; }
std::span<const PolicyStats> all_policies() { return kPolicies; }
std::span<const IdeologyStats> all_ideologies() { return kIdeologies; }
std::span<const ArchetypeStats> all_archetypes() { return kArchetypes; }

const UnitStats* find_unit_stats(ProducibleId id) {
  for (const auto& u : kUnits) {
    if (u.id == id) return &u;
  }
  return nullptr;
}

const UnitStats* unit_stats_for_class(UnitClass cls) {
  for (const auto& u : kUnits) {
    if (u.cls == cls) return &u;
  }
  return nullptr;
}

const BuildingStats* find_building_stats(ProducibleId id) {
  for (const auto& b : kBuildings) {
    if (b.id == id) return &b;
  }
  return nullptr;
}

const ProjectStats* find_project_stats(ProducibleId id) {
  for (const auto& p : kProjects) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

const TechStats* find_tech(TechId id) {
  if (id < 0 || id >= kTechCount) return nullptr;
  return &kTechs[id];
}

const TechStats* find_tech_by_name(const std::string& name) {
  for (const auto& t : kTechs) {
    if (name == t.name) return &t;
  }
  return nullptr;
}

const PolicyStats* find_policy(PolicyId id) {
  if (id < 0 || id >= kPolicyCount) return nullptr;
  return &kPolicies[id];
}

const PolicyStats* find_policy_by_name(const std::string& name) {
  for (const auto& p : kPolicies) {
    if (name == p.name) return &p;
  }
  return nullptr;
}

const IdeologyStats* find_ideology(Ideology id) {
  for (const auto& i : kIdeologies) {
    if (i.id == id) return &i;
  }
  return nullptr;
}

const IdeologyStats* find_ideology_by_name(const std::string& name) {
  for (const auto& i : kIdeologies) {
    if (name == i.name) return &i;
  }
  return nullptr;
}

const ArchetypeStats& archetype(int id) {
  if (id < 0 || id >= static_cast<int>(std::size(kArchetypes))) {
    throw std::out_of_range("archetype id out of range");
  }
  return kArchetypes[id];
}

const char* producible_name(ProducibleId id) {
  if (const auto* u = find_unit_stats(id)) return u->name;
  if (const auto* b = find_building_stats(id)) return b->name;
  if (const auto* p = find_project_stats(id)) return p->name;
  return "Unknown";
}

std::optional<ProducibleId> producible_by_name(const std::string& name) {
  for (const auto& u : kUnits) {
    if (name == u.name) return u.id;
  }
  for (const auto& b : kBuildings) {
    if (name == b.name) return b.id;
  }
  for (const auto& p : kProjects) {
    if (name == p.name) return p.id;
  }
  return std::nullopt;
}

bool is_unit(ProducibleId id) { return id >= 0 && id < producible::kFirstBuilding; }
bool is_building(ProducibleId id) {
  return id >= producible::kFirstBuilding && id < producible::kFirstProject;
}
bool is_project(ProducibleId id) {
  return id >= producible::kFirstProject && id < producible::kCount;
}

int policy_cost(int adopted_count) {
  const int n = adopted_count;
  return 30 + 25 * n + 5 * n * n;
}

int growth_threshold(int population) {
  const int p = population - 1;
  return 15 + 8 * p + 2 * p * p;
}

}  // namespace strategos::engine
