#include "strategos/tactical/builtin.h"

#include <algorithm>

#include "strategos/engine/internal.h"
#include "strategos/tables.h"

namespace strategos::tactical {

using engine::GameState;
using engine::GrandStrategy;
using engine::PlayerId;

namespace {

int count_class(const GameState& state, PlayerId p, engine::UnitClass cls) {
  int n = 0;
  for (const auto& [id, u] : state.units) {
    if (u.owner == p && u.cls == cls) ++n;
  }
  return n;
}

int count_military(const GameState& state, PlayerId p) {
  int n = 0;
  for (const auto& [id, u] : state.units) {
    if (u.owner != p) continue;
    if (u.cls == engine::UnitClass::Settler || u.cls == engine::UnitClass::Worker) continue;
    ++n;
  }
  return n;
}

int unrevealed_pct(const GameState& state, PlayerId p) {
  int n = 0;
  for (const auto cell : state.revealed[p]) {
    if (cell == 0) ++n;
  }
  return n * 100 / static_cast<int>(state.tiles.size());
}

int capital_landmass_tiles(const GameState& state, PlayerId p) {
  const engine::City* cap = state.find_city(state.players[p].original_capital);
  if (!cap) return 1 << 20;
  // Flood fill over land from the capital.
  std::vector<std::uint8_t> seen(state.tiles.size(), 0);
  std::vector<engine::Hex> queue{cap->pos};
  seen[state.tile_index(cap->pos)] = 1;
  int count = 0;
  while (!queue.empty()) {
    const engine::Hex cur = queue.back();
    queue.pop_back();
    ++count;
    for (const engine::Hex n : engine::hex_neighbors(cur)) {
      if (!state.in_bounds(n)) continue;
      const int idx = state.tile_index(n);
      if (seen[idx] || state.tile(n).terrain == engine::Terrain::Water) continue;
      seen[idx] = 1;
      queue.push_back(n);
    }
  }
  return count;
}

GrandStrategy pick_grand(const GameState& state, PlayerId p) {
  const auto& ps = state.players[p];
  const auto& arch = engine::archetype(ps.archetype);

  const int my_mil = engine::military_strength(state, p);
  int opp_mil = 0;
  int opps = 0;
  bool winning_a_war = false;
  for (PlayerId q = 0; q < state.config.player_count; ++q) {
    if (q == p || !state.players[q].alive) continue;
    opp_mil += engine::military_strength(state, q);
    ++opps;
    if (state.at_war(p, q) && my_mil > engine::military_strength(state, q)) winning_a_war = true;
  }
  const int avg_opp = std::max(1, opps > 0 ? opp_mil / opps : 1);

  // Influence lead over the best rival across active city-states.
  int influence_lead = 0;
  for (const auto& cs : state.city_states) {
    const engine::City* city = state.find_city(cs.city);
    if (!city || city->owner != cs.id) continue;
    int best_rival = 0;
    for (PlayerId q = 0; q < state.config.player_count; ++q) {
      if (q != p && state.players[q].alive) best_rival = std::max(best_rival, cs.influence[q]);
    }
    influence_lead += std::max(0, cs.influence[p] - best_rival);
  }

  std::array<int, engine::kGrandStrategyCount> fitness{};
  for (int g = 0; g < engine::kGrandStrategyCount; ++g) fitness[g] = arch.grand_bias[g];
  fitness[static_cast<int>(GrandStrategy::Conquest)] +=
      std::clamp(20 * (my_mil - avg_opp) / avg_opp, -20, 20) + (winning_a_war ? 8 : 0);
  fitness[static_cast<int>(GrandStrategy::Culture)] +=
      ps.culture_rate + 3 * engine::internal::count_wonders(state, p);
  fitness[static_cast<int>(GrandStrategy::Spaceship)] +=
      ps.science_rate + static_cast<int>(ps.techs_known.size());
  fitness[static_cast<int>(GrandStrategy::UnitedNations)] += influence_lead / 4;

  int best = 0;
  for (int g = 1; g < engine::kGrandStrategyCount; ++g) {
    if (fitness[g] > fitness[best]) best = g;
  }
  return static_cast<GrandStrategy>(best);
}

// Per-grand research preference, first legal entry wins.
const std::array<std::array<const char*, 10>, 4> kResearchPreference = {{
    // Culture
    {{"Mining", "Trapping", "Calendar", "Sailing", "Fishing", "AnimalHusbandry", "TheWheel",
      "BronzeWorking", "Currency", "Construction"}},
    // UnitedNations
    {{"Fishing", "Trapping", "Mining", "Calendar", "Currency", "AnimalHusbandry", "Sailing",
      "TheWheel", "BronzeWorking", "Construction"}},
    // Spaceship
    {{"Trapping", "Calendar", "Mining", "AnimalHusbandry", "TheWheel", "Fishing", "BronzeWorking",
      "Sailing", "Currency", "Construction"}},
    // Conquest
    {{"Trapping", "AnimalHusbandry", "BronzeWorking", "Construction", "Mining", "TheWheel",
      "Calendar", "Fishing", "Sailing", "Currency"}},
}};

engine::TechId pick_research(const GameState& state, PlayerId p, GrandStrategy grand) {
  const auto& ps = state.players[p];
  const auto legal = [&](engine::TechId t) {
    const auto* tech = engine::find_tech(t);
    if (!tech || ps.has_tech(t)) return false;
    for (const engine::TechId pre : tech->prereqs) {
      if (!ps.has_tech(pre)) return false;
    }
    return true;
  };
  for (const char* name : kResearchPreference[static_cast<int>(grand)]) {
    const auto* tech = engine::find_tech_by_name(name);
    if (tech && legal(tech->id)) return tech->id;
  }
  return engine::kNoTech;
}

void pick_policy(const GameState& state, PlayerId p, GrandStrategy grand,
                 StrategyDecision& decision) {
  const auto& ps = state.players[p];
  const auto in_branch = [&](int branch) {
    int have = 0;
    for (const auto& pol : engine::all_policies()) {
      if (pol.branch == branch && ps.has_policy(pol.id)) ++have;
    }
    return have;
  };

  bool any_complete = false;
  for (int b = 0; b < engine::kPolicyBranchCount; ++b) {
    if (in_branch(b) == engine::kPoliciesPerBranch) any_complete = true;
  }
  if (any_complete && ps.ideology == engine::Ideology::None) {
    switch (grand) {
      case GrandStrategy::Conquest: decision.next_ideology = engine::Ideology::Autocracy; break;
      case GrandStrategy::Culture: decision.next_ideology = engine::Ideology::Freedom; break;
      default: decision.next_ideology = engine::Ideology::Order; break;
    }
    return;
  }

  // Complete an open branch first.
  for (int b = 0; b < engine::kPolicyBranchCount; ++b) {
    const int have = in_branch(b);
    if (have > 0 && have < engine::kPoliciesPerBranch) {
      for (const auto& pol : engine::all_policies()) {
        if (pol.branch == b && pol.branch_index == have) {
          decision.next_policy = pol.id;
          return;
        }
      }
    }
  }
  // Open the branch matching the grand strategy.
  int branch = 1;  // Liberty
  if (grand == GrandStrategy::Conquest) branch = 2;       // Honor
  else if (grand == GrandStrategy::Culture) branch = 0;   // Tradition
  if (in_branch(branch) == engine::kPoliciesPerBranch) branch = (branch + 1) % 3;
  for (const auto& pol : engine::all_policies()) {
    if (pol.branch == branch && pol.branch_index == in_branch(branch) &&
        in_branch(branch) < engine::kPoliciesPerBranch) {
      decision.next_policy = pol.id;
      return;
    }
  }
}

}  // namespace

StrategyDecision builtin_macro_decide(const GameState& state, PlayerId player) {
  const auto& rules = tables::get();
  const auto& ps = state.players[player];

  StrategyDecision decision;
  decision.set.grand = pick_grand(state, player);
  decision.set.rationale = "Builtin rule table";

  const int cities = engine::internal::count_cities(state, player);
  const int happiness = engine::internal::player_happiness(state, player);
  const int scouts = count_class(state, player, engine::UnitClass::Scout);
  const int unrevealed = unrevealed_pct(state, player);

  auto& economic = decision.set.economic;
  if (state.turn <= rules.rule("early_expansion_last_turn") &&
      cities < rules.rule("early_expansion_max_cities") &&
      engine::best_settle_site(state, player).has_value()) {
    economic.push_back("EarlyExpansion");
  } else if (cities >= rules.rule("early_expansion_max_cities") ||
             !engine::best_settle_site(state, player).has_value()) {
    economic.push_back("EnoughExpansion");
  }
  if (unrevealed >= rules.rule("recon_min_unrevealed_pct") &&
      scouts < rules.rule("enough_recon_scouts")) {
    economic.push_back("NeedRecon");
  } else if (unrevealed < 10) {
    economic.push_back("EnoughRecon");
  }
  if (happiness < rules.rule("happiness_critical_threshold")) {
    economic.push_back("NeedHappinessCritical");
  } else if (happiness < rules.rule("happiness_need_threshold")) {
    economic.push_back("NeedHappiness");
  }
  {
    int best_other = 0;
    for (PlayerId q = 0; q < state.config.player_count; ++q) {
      if (q == player || !state.players[q].alive) continue;
      best_other = std::max(best_other, static_cast<int>(state.players[q].techs_known.size()));
    }
    if (static_cast<int>(ps.techs_known.size()) >= best_other + rules.rule("tech_leader_margin")) {
      economic.push_back("TechLeader");
    }
  }
  if (ps.faith_rate >= rules.rule("started_piety_min_faith_rate")) {
    economic.push_back("StartedPiety");
  }
  if (state.turn < 30 &&
      capital_landmass_tiles(state, player) <= rules.rule("island_landmass_max_tiles")) {
    economic.push_back("IslandStart");
  }
  if (state.turn >= rules.rule("naval_growth_min_turn")) {
    for (const auto& [id, c] : state.cities) {
      if (c.owner == player && c.is_coastal) {
        economic.push_back("CitiesNeedNavalGrowth");
        break;
      }
    }
  }

  auto& military = decision.set.military;
  int at_war_mil = 0;
  int hostiles = 0;
  bool at_war = false;
  for (PlayerId q = 0; q < state.config.player_count; ++q) {
    if (q == player || !state.players[q].alive) continue;
    const auto& rel = ps.relations[q];
    if (rel.stance == engine::Stance::War) {
      at_war = true;
      at_war_mil += engine::military_strength(state, q);
    } else if (rel.stance == engine::Stance::Hostile) {
      ++hostiles;
    }
  }
  if (at_war) {
    military.push_back("AtWar");
    const int mine = engine::military_strength(state, player);
    const int ratio = mine * 100 / std::max(1, at_war_mil);
    if (ratio < rules.rule("losing_wars_ratio_pct")) military.push_back("LosingWars");
    else if (ratio > rules.rule("winning_wars_ratio_pct")) military.push_back("WinningWars");
  } else if (hostiles >= rules.rule("war_mobilization_hostiles") ||
             (decision.set.grand == GrandStrategy::Conquest && state.turn >= 20)) {
    military.push_back("WarMobilization");
  }
  if (state.turn <= rules.rule("need_ranged_last_turn") && at_war &&
      count_class(state, player, engine::UnitClass::Ranged) * 2 < count_military(state, player)) {
    military.push_back("NeedRangedEarly");
  }

  std::sort(economic.begin(), economic.end());
  std::sort(military.begin(), military.end());

  decision.next_research = pick_research(state, player, decision.set.grand);
  pick_policy(state, player, decision.set.grand, decision);
  return decision;
}

}  // namespace strategos::tactical
