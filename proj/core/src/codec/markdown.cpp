#include "strategos/codec/markdown.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "strategos/engine/game.h"
#include "strategos/engine/internal.h"
#include "strategos/tactical/zones.h"

namespace strategos::codec {

using engine::GameState;
using engine::PlayerId;
using engine::Json;

namespace {

std::string display_name(const GameState& state, PlayerId id) {
  if (id == engine::kNoPlayer) return "None";
  if (engine::is_city_state_owner(id)) {
    for (const auto& cs : state.city_states) {
      if (cs.id == id) return cs.name;
    }
    return "City-State";
  }
  return engine::archetype(state.players[id].archetype).name;
}

std::string player_label(const GameState& state, PlayerId id) {
  if (id == engine::kNoPlayer) return "None";
  return std::to_string(id) + ": " + display_name(state, id);
}

void render_json_lines(std::ostringstream& out, const GameState& state, const Json& value,
                       int indent);

void render_json_object(std::ostringstream& out, const GameState& state, const Json& obj,
                        int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, val] : obj.items()) {
    const bool player_key = key == "Player" || key == "NextPlayer" || key == "Target" ||
                            key == "OldOwner" || key == "By" || key == "DefenderPlayer" ||
                            key == "Owner" || key == "Winner";
    if (player_key && val.is_number_integer()) {
      out << pad << "- " << key << ": " << player_label(state, val.get<int>()) << "\n";
      continue;
    }
    if (val.is_object()) {
      out << pad << "- " << key << ":\n";
      render_json_object(out, state, val, indent + 1);
    } else if (val.is_array()) {
      out << pad << "- " << key << ":\n";
      int i = 0;
      for (const auto& item : val) {
        if (item.is_object()) {
          // Plot-style objects render as "Terrain X,Y" headers.
          if (item.contains("Terrain") && item.contains("X") && item.contains("Y")) {
            out << pad << "  - " << item.at("Terrain").get<std::string>() << " "
                << item.at("X").get<int>() << "," << item.at("Y").get<int>();
            Json rest;
            for (const auto& [k2, v2] : item.items()) {
              if (k2 != "Terrain" && k2 != "X" && k2 != "Y") rest[k2] = v2;
            }
            if (rest.empty()) {
              out << "\n";
            } else {
              out << ":\n";
              render_json_object(out, state, rest, indent + 2);
            }
          } else {
            out << pad << "  - " << i << ":\n";
            render_json_object(out, state, item, indent + 2);
          }
        } else {
          out << pad << "  - " << i << ": " << item.dump() << "\n";
        }
        ++i;
      }
    } else if (val.is_string()) {
      out << pad << "- " << key << ": " << val.get<std::string>() << "\n";
    } else if (val.is_boolean()) {
      out << pad << "- " << key << ": " << (val.get<bool>() ? "true" : "false") << "\n";
    } else {
      out << pad << "- " << key << ": " << val.dump() << "\n";
    }
  }
}

void render_json_lines(std::ostringstream& out, const GameState& state, const Json& value,
                       int indent) {
  if (value.is_object()) render_json_object(out, state, value, indent);
}

std::string rationale_or_default(const std::string& r) {
  return r.empty() ? std::string("None recorded") : r;
}

void victory_progress_section(std::ostringstream& out, const GameState& state, PlayerId viewer) {
  const auto& cfg = state.config;
  const auto enabled = [&](engine::VictoryKind k) { return cfg.victory_toggles.count(k) > 0; };
  out << "# Victory Progress\n";
  out << "Victory Progress: current progress towards each type of victory.\n";

  if (enabled(engine::VictoryKind::Domination)) {
    int controlled = 0;
    for (PlayerId q = 0; q < cfg.player_count; ++q) {
      const engine::City* cap = state.find_city(state.players[q].original_capital);
      if (cap && cap->owner == viewer) ++controlled;
    }
    out << "- DominationVictory:\n";
    out << "  - CapitalsNeeded: " << cfg.player_count << "\n";
    out << "  - CapitalsControlled: " << controlled << "\n";
  }
  if (enabled(engine::VictoryKind::Science)) {
    const auto& ps = state.players[viewer];
    if (static_cast<int>(ps.techs_known.size()) < engine::kTechCount) {
      out << "- ScienceVictory: Unlocked in later eras\n";
    } else {
      int parts = 0;
      for (int b = 0; b < engine::kSpaceshipPartCount; ++b) {
        if (ps.spaceship_parts & (1 << b)) ++parts;
      }
      out << "- ScienceVictory:\n";
      out << "  - PartsCompleted: " << parts << "\n";
      out << "  - PartsNeeded: " << engine::kSpaceshipPartCount << "\n";
    }
  }
  if (enabled(engine::VictoryKind::Cultural)) {
    out << "- CulturalVictory:\n";
    int civs_needed = 0;
    for (PlayerId q = 0; q < cfg.player_count; ++q) {
      if (q != viewer && state.players[q].alive) ++civs_needed;
    }
    out << "  - CivsNeeded: " << civs_needed << "\n";
    for (PlayerId q = 0; q < cfg.player_count; ++q) {
      if (q == viewer || !state.players[q].alive) continue;
      if (!state.players[viewer].relations[q].met) continue;
      out << "  - " << display_name(state, q) << ":\n";
      out << "    - TourismExported: " << state.players[viewer].tourism_exported[q] << "\n";
      out << "    - TheirCulture: " << state.players[q].cumulative_culture << "\n";
      out << "    - Influential: "
          << (state.players[viewer].tourism_exported[q] > state.players[q].cumulative_culture
                  ? "true"
                  : "false")
          << "\n";
    }
  }
  if (enabled(engine::VictoryKind::Diplomatic)) {
    if (!engine::votes_unlocked(state)) {
      out << "- DiplomaticVictory: Unlocked in later eras\n";
    } else {
      out << "- DiplomaticVictory:\n";
      out << "  - Delegates: " << state.players[viewer].delegates << "\n";
      out << "  - Threshold: " << cfg.player_count + 1 << "\n";
      out << "  - NextVoteTurn: " << ((state.turn / 25) + 1) * 25 << "\n";
    }
  }
  if (enabled(engine::VictoryKind::Time)) {
    out << "- TimeVictory:\n";
    out << "  - MaxTurns: " << cfg.max_turns << "\n";
    out << "  - CurrentTurn: " << state.turn << "\n";
  }
}

void strategies_section(std::ostringstream& out, const GameState& state, PlayerId viewer,
                        const strategy::OverrideState& overrides,
                        const strategy::OptionCatalog& catalog) {
  (void)state;
  (void)viewer;
  out << "# Strategies\n";
  out << "Strategies: existing strategic decisions and available options for you.\n";
  out << "## Strategy\n";
  out << "- Rationale: "
      << rationale_or_default(overrides.rationale(strategy::DecisionCategory::Strategy)) << "\n";
  out << "\n### GrandStrategy\n";
  out << "- Current: " << engine::to_string(catalog.current_grand) << "\n";
  out << "\n#### Options\n";
  for (std::size_t i = 0; i < catalog.grand.size(); ++i) {
    out << "- " << i << ": " << catalog.grand[i] << "\n";
  }
  out << "\n### EconomicStrategies\n";
  out << "\n#### Current\n";
  for (std::size_t i = 0; i < catalog.current_economic.size(); ++i) {
    out << "- " << i << ": " << catalog.current_economic[i] << "\n";
  }
  out << "\n#### Options\n";
  for (const auto& opt : catalog.economic) {
    out << "- " << opt.name << ": " << opt.description << "\n";
  }
  out << "\n### MilitaryStrategies\n";
  out << "\n#### Current\n";
  for (std::size_t i = 0; i < catalog.current_military.size(); ++i) {
    out << "- " << i << ": " << catalog.current_military[i] << "\n";
  }
  out << "\n#### Options\n";
  for (const auto& opt : catalog.military) {
    out << "- " << opt.name << ": " << opt.description << "\n";
  }

  out << "\n## Persona\n";
  const auto& persona = overrides.active_persona;
  const auto names = strategy::Persona::param_names();
  for (int i = 0; i < strategy::Persona::kParamCount; ++i) {
    out << "- " << names[i] << ": " << persona.get(i) << "\n";
  }
  const auto& persona_rationale = overrides.rationale(strategy::DecisionCategory::Persona);
  out << "- Rationale: "
      << (persona_rationale.empty() ? std::string("Archetype default") : persona_rationale)
      << "\n";

  out << "\n## Research\n";
  out << "- Current: "
      << (catalog.current_research.empty() ? std::string("None") : catalog.current_research)
      << "\n";
  out << "- Next: "
      << (catalog.queued_research.empty() ? std::string("None") : catalog.queued_research) << "\n";
  out << "- Rationale: "
      << rationale_or_default(overrides.rationale(strategy::DecisionCategory::Research)) << "\n";
  out << "\n### Options\n";
  for (const auto& opt : catalog.research) {
    out << "- " << opt.name << ": " << opt.description << "\n";
    if (!opt.leads_to.empty()) {
      out << "  Leading to: ";
      for (std::size_t i = 0; i < opt.leads_to.size(); ++i) {
        if (i > 0) out << ", ";
        out << opt.leads_to[i];
      }
      out << "\n";
    }
  }

  out << "\n## Policies\n";
  out << "- Next: " << (catalog.queued_policy.empty() ? std::string("None") : catalog.queued_policy)
      << "\n";
  out << "- Rationale: "
      << rationale_or_default(overrides.rationale(strategy::DecisionCategory::Policy)) << "\n";
  out << "\n### Options\n";
  for (const auto& opt : catalog.policy) {
    out << "- " << opt.name << ": " << opt.description << "\n";
  }
}

void players_section(std::ostringstream& out, const GameState& state, PlayerId viewer) {
  out << "# Players\n";
  out << "Players: summary reports about visible players in the world.\n";
  const auto& me = state.players[viewer];

  std::vector<PlayerId> unmet;
  for (PlayerId p = 0; p < state.config.player_count; ++p) {
    const bool is_self = p == viewer;
    if (!is_self && !me.relations[p].met) {
      unmet.push_back(p);
      continue;
    }
    const auto& ps = state.players[p];
    out << "## Player " << p << "\n";
    out << "- Civilization: " << display_name(state, p) << "\n";
    out << "- IsMajor: true\n";
    if (!ps.alive) {
      out << "- Eliminated: true\n";
      continue;
    }
    int territory = 0;
    for (const auto& t : state.tiles) {
      if (t.owner == p) ++territory;
    }
    out << "- Territory: " << territory << "\n";
    out << "- Score: " << engine::compute_score(state, p) << "\n";
    out << "- Era: " << (ps.techs_known.size() >= 8 ? "Classical" : "Ancient") << "\n";
    out << "- Technologies: " << ps.techs_known.size() << "\n";
    out << "- Cities: " << engine::internal::count_cities(state, p) << "\n";
    int population = 0;
    for (const auto& [id, c] : state.cities) {
      if (c.owner == p) population += c.population;
    }
    out << "- Population: " << population << "\n";
    out << "- GoldPerTurn: " << ps.gold_rate << "\n";
    out << "- SciencePerTurn: " << ps.science_rate << "\n";
    out << "- CulturePerTurn: " << ps.culture_rate << "\n";
    out << "- FaithPerTurn: " << ps.faith_rate << "\n";
    out << "- TourismPerTurn: " << ps.tourism_rate << "\n";
    out << "- Delegates: " << ps.delegates << "\n";
    if (ps.ideology != engine::Ideology::None) {
      out << "- Ideology: " << engine::to_string(ps.ideology) << "\n";
    }
    if (is_self) {
      // Stockpiles are private to the viewer.
      out << "- Gold: " << ps.treasury << "\n";
      out << "- Culture: " << ps.culture_stockpile << "\n";
      out << "- Faith: " << ps.faith_stockpile << "\n";
      if (ps.current_research != engine::kNoTech) {
        out << "- CurrentResearch: " << engine::find_tech(ps.current_research)->name << "\n";
      }
      const int happiness = engine::internal::player_happiness(state, p);
      out << "- HappinessDelta: " << happiness << "\n";
      out << "- HappinessSituation: " << (happiness >= 0 ? "Happy" : "Unhappy") << "\n";
      // Diplomatic evaluations.
      PlayerId top_friend = engine::kNoPlayer;
      PlayerId top_rival = engine::kNoPlayer;
      int best_opinion = 0;
      int worst_opinion = 0;
      for (PlayerId q = 0; q < state.config.player_count; ++q) {
        if (q == viewer || !me.relations[q].met || !state.players[q].alive) continue;
        if (me.relations[q].opinion > best_opinion) {
          best_opinion = me.relations[q].opinion;
          top_friend = q;
        }
        if (me.relations[q].opinion < worst_opinion) {
          worst_opinion = me.relations[q].opinion;
          top_rival = q;
        }
      }
      out << "- MyEvaluations:\n";
      out << "  - 0: Our top friend: " << display_name(state, top_friend) << "\n";
      out << "  - 1: Our top competitor: " << display_name(state, top_rival) << "\n";
    } else {
      const auto& rel = me.relations[p];
      out << "- OpinionFromMe:\n";
      out << "  - 0: Our stance is " << engine::to_string(rel.stance) << ".\n";
      out << "  - 1: Opinion score: " << rel.opinion << "\n";
      const auto& back = state.players[p].relations[viewer];
      out << "- OpinionToMe:\n";
      out << "  - 0: Their stance is " << engine::to_string(back.stance) << ".\n";
    }
  }

  for (const auto& cs : state.city_states) {
    const engine::City* city = state.find_city(cs.city);
    if (!city || city->owner != cs.id) continue;
    if (!state.is_revealed(viewer, city->pos)) continue;
    out << "## Player " << cs.id << "\n";
    out << "- Civilization: " << cs.name << "\n";
    out << "- Leader: City State\n";
    out << "- Relationships:\n";
    for (PlayerId p = 0; p < state.config.player_count; ++p) {
      if (p != viewer && !me.relations[p].met) continue;
      if (!state.players[p].alive) continue;
      out << "  - " << display_name(state, p) << ": Neutral (Influence: " << cs.influence[p]
          << ")\n";
    }
    out << "- Population: " << city->population << "\n";
  }

  for (const PlayerId p : unmet) {
    out << "- " << p << ": Unmet Major Civilization\n";
  }
}

void cities_section(std::ostringstream& out, const GameState& state, PlayerId viewer) {
  out << "# Cities\n";
  out << "Cities: summary reports about discovered cities in the world.\n";

  // Group by owner: viewer first, then met majors, then city-states.
  std::vector<PlayerId> owners;
  owners.push_back(viewer);
  for (PlayerId p = 0; p < state.config.player_count; ++p) {
    if (p != viewer && state.players[viewer].relations[p].met) owners.push_back(p);
  }
  bool city_state_header = false;

  for (const PlayerId owner : owners) {
    bool header = false;
    for (const auto& [id, c] : state.cities) {
      if (c.owner != owner) continue;
      if (!state.is_revealed(viewer, c.pos)) continue;
      if (!header) {
        out << "## Player: " << display_name(state, owner) << "\n";
        header = true;
      }
      out << "- " << c.name << ":\n";
      out << "  - ID: " << c.id << "\n";
      out << "  - X: " << c.pos.x << "\n";
      out << "  - Y: " << c.pos.y << "\n";
      out << "  - Population: " << c.population << "\n";
      out << "  - DefenseStrength: " << engine::city_defense_strength(state, c) << "\n";
      if (c.hp < 100) out << "  - HP: " << c.hp << "\n";
      if (c.is_coastal) out << "  - IsCoastal: true\n";
      if (owner == viewer) {
        const engine::Yields y = engine::internal::city_yields(state, c);
        out << "  - FoodStored: " << c.food_stored << "\n";
        out << "  - FoodPerTurn: " << y.food - 2 * c.population << "\n";
        out << "  - ProductionStored: " << c.production_stored << "\n";
        out << "  - ProductionPerTurn: " << y.production << "\n";
        out << "  - GoldPerTurn: " << y.gold << "\n";
        out << "  - SciencePerTurn: " << y.science << "\n";
        out << "  - CulturePerTurn: " << y.culture << "\n";
        if (c.current_production >= 0) {
          out << "  - CurrentProduction: " << engine::producible_name(c.current_production)
              << "\n";
          const int cost = engine::internal::production_cost(state, c, c.current_production);
          const int remaining = std::max(0, cost - c.production_stored);
          const int per_turn = std::max(1, y.production);
          out << "  - ProductionTurnsLeft: " << (remaining + per_turn - 1) / per_turn << "\n";
        }
        out << "  - BuildingCount: " << c.buildings.size() << "\n";
        int wonders = 0;
        for (const auto b : c.buildings) {
          const auto* stats = engine::find_building_stats(b);
          if (stats && stats->wonder) ++wonders;
        }
        out << "  - WonderCount: " << wonders << "\n";
      }
    }
  }

  for (const auto& cs : state.city_states) {
    const engine::City* c = state.find_city(cs.city);
    if (!c || c->owner != cs.id) continue;
    if (!state.is_revealed(viewer, c->pos)) continue;
    if (!city_state_header) {
      out << "## Player: City-States\n";
      city_state_header = true;
    }
    out << "- " << c->name << ":\n";
    out << "  - ID: " << c->id << "\n";
    out << "  - X: " << c->pos.x << "\n";
    out << "  - Y: " << c->pos.y << "\n";
    out << "  - Population: " << c->population << "\n";
    out << "  - DefenseStrength: " << engine::city_defense_strength(state, *c) << "\n";
    if (c->is_coastal) out << "  - IsCoastal: true\n";
  }
}

void military_section(std::ostringstream& out, const GameState& state, PlayerId viewer) {
  out << "# Military\n";
  out << "Military: summary reports about tactical zones and visible units.\n";

  // Unit stats for classes present among visible units.
  std::vector<const engine::UnitStats*> present;
  const auto visible_unit = [&](const engine::Unit& u) {
    return u.owner == viewer || engine::internal::tile_visible_now(state, viewer, u.pos);
  };
  for (const auto& [id, u] : state.units) {
    if (!visible_unit(u)) continue;
    const auto* stats = engine::unit_stats_for_class(u.cls);
    if (std::find(present.begin(), present.end(), stats) == present.end()) present.push_back(stats);
  }
  std::sort(present.begin(), present.end(),
            [](const auto* a, const auto* b) { return a->id < b->id; });
  out << "## Unit Stats\n";
  for (const auto* stats : present) {
    out << "- " << engine::internal::unit_role(stats->cls) << ":\n";
    out << "  - " << stats->name << ":\n";
    out << "    - Strength: " << stats->strength << "\n";
    if (stats->ranged_strength > 0) {
      out << "    - RangedStrength: " << stats->ranged_strength << "\n";
    }
  }

  const auto zones = tactical::compute_tactical_zones(state, viewer);
  for (const auto& z : zones.zones) {
    // Only report zones the viewer has scouted.
    if (z.city >= 0) {
      const engine::City* c = state.find_city(z.city);
      if (!c || !state.is_revealed(viewer, c->pos)) continue;
    } else {
      bool any_revealed = false;
      for (int idx = 0; idx < static_cast<int>(zones.tile_zone.size()); ++idx) {
        if (zones.tile_zone[idx] >= 0 &&
            zones.zones[zones.tile_zone[idx]].id == z.id && state.revealed[viewer][idx]) {
          any_revealed = true;
          break;
        }
      }
      if (!any_revealed) continue;
    }
    out << "## " << tactical::to_string(z.dominance) << (z.water ? " Water Zone " : " Land Zone ")
        << z.id << "\n";
    out << "- ZoneValue: " << z.zone_value << "\n";
    out << "- Dominance: " << tactical::to_string(z.dominance) << "\n";
    if (z.friendly_strength > 0) out << "- FriendlyStrength: " << z.friendly_strength << "\n";
    if (z.enemy_strength > 0) out << "- EnemyStrength: " << z.enemy_strength << "\n";
    if (z.neutral_strength > 0) out << "- NeutralStrength: " << z.neutral_strength << "\n";
    if (z.city >= 0) {
      const engine::City* c = state.find_city(z.city);
      if (c) out << "- City: " << c->name << "\n";
    }
    out << "- Plots: " << z.plots << "\n";
    out << "- CenterX: " << z.center.x << "\n";
    out << "- CenterY: " << z.center.y << "\n";
    // Visible units by owner.
    std::map<PlayerId, std::map<std::string, int>> unit_counts;
    for (const auto& [id, u] : state.units) {
      if (!visible_unit(u)) continue;
      const auto* zone_here = zones.at(state, u.pos);
      if (!zone_here || zone_here->id != z.id) continue;
      unit_counts[u.owner][engine::unit_stats_for_class(u.cls)->name] += 1;
    }
    if (!unit_counts.empty()) {
      out << "- Units:\n";
      for (const auto& [owner, counts] : unit_counts) {
        out << "  - " << display_name(state, owner) << ":\n";
        for (const auto& [name, count] : counts) {
          out << "    - " << name << ": " << count << "\n";
        }
      }
    }
    if (!z.neighbors.empty()) {
      out << "- Neighbors:\n";
      for (std::size_t i = 0; i < z.neighbors.size(); ++i) {
        out << "  - " << i << ": " << z.neighbors[i] << "\n";
      }
    }
  }
}

}  // namespace

std::string encode_events(const GameState& state, PlayerId viewer,
                          std::span<const engine::Event> events) {
  std::ostringstream out;
  int current_turn = -1;
  int index_in_turn = 0;
  for (const auto& e : events) {
    if (!e.visible(viewer)) continue;
    if (e.turn != current_turn) {
      current_turn = e.turn;
      index_in_turn = 0;
      out << "## Turn " << e.turn << "\n";
    }
    out << "\n### " << index_in_turn << "\n";
    out << "- Type: " << engine::to_string(e.kind) << "\n";
    render_json_lines(out, state, e.payload, 0);
    ++index_in_turn;
  }
  return out.str();
}

MarkdownDoc encode_state(const GameState& state, PlayerId viewer,
                         const strategy::OverrideState& overrides,
                         const strategy::OptionCatalog& catalog, int last_decision_turn) {
  if (viewer < 0 || viewer >= state.config.player_count || !state.players[viewer].alive) {
    throw std::invalid_argument("encode_state: dead or unknown viewer");
  }

  MarkdownDoc doc;
  std::ostringstream out;
  const int completed_turn = state.turn > 0 ? state.turn - 1 : 0;
  out << "You, Player " << viewer << ", are making strategic decisions after turn "
      << completed_turn << ".\n\n";

  const auto mark = [&](const char* name) {
    doc.section_offsets.emplace_back(name, static_cast<std::size_t>(out.tellp()));
  };

  mark("Victory Progress");
  victory_progress_section(out, state, viewer);
  out << "\n";
  mark("Strategies");
  strategies_section(out, state, viewer, overrides, catalog);
  out << "\n";
  mark("Players");
  players_section(out, state, viewer);
  out << "\n";
  mark("Cities");
  cities_section(out, state, viewer);
  out << "\n";
  mark("Military");
  military_section(out, state, viewer);
  out << "\n";
  mark("Events");
  out << "# Events\n";
  out << "Events: events since you last made a decision.\n";

  // Events strictly after the last decision, capped to the last two turns.
  const int floor_turn = std::max(last_decision_turn + 1, state.turn - 2);
  const bool truncated = last_decision_turn + 1 < floor_turn;
  if (truncated) out << "(truncated)\n";
  std::vector<engine::Event> window;
  for (const auto& e : state.event_log) {
    if (e.turn >= floor_turn && e.turn > last_decision_turn) window.push_back(e);
  }
  out << encode_events(state, viewer, window);

  doc.text = out.str();
  return doc;
}

std::string encode_verbose_baseline(const GameState& state, PlayerId viewer) {
  if (viewer < 0 || viewer >= state.config.player_count || !state.players[viewer].alive) {
    throw std::invalid_argument("encode_verbose_baseline: dead or unknown viewer");
  }
  std::ostringstream out;
  out << "FULL STATE DUMP\n";
  out << "viewer: " << viewer << "\n";
  out << "turn: " << state.turn << "\n";
  out << "map_width: " << state.config.map_width << "\n";
  out << "map_height: " << state.config.map_height << "\n";

  // Every revealed tile, every field on its own line.
  for (int y = 0; y < state.config.map_height; ++y) {
    for (int x = 0; x < state.config.map_width; ++x) {
      const engine::Hex h{x, y};
      if (!state.is_revealed(viewer, h)) continue;
      const engine::Tile& t = state.tile(h);
      out << "tile." << x << "." << y << ".terrain: " << engine::to_string(t.terrain) << "\n";
      out << "tile." << x << "." << y << ".improvement: "
          << (t.improvement == engine::Improvement::None
                  ? "None"
                  : (t.improvement == engine::Improvement::Farm ? "Farm" : "Mine"))
          << "\n";
      out << "tile." << x << "." << y << ".owner: " << t.owner << "\n";
      out << "tile." << x << "." << y << ".city: " << t.city << "\n";
    }
  }

  for (PlayerId p = 0; p < state.config.player_count; ++p) {
    const bool met = p == viewer || state.players[viewer].relations[p].met;
    out << "player." << p << ".met: " << (met ? "true" : "false") << "\n";
    if (!met) continue;
    const auto& ps = state.players[p];
    out << "player." << p << ".civilization: " << display_name(state, p) << "\n";
    out << "player." << p << ".alive: " << (ps.alive ? "true" : "false") << "\n";
    out << "player." << p << ".score: " << (ps.alive ? engine::compute_score(state, p) : 0) << "\n";
    out << "player." << p << ".gold_rate: " << ps.gold_rate << "\n";
    out << "player." << p << ".science_rate: " << ps.science_rate << "\n";
    out << "player." << p << ".culture_rate: " << ps.culture_rate << "\n";
    out << "player." << p << ".faith_rate: " << ps.faith_rate << "\n";
    out << "player." << p << ".tourism_rate: " << ps.tourism_rate << "\n";
    out << "player." << p << ".techs: " << ps.techs_known.size() << "\n";
    for (std::size_t i = 0; i < ps.techs_known.size(); ++i) {
      out << "player." << p << ".tech." << i << ": " << engine::find_tech(ps.techs_known[i])->name
          << "\n";
    }
    for (std::size_t i = 0; i < ps.policies_adopted.size(); ++i) {
      out << "player." << p << ".policy." << i << ": "
          << engine::find_policy(ps.policies_adopted[i])->name << "\n";
    }
    out << "player." << p << ".ideology: " << engine::to_string(ps.ideology) << "\n";
    out << "player." << p << ".delegates: " << ps.delegates << "\n";
    if (p == viewer) {
      out << "player." << p << ".treasury: " << ps.treasury << "\n";
      out << "player." << p << ".culture_stockpile: " << ps.culture_stockpile << "\n";
      out << "player." << p << ".faith_stockpile: " << ps.faith_stockpile << "\n";
    }
  }

  for (const auto& [id, c] : state.cities) {
    if (!state.is_revealed(viewer, c.pos)) continue;
    out << "city." << id << ".name: " << c.name << "\n";
    out << "city." << id << ".owner: " << c.owner << "\n";
    out << "city." << id << ".x: " << c.pos.x << "\n";
    out << "city." << id << ".y: " << c.pos.y << "\n";
    out << "city." << id << ".population: " << c.population << "\n";
    out << "city." << id << ".defense: " << engine::city_defense_strength(state, c) << "\n";
    out << "city." << id << ".hp: " << c.hp << "\n";
    if (c.owner == viewer) {
      out << "city." << id << ".food_stored: " << c.food_stored << "\n";
      out << "city." << id << ".production_stored: " << c.production_stored << "\n";
      out << "city." << id << ".current_production: "
          << (c.current_production >= 0 ? engine::producible_name(c.current_production) : "None")
          << "\n";
      for (std::size_t i = 0; i < c.buildings.size(); ++i) {
        out << "city." << id << ".building." << i << ": " << engine::producible_name(c.buildings[i])
            << "\n";
      }
    }
  }

  for (const auto& [id, u] : state.units) {
    if (u.owner != viewer && !engine::internal::tile_visible_now(state, viewer, u.pos)) continue;
    out << "unit." << id << ".owner: " << u.owner << "\n";
    out << "unit." << id << ".class: " << engine::to_string(u.cls) << "\n";
    out << "unit." << id << ".name: " << engine::unit_stats_for_class(u.cls)->name << "\n";
    out << "unit." << id << ".x: " << u.pos.x << "\n";
    out << "unit." << id << ".y: " << u.pos.y << "\n";
    out << "unit." << id << ".hp: " << u.hp << "\n";
    out << "unit." << id << ".level: " << u.level << "\n";
    out << "unit." << id << ".fortified: " << (u.fortified ? "true" : "false") << "\n";
  }

  // Full event history, no truncation.
  int i = 0;
  for (const auto& e : state.event_log) {
    if (!e.visible(viewer)) continue;
    out << "event." << i << ".turn: " << e.turn << "\n";
    out << "event." << i << ".type: " << engine::to_string(e.kind) << "\n";
    for (const auto& [key, val] : e.payload.items()) {
      out << "event." << i << "." << key << ": " << val.dump() << "\n";
    }
    ++i;
  }
  return out.str();
}

}  // namespace strategos::codec
