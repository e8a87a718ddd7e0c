#include "strategos/engine/save.h"

#include <stdexcept>

namespace strategos::engine {

namespace {

Json config_json(const GameConfig& c) {
  Json j;
  j["map_width"] = c.map_width;
  j["map_height"] = c.map_height;
  j["player_count"] = c.player_count;
  j["max_turns"] = c.max_turns;
  j["archetype_pool_size"] = c.archetype_pool_size;
  Json toggles = Json::array();
  for (const auto k : kAllVictoryKinds) {
    if (c.victory_toggles.count(k)) toggles.push_back(to_string(k));
  }
  j["victory_toggles"] = std::move(toggles);
  j["seed"] = c.seed;
  return j;
}

GameConfig config_from(const Json& j) {
  GameConfig c;
  c.map_width = j.at("map_width");
  c.map_height = j.at("map_height");
  c.player_count = j.at("player_count");
  c.max_turns = j.at("max_turns");
  c.archetype_pool_size = j.at("archetype_pool_size");
  c.victory_toggles.clear();
  for (const auto& name : j.at("victory_toggles")) {
    VictoryKind k;
    if (!parse_victory_kind(name.get<std::string>(), k)) {
      throw std::runtime_error("save: unknown victory kind " + name.get<std::string>());
    }
    c.victory_toggles.insert(k);
  }
  c.seed = j.at("seed");
  return c;
}

Json tile_json(const Tile& t) {
  Json j;
  j["terrain"] = to_string(t.terrain);
  j["improvement"] = static_cast<int>(t.improvement);
  j["owner"] = t.owner;
  j["city"] = t.city;
  return j;
}

Json city_save_json(const City& c) {
  Json j;
  j["id"] = c.id;
  j["owner"] = c.owner;
  j["x"] = c.pos.x;
  j["y"] = c.pos.y;
  j["name"] = c.name;
  j["population"] = c.population;
  j["food_stored"] = c.food_stored;
  j["production_stored"] = c.production_stored;
  j["current_production"] = c.current_production;
  j["buildings"] = c.buildings;
  j["hp"] = c.hp;
  j["attacked_this_turn"] = c.attacked_this_turn;
  j["is_coastal"] = c.is_coastal;
  j["founded_turn"] = c.founded_turn;
  return j;
}

Json unit_save_json(const Unit& u) {
  Json j;
  j["id"] = u.id;
  j["owner"] = u.owner;
  j["class"] = to_string(u.cls);
  j["x"] = u.pos.x;
  j["y"] = u.pos.y;
  j["hp"] = u.hp;
  j["moves_left"] = u.moves_left;
  j["level"] = u.level;
  j["kills"] = u.kills;
  j["fortified"] = u.fortified;
  return j;
}

Json player_json(const PlayerState& p) {
  Json j;
  j["id"] = p.id;
  j["archetype"] = p.archetype;
  j["alive"] = p.alive;
  j["original_capital"] = p.original_capital;
  j["treasury"] = p.treasury;
  j["research_progress"] = p.research_progress;
  j["current_research"] = p.current_research;
  j["culture_stockpile"] = p.culture_stockpile;
  j["faith_stockpile"] = p.faith_stockpile;
  j["cumulative_culture"] = p.cumulative_culture;
  j["gold_rate"] = p.gold_rate;
  j["science_rate"] = p.science_rate;
  j["culture_rate"] = p.culture_rate;
  j["faith_rate"] = p.faith_rate;
  j["tourism_rate"] = p.tourism_rate;
  j["techs_known"] = p.techs_known;
  j["policies_adopted"] = p.policies_adopted;
  j["ideology"] = to_string(p.ideology);
  j["delegates"] = p.delegates;
  Json relations = Json::array();
  for (const auto& r : p.relations) {
    Json rj;
    rj["stance"] = to_string(r.stance);
    rj["opinion"] = r.opinion;
    rj["war_since"] = r.war_since;
    rj["last_war_capture"] = r.last_war_capture;
    rj["met"] = r.met;
    relations.push_back(std::move(rj));
  }
  j["relations"] = std::move(relations);
  j["tourism_exported"] = p.tourism_exported;
  j["spaceship_parts"] = p.spaceship_parts;
  j["survived_until"] = p.survived_until;
  return j;
}

Stance parse_stance(const std::string& s) {
  if (s == "War") return Stance::War;
  if (s == "Hostile") return Stance::Hostile;
  if (s == "Friendly") return Stance::Friendly;
  return Stance::Neutral;
}

Ideology parse_ideology(const std::string& s) {
  if (s == "Freedom") return Ideology::Freedom;
  if (s == "Order") return Ideology::Order;
  if (s == "Autocracy") return Ideology::Autocracy;
  return Ideology::None;
}

Terrain parse_terrain(const std::string& s) {
  if (s == "Grassland") return Terrain::Grassland;
  if (s == "Plains") return Terrain::Plains;
  if (s == "Hills") return Terrain::Hills;
  if (s == "Forest") return Terrain::Forest;
  if (s == "Desert") return Terrain::Desert;
  if (s == "Mountain") return Terrain::Mountain;
  return Terrain::Water;
}

UnitClass parse_unit_class(const std::string& s) {
  if (s == "Ranged") return UnitClass::Ranged;
  if (s == "Mounted") return UnitClass::Mounted;
  if (s == "Scout") return UnitClass::Scout;
  if (s == "Settler") return UnitClass::Settler;
  if (s == "Worker") return UnitClass::Worker;
  return UnitClass::Melee;
}

}  // namespace

std::string serialize_state(const GameState& s) {
  Json j;
  j["save_version"] = kSaveVersion;
  j["config"] = config_json(s.config);
  j["turn"] = s.turn;
  j["next_city_id"] = s.next_city_id;
  j["next_unit_id"] = s.next_unit_id;
  j["last_vote_turn"] = s.last_vote_turn;
  j["rng_state"] = s.rng.state();
  j["rng_inc"] = s.rng.inc();

  Json tiles = Json::array();
  for (const auto& t : s.tiles) tiles.push_back(tile_json(t));
  j["tiles"] = std::move(tiles);

  Json players = Json::array();
  for (const auto& p : s.players) players.push_back(player_json(p));
  j["players"] = std::move(players);

  Json city_states = Json::array();
  for (const auto& cs : s.city_states) {
    Json cj;
    cj["id"] = cs.id;
    cj["name"] = cs.name;
    cj["city"] = cs.city;
    cj["influence"] = cs.influence;
    city_states.push_back(std::move(cj));
  }
  j["city_states"] = std::move(city_states);

  Json cities = Json::array();
  for (const auto& [id, c] : s.cities) cities.push_back(city_save_json(c));
  j["cities"] = std::move(cities);

  Json units = Json::array();
  for (const auto& [id, u] : s.units) units.push_back(unit_save_json(u));
  j["units"] = std::move(units);

  Json events = Json::array();
  for (const auto& e : s.event_log) {
    Json ej;
    ej["turn"] = e.turn;
    ej["index"] = e.index;
    ej["kind"] = to_string(e.kind);
    ej["visible_to"] = e.visible_to;
    ej["payload"] = e.payload;
    events.push_back(std::move(ej));
  }
  j["event_log"] = std::move(events);

  if (s.victory) {
    Json vj;
    vj["winner"] = s.victory->winner;
    vj["kind"] = to_string(s.victory->kind);
    vj["turn"] = s.victory->turn;
    j["victory"] = std::move(vj);
  } else {
    j["victory"] = nullptr;
  }

  Json revealed = Json::array();
  for (const auto& per_player : s.revealed) {
    std::string bits(per_player.size(), '0');
    for (std::size_t i = 0; i < per_player.size(); ++i) {
      if (per_player[i]) bits[i] = '1';
    }
    revealed.push_back(std::move(bits));
  }
  j["revealed"] = std::move(revealed);

  return j.dump(1) + "\n";
}

GameState deserialize_state(const std::string& text) {
  const Json j = Json::parse(text);
  const int version = j.at("save_version");
  if (version != kSaveVersion) {
    throw std::runtime_error("save: unsupported save_version " + std::to_string(version) +
                             ", expected " + std::to_string(kSaveVersion));
  }

  GameState s;
  s.config = config_from(j.at("config"));
  s.turn = j.at("turn");
  s.next_city_id = j.at("next_city_id");
  s.next_unit_id = j.at("next_unit_id");
  s.last_vote_turn = j.at("last_vote_turn");
  s.rng = Rng::from_raw(j.at("rng_state"), j.at("rng_inc"));

  for (const auto& tj : j.at("tiles")) {
    Tile t;
    t.terrain = parse_terrain(tj.at("terrain"));
    t.improvement = static_cast<Improvement>(tj.at("improvement").get<int>());
    t.owner = tj.at("owner");
    t.city = tj.at("city");
    s.tiles.push_back(t);
  }

  for (const auto& pj : j.at("players")) {
    PlayerState p;
    p.id = pj.at("id");
    p.archetype = pj.at("archetype");
    p.alive = pj.at("alive");
    p.original_capital = pj.at("original_capital");
    p.treasury = pj.at("treasury");
    p.research_progress = pj.at("research_progress");
    p.current_research = pj.at("current_research");
    p.culture_stockpile = pj.at("culture_stockpile");
    p.faith_stockpile = pj.at("faith_stockpile");
    p.cumulative_culture = pj.at("cumulative_culture");
    p.gold_rate = pj.at("gold_rate");
    p.science_rate = pj.at("science_rate");
    p.culture_rate = pj.at("culture_rate");
    p.faith_rate = pj.at("faith_rate");
    p.tourism_rate = pj.at("tourism_rate");
    p.techs_known = pj.at("techs_known").get<std::vector<TechId>>();
    p.policies_adopted = pj.at("policies_adopted").get<std::vector<PolicyId>>();
    p.ideology = parse_ideology(pj.at("ideology"));
    p.delegates = pj.at("delegates");
    for (const auto& rj : pj.at("relations")) {
      Relation r;
      r.stance = parse_stance(rj.at("stance"));
      r.opinion = rj.at("opinion");
      r.war_since = rj.at("war_since");
      r.last_war_capture = rj.at("last_war_capture");
      r.met = rj.at("met");
      p.relations.push_back(r);
    }
    p.tourism_exported = pj.at("tourism_exported").get<std::vector<long long>>();
    p.spaceship_parts = pj.at("spaceship_parts");
    p.survived_until = pj.at("survived_until");
    s.players.push_back(std::move(p));
  }

  for (const auto& cj : j.at("city_states")) {
    CityStateInfo cs;
    cs.id = cj.at("id");
    cs.name = cj.at("name");
    cs.city = cj.at("city");
    cs.influence = cj.at("influence").get<std::vector<int>>();
    s.city_states.push_back(std::move(cs));
  }

  for (const auto& cj : j.at("cities")) {
    City c;
    c.id = cj.at("id");
    c.owner = cj.at("owner");
    c.pos = Hex{cj.at("x").get<int>(), cj.at("y").get<int>()};
    c.name = cj.at("name");
    c.population = cj.at("population");
    c.food_stored = cj.at("food_stored");
    c.production_stored = cj.at("production_stored");
    c.current_production = cj.at("current_production");
    c.buildings = cj.at("buildings").get<std::vector<ProducibleId>>();
    c.hp = cj.at("hp");
    c.attacked_this_turn = cj.at("attacked_this_turn");
    c.is_coastal = cj.at("is_coastal");
    c.founded_turn = cj.at("founded_turn");
    s.cities.emplace(c.id, std::move(c));
  }

  for (const auto& uj : j.at("units")) {
    Unit u;
    u.id = uj.at("id");
    u.owner = uj.at("owner");
    u.cls = parse_unit_class(uj.at("class"));
    u.pos = Hex{uj.at("x").get<int>(), uj.at("y").get<int>()};
    u.hp = uj.at("hp");
    u.moves_left = uj.at("moves_left");
    u.level = uj.at("level");
    u.kills = uj.at("kills");
    u.fortified = uj.at("fortified");
    s.units.emplace(u.id, u);
  }

  for (const auto& ej : j.at("event_log")) {
    Event e;
    e.turn = ej.at("turn");
    e.index = ej.at("index");
    EventKind kind;
    if (!parse_event_kind(ej.at("kind"), kind)) {
      throw std::runtime_error("save: unknown event kind");
    }
    e.kind = kind;
    e.visible_to = ej.at("visible_to");
    e.payload = ej.at("payload");
    s.event_log.push_back(std::move(e));
  }

  if (!j.at("victory").is_null()) {
    VictoryResult v;
    v.winner = j.at("victory").at("winner");
    VictoryKind kind;
    parse_victory_kind(j.at("victory").at("kind"), kind);
    v.kind = kind;
    v.turn = j.at("victory").at("turn");
    s.victory = v;
  }

  for (const auto& bits_json : j.at("revealed")) {
    const std::string bits = bits_json.get<std::string>();
    std::vector<std::uint8_t> row(bits.size(), 0);
    for (std::size_t i = 0; i < bits.size(); ++i) row[i] = bits[i] == '1' ? 1 : 0;
    s.revealed.push_back(std::move(row));
  }

  return s;
}

}  // namespace strategos::engine
