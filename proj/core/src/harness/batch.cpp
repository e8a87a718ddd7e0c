#include "strategos/harness/batch.h"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <thread>

namespace strategos::harness {

using Json = strategist::Json;

void ExperimentConfig::validate() const {
  std::set<std::string> names;
  for (const auto& c : conditions) {
    if (!names.insert(c.name).second) {
      throw std::invalid_argument("duplicate condition name: " + c.name);
    }
  }
  std::set<std::uint64_t> unique_seeds(seeds.begin(), seeds.end());
  if (unique_seeds.size() != seeds.size()) {
    throw std::invalid_argument("seeds must be distinct");
  }
  if (conditions.empty()) throw std::invalid_argument("at least one condition required");
  if (seeds.empty()) throw std::invalid_argument("at least one seed required");
  if (parallelism < 1) throw std::invalid_argument("parallelism must be >= 1");
  game.validate();
}

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
  ExperimentConfig cfg;
  for (const auto& cj : j.at("conditions")) {
    cfg.conditions.push_back(Condition::parse(cj.get<std::string>()));
  }
  if (j.contains("seeds")) {
    for (const auto& s : j.at("seeds")) cfg.seeds.push_back(s.get<std::uint64_t>());
  } else {
    const std::uint64_t start = j.value("seed_start", 1);
    const std::uint64_t count = j.value("seed_count", 10);
    for (std::uint64_t i = 0; i < count; ++i) cfg.seeds.push_back(start + i);
  }
  if (j.contains("game")) {
    const auto& g = j.at("game");
    cfg.game.map_width = g.value("map_width", cfg.game.map_width);
    cfg.game.map_height = g.value("map_height", cfg.game.map_height);
    cfg.game.player_count = g.value("player_count", cfg.game.player_count);
    cfg.game.max_turns = g.value("max_turns", cfg.game.max_turns);
    cfg.game.archetype_pool_size = g.value("archetype_pool_size", cfg.game.archetype_pool_size);
    if (g.contains("victory_toggles")) {
      cfg.game.victory_toggles.clear();
      for (const auto& v : g.at("victory_toggles")) {
        engine::VictoryKind k;
        if (!engine::parse_victory_kind(v.get<std::string>(), k)) {
          throw std::invalid_argument("unknown victory kind in config: " + v.get<std::string>());
        }
        cfg.game.victory_toggles.insert(k);
      }
    }
  }
  cfg.parallelism = j.value("parallelism", 1);
  if (j.contains("fault_plan")) {
    FaultPlan plan;
    plan.failure_per_mille = j.at("fault_plan").value("failure_per_mille", 0);
    plan.burst_length = j.at("fault_plan").value("burst_length", 1);
    cfg.faults = plan;
  }
  cfg.output_path = j.value("output", cfg.output_path);
  cfg.episode_deadline = std::chrono::milliseconds(j.value("episode_deadline_ms", 30000));
  cfg.round_cap = j.value("round_cap", 8);
  return cfg;
}

Json ExperimentConfig::to_json() const {
  Json j;
  Json conds = Json::array();
  for (const auto& c : conditions) {
    if (c.kind == "builtin") conds.push_back("builtin");
    else if (c.kind == "scripted") conds.push_back("scripted:" + c.scripted_preset);
    else conds.push_back("llm:" + c.llm.model + "@" + c.llm.base_url);
  }
  j["conditions"] = std::move(conds);
  j["seeds"] = seeds;
  Json g;
  g["map_width"] = game.map_width;
  g["map_height"] = game.map_height;
  g["player_count"] = game.player_count;
  g["max_turns"] = game.max_turns;
  j["game"] = std::move(g);
  j["parallelism"] = parallelism;
  j["output"] = output_path;
  return j;
}

BatchResult run_batch(const ExperimentConfig& config) {
  config.validate();

  // Resume: skip pairs already on disk.
  std::set<std::pair<std::string, std::uint64_t>> done;
  if (std::filesystem::exists(config.output_path)) {
    for (const auto& r : read_all_records(config.output_path)) {
      done.insert({r.condition, r.seed});
    }
  }

  struct Task {
    const Condition* condition;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  int skipped = 0;
  for (const auto& c : config.conditions) {
    for (const auto seed : config.seeds) {
      if (done.count({c.name, seed})) {
        ++skipped;
        continue;
      }
      tasks.push_back(Task{&c, seed});
    }
  }

  RecordWriter writer(config.output_path);
  std::mutex writer_mu;
  std::atomic<std::size_t> next_task{0};
  std::map<std::string, int> wins;
  std::map<std::string, int> counts;

  RunOptions options;
  options.episode_deadline = config.episode_deadline;
  options.round_cap = config.round_cap;
  options.faults = config.faults;

  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = next_task.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& task = tasks[i];
      GameRecord record = run_game(*task.condition, task.seed, config.game, options);
      std::lock_guard<std::mutex> lock(writer_mu);
      writer.append(record);
      counts[record.condition] += 1;
      if (record.player0_won() && !record.excluded()) wins[record.condition] += 1;
    }
  };

  const int workers = std::min<int>(config.parallelism, static_cast<int>(tasks.size()));
  std::vector<std::thread> pool;
  for (int w = 0; w < std::max(0, workers); ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  BatchResult result;
  result.output_path = config.output_path;
  result.games_run = static_cast<int>(tasks.size());
  result.games_skipped = skipped;
  for (const auto& [name, n] : counts) {
    std::cout << "condition " << name << ": " << n << " games, " << wins[name]
              << " player-0 wins\n";
    result.per_condition.emplace_back(name, wins[name]);
  }
  return result;
}

}  // namespace strategos::harness
