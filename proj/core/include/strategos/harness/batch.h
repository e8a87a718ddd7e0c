#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strategos/harness/runner.h"

namespace strategos::harness {

// One experiment: conditions x seeds, persisted as JSONL.
struct ExperimentConfig {
  std::vector<Condition> conditions;
  std::vector<std::uint64_t> seeds;
  engine::GameConfig game;
  int parallelism = 1;
  std::optional<FaultPlan> faults;
  std::string output_path = "records.jsonl";
  std::chrono::milliseconds episode_deadline{30000};
  int round_cap = 8;

  // Throws std::invalid_argument on duplicate condition names or seeds.
  void validate() const;

  static ExperimentConfig from_json(const strategist::Json& j);
  strategist::Json to_json() const;
};

struct BatchResult {
  std::string output_path;
  int games_run = 0;       // freshly run this invocation
  int games_skipped = 0;   // already persisted (resume)
  std::vector<std::pair<std::string, int>> per_condition;  // condition -> wins
};

// Runs the batch over a worker pool. Persistence is append-only through a
// single writer; rerunning with the same output path skips finished
// (condition, seed) pairs. Worker exceptions surface as crash-excluded
// records and the batch continues.
BatchResult run_batch(const ExperimentConfig& config);

}  // namespace strategos::harness
