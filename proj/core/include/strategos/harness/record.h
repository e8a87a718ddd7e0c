#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "strategos/engine/types.h"
#include "strategos/strategist/episode.h"

namespace strategos::harness {

inline constexpr int kRecordSchemaVersion = 1;

struct EpisodeSummary {
  int turn = 0;
  long long input_tokens = 0;
  long long output_tokens = 0;
  int rounds = 0;
  long long latency_ms = 0;
  std::string outcome;
};

// One finished game, flattened for analytics.
struct GameRecord {
  std::string condition;
  std::uint64_t seed = 0;
  int player_count = 4;
  int map_width = 16;
  int map_height = 16;
  int max_turns = 200;

  std::vector<int> archetypes;

  std::string outcome_type;   // victory | draw | player0_eliminated
  std::string victory_kind;   // set when outcome_type == victory
  int winner = -1;
  int end_turn = 0;

  std::vector<int> survived_turns;
  std::vector<int> final_scores;
  std::vector<int> peak_scores;

  // Player 0's active grand strategy per turn, one digit ('0'..'3') each.
  std::string grand_history;
  std::vector<int> strategy_change_turns;
  std::vector<int> persona_change_turns;
  std::vector<std::string> policy_sequence;
  std::string ideology = "None";

  std::vector<EpisodeSummary> episodes;

  std::string exclusion = "none";  // none | crash | gap15
  int max_gap = 0;

  strategist::Json to_json() const;
  static GameRecord from_json(const strategist::Json& j);

  bool excluded() const { return exclusion != "none"; }
  bool player0_won() const { return outcome_type == "victory" && winner == 0; }
};

// Append-only JSONL sink, one record per line, single writer.
class RecordWriter {
 public:
  explicit RecordWriter(const std::string& path);
  ~RecordWriter();
  void append(const GameRecord& record);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  void* file_ = nullptr;  // FILE*
};

// Streaming JSONL reader: pulls one record at a time, never materializes the
// whole dataset. Throws std::runtime_error on schema version mismatch,
// naming both versions.
class RecordReader {
 public:
  explicit RecordReader(std::istream& in);
  std::optional<GameRecord> next();
  int records_read() const { return records_read_; }

 private:
  std::istream& in_;
  int records_read_ = 0;
};

std::vector<GameRecord> read_all_records(const std::string& path);

}  // namespace strategos::harness
