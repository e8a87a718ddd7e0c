#include "strategos/harness/record.h"

#include <cstdio>
#include <fstream>
#include <istream>
#include <stdexcept>

namespace strategos::harness {

using Json = strategist::Json;

Json GameRecord::to_json() const {
  Json j;
  j["schema_version"] = kRecordSchemaVersion;
  j["condition"] = condition;
  j["seed"] = seed;
  j["player_count"] = player_count;
  j["map_width"] = map_width;
  j["map_height"] = map_height;
  j["max_turns"] = max_turns;
  j["archetypes"] = archetypes;
  j["outcome_type"] = outcome_type;
  j["victory_kind"] = victory_kind;
  j["winner"] = winner;
  j["end_turn"] = end_turn;
  j["survived_turns"] = survived_turns;
  j["final_scores"] = final_scores;
  j["peak_scores"] = peak_scores;
  j["grand_history"] = grand_history;
  j["strategy_change_turns"] = strategy_change_turns;
  j["persona_change_turns"] = persona_change_turns;
  j["policy_sequence"] = policy_sequence;
  j["ideology"] = ideology;
  Json eps = Json::array();
  for (const auto& e : episodes) {
    Json ej;
    ej["turn"] = e.turn;
    ej["input_tokens"] = e.input_tokens;
    ej["output_tokens"] = e.output_tokens;
    ej["rounds"] = e.rounds;
    ej["latency_ms"] = e.latency_ms;
    ej["outcome"] = e.outcome;
    eps.push_back(std::move(ej));
  }
  j["episodes"] = std::move(eps);
  j["exclusion"] = exclusion;
  j["max_gap"] = max_gap;
  return j;
}

GameRecord GameRecord::from_json(const Json& j) {
  const int version = j.at("schema_version");
  if (version != kRecordSchemaVersion) {
    throw std::runtime_error("record schema_version " + std::to_string(version) +
                             " cannot be read by reader version " +
                             std::to_string(kRecordSchemaVersion) + "; migrate the dataset");
  }
  GameRecord r;
  r.condition = j.at("condition");
  r.seed = j.at("seed");
  r.player_count = j.at("player_count");
  r.map_width = j.at("map_width");
  r.map_height = j.at("map_height");
  r.max_turns = j.at("max_turns");
  r.archetypes = j.at("archetypes").get<std::vector<int>>();
  r.outcome_type = j.at("outcome_type");
  r.victory_kind = j.at("victory_kind");
  r.winner = j.at("winner");
  r.end_turn = j.at("end_turn");
  r.survived_turns = j.at("survived_turns").get<std::vector<int>>();
  r.final_scores = j.at("final_scores").get<std::vector<int>>();
  r.peak_scores = j.at("peak_scores").get<std::vector<int>>();
  r.grand_history = j.at("grand_history");
  r.strategy_change_turns = j.at("strategy_change_turns").get<std::vector<int>>();
  r.persona_change_turns = j.at("persona_change_turns").get<std::vector<int>>();
  r.policy_sequence = j.at("policy_sequence").get<std::vector<std::string>>();
  r.ideology = j.at("ideology");
  for (const auto& ej : j.at("episodes")) {
    EpisodeSummary e;
    e.turn = ej.at("turn");
    e.input_tokens = ej.at("input_tokens");
    e.output_tokens = ej.at("output_tokens");
    e.rounds = ej.at("rounds");
    e.latency_ms = ej.at("latency_ms");
    e.outcome = ej.at("outcome");
    r.episodes.push_back(std::move(e));
  }
  r.exclusion = j.at("exclusion");
  r.max_gap = j.at("max_gap");
  return r;
}

RecordWriter::RecordWriter(const std::string& path) : path_(path) {
  FILE* f = std::fopen(path.c_str(), "ab");
  if (!f) throw std::runtime_error("cannot open record sink: " + path);
  file_ = f;
}

RecordWriter::~RecordWriter() {
  if (file_) std::fclose(static_cast<FILE*>(file_));
}

void RecordWriter::append(const GameRecord& record) {
  const std::string line = record.to_json().dump() + "\n";
  FILE* f = static_cast<FILE*>(file_);
  if (std::fwrite(line.data(), 1, line.size(), f) != line.size()) {
    throw std::runtime_error("short write to record sink " + path_ +
                             "; the batch checkpoint remains resumable");
  }
  std::fflush(f);
}

RecordReader::RecordReader(std::istream& in) : in_(in) {}

std::optional<GameRecord> RecordReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    if (line.empty()) continue;
    ++records_read_;
    return GameRecord::from_json(Json::parse(line));
  }
  return std::nullopt;
}

std::vector<GameRecord> read_all_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open record file: " + path);
  std::vector<GameRecord> out;
  RecordReader reader(in);
  while (auto r = reader.next()) out.push_back(std::move(*r));
  return out;
}

}  // namespace strategos::harness
