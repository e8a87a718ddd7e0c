#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strategos/engine/content.h"
#include "strategos/tactical/flavor.h"

namespace strategos::tables {

struct StrategyEntry {
  std::string kind;  // "grand" | "economic" | "military"
  std::string name;
  std::string exclusive_with;  // empty when none
  std::string description;
};

struct DataTables {
  int catalog_version = 0;
  int deltas_version = 0;
  int affinity_version = 0;
  int persona_version = 0;
  int rules_version = 0;
  int score_version = 0;

  std::vector<StrategyEntry> catalog;  // file order preserved
  // strategy name -> flavor deltas
  std::map<std::string, std::vector<std::pair<tactical::Flavor, int>>> deltas;
  // producible id -> per-flavor affinity
  std::array<std::array<int, tactical::kFlavorCount>, engine::producible::kCount> affinity{};
  // weight name -> (persona parameter name, coefficient)
  std::map<std::string, std::vector<std::pair<std::string, int>>> persona_coefficients;
  std::map<std::string, int> rules;
  std::map<std::string, int> score_weights;

  const StrategyEntry* find(const std::string& kind, const std::string& name) const;
  std::vector<std::string> names(const std::string& kind) const;
  int rule(const std::string& key) const;  // throws on unknown key
};

// Parsed once from the data files embedded at build time.
const DataTables& get();

// Parses explicit sources (re-skinned rulesets, tests). Throws
// std::runtime_error with the offending line on malformed input.
DataTables parse(std::string_view catalog_tsv, std::string_view deltas_tsv,
                 std::string_view affinity_tsv, std::string_view persona_tsv,
                 std::string_view rules_tsv, std::string_view score_tsv);

}  // namespace strategos::tables
