#include "strategos/tables.h"

#include <stdexcept>

#include "strategos/embedded_data.h"
#include "strategos/util/text.h"

namespace strategos::tables {

namespace {

struct TsvReader {
  std::string_view source;
  const char* label;
  int version = 0;
  std::vector<std::vector<std::string>> rows;
};

TsvReader read_tsv(std::string_view source, const char* label) {
  TsvReader out{source, label, 0, {}};
  bool version_seen = false;
  for (const auto& raw_line : split(source, '\n')) {
    const std::string_view line = trim(raw_line);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line, '\t');
    if (!version_seen) {
      if (fields.size() != 2 || fields[0] != "version") {
        throw std::runtime_error(std::string(label) + ": first data line must be 'version\\t<n>'");
      }
      out.version = std::stoi(fields[1]);
      version_seen = true;
      continue;
    }
    out.rows.push_back(std::move(fields));
  }
  if (!version_seen) throw std::runtime_error(std::string(label) + ": missing version line");
  return out;
}

tactical::Flavor parse_flavor_or_throw(const std::string& s, const char* label) {
  tactical::Flavor f;
  if (!tactical::parse_flavor(s, f)) {
    throw std::runtime_error(std::string(label) + ": unknown flavor '" + s + "'");
  }
  return f;
}

}  // namespace

const StrategyEntry* DataTables::find(const std::string& kind, const std::string& name) const {
  for (const auto& e : catalog) {
    if (e.kind == kind && e.name == name) return &e;
  }
  return nullptr;
}

std::vector<std::string> DataTables::names(const std::string& kind) const {
  std::vector<std::string> out;
  for (const auto& e : catalog) {
    if (e.kind == kind) out.push_back(e.name);
  }
  return out;
}

int DataTables::rule(const std::string& key) const {
  const auto it = rules.find(key);
  if (it == rules.end()) throw std::runtime_error("unknown builtin rule key: " + key);
  return it->second;
}

DataTables parse(std::string_view catalog_tsv, std::string_view deltas_tsv,
                 std::string_view affinity_tsv, std::string_view persona_tsv,
                 std::string_view rules_tsv, std::string_view score_tsv) {
  DataTables t;

  auto catalog = read_tsv(catalog_tsv, "strategy_catalog");
  t.catalog_version = catalog.version;
  for (auto& row : catalog.rows) {
    if (row.size() != 4) throw std::runtime_error("strategy_catalog: expected 4 columns");
    StrategyEntry e{row[0], row[1], row[2] == "-" ? "" : row[2], row[3]};
    t.catalog.push_back(std::move(e));
  }

  auto deltas = read_tsv(deltas_tsv, "strategy_deltas");
  t.deltas_version = deltas.version;
  for (auto& row : deltas.rows) {
    if (row.size() != 3) throw std::runtime_error("strategy_deltas: expected 3 columns");
    t.deltas[row[0]].emplace_back(parse_flavor_or_throw(row[1], "strategy_deltas"), std::stoi(row[2]));
  }

  auto affinity = read_tsv(affinity_tsv, "flavor_affinity");
  t.affinity_version = affinity.version;
  for (auto& row : affinity.rows) {
    if (row.size() != 3) throw std::runtime_error("flavor_affinity: expected 3 columns");
    const auto item = engine::producible_by_name(row[0]);
    if (!item) throw std::runtime_error("flavor_affinity: unknown item '" + row[0] + "'");
    const auto f = parse_flavor_or_throw(row[1], "flavor_affinity");
    t.affinity[*item][static_cast<int>(f)] = std::stoi(row[2]);
  }

  auto persona = read_tsv(persona_tsv, "persona_coefficients");
  t.persona_version = persona.version;
  for (auto& row : persona.rows) {
    if (row.size() != 3) throw std::runtime_error("persona_coefficients: expected 3 columns");
    t.persona_coefficients[row[0]].emplace_back(row[1], std::stoi(row[2]));
  }

  auto rules = read_tsv(rules_tsv, "builtin_rules");
  t.rules_version = rules.version;
  for (auto& row : rules.rows) {
    if (row.size() != 2) throw std::runtime_error("builtin_rules: expected 2 columns");
    t.rules[row[0]] = std::stoi(row[1]);
  }

  auto score = read_tsv(score_tsv, "score_weights");
  t.score_version = score.version;
  for (auto& row : score.rows) {
    if (row.size() != 2) throw std::runtime_error("score_weights: expected 2 columns");
    t.score_weights[row[0]] = std::stoi(row[1]);
  }

  return t;
}

const DataTables& get() {
  static const DataTables tables = parse(data::kStrategyCatalog, data::kStrategyDeltas,
                                         data::kFlavorAffinity, data::kPersonaCoefficients,
                                         data::kBuiltinRules, data::kScoreWeights);
  return tables;
}

}  // namespace strategos::tables
