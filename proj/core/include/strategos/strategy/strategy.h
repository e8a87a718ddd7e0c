#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strategos/engine/state.h"

namespace strategos::strategy {

// Grand strategy plus the active economic/military strategy toggles.
// Names are validated against the catalog; exclusive pairs may not co-exist.
struct StrategySet {
  engine::GrandStrategy grand = engine::GrandStrategy::Culture;
  std::vector<std::string> economic;  // sorted, unique
  std::vector<std::string> military;  // sorted, unique
  std::string rationale;

  bool same_choices(const StrategySet& o) const {
    return grand == o.grand && economic == o.economic && military == o.military;
  }
};

// The 26 diplomacy-bias parameters, every value in [1, 10].
class Persona {
 public:
  static constexpr int kParamCount = engine::kPersonaParamCount;

  // Parameter names in canonical order.
  static std::span<const char* const> param_names();
  static int param_index(const std::string& name);  // -1 when unknown

  Persona();  // all parameters 5
  static Persona archetype_default(int archetype_id);

  int get(int index) const { return values_[index]; }
  int get(const std::string& name) const;

  // Throws std::out_of_range when value is outside [1, 10] or the index is
  // invalid; a constructed Persona can never hold an out-of-range value.
  void set(int index, int value);
  void set(const std::string& name, int value);

  bool operator==(const Persona&) const = default;

 private:
  std::array<int, kParamCount> values_;
};

enum class DecisionCategory { Strategy, Research, Policy, Persona };
inline constexpr int kDecisionCategoryCount = 4;
const char* to_string(DecisionCategory c);

// Everything a strategist currently legally can choose, with descriptions.
struct ResearchOption {
  std::string name;
  std::string description;
  std::vector<std::string> leads_to;
};

struct PolicyOption {
  std::string name;         // display string, e.g. "Tradition (New Branch)"
  std::string description;
  engine::PolicyId policy = -1;              // -1 when this entry is an ideology
  engine::Ideology ideology = engine::Ideology::None;
  bool opens_branch = false;
};

struct StrategyOption {
  std::string name;
  std::string description;
};

struct OptionCatalog {
  std::vector<std::string> grand;             // all grand strategy names
  std::vector<StrategyOption> economic;
  std::vector<StrategyOption> military;
  std::vector<ResearchOption> research;
  std::vector<PolicyOption> policy;

  // Current choices, needed for exclusivity checks and state documents.
  engine::GrandStrategy current_grand = engine::GrandStrategy::Culture;
  std::vector<std::string> current_economic;
  std::vector<std::string> current_military;
  std::string current_research;   // in-progress tech, empty if none
  std::string queued_research;    // queued next tech, empty if none
  std::string queued_policy;      // queued next policy display string

  bool has_research_option(const std::string& name) const;
  const PolicyOption* find_policy_option(const std::string& name) const;
};

// Which layer wrote each decision category this turn.
enum class Writer { Builtin, Override };

// Per-player external-control surface. While a category is controlled the
// builtin strategist never writes it.
struct OverrideState {
  std::array<bool, kDecisionCategoryCount> controlled{};  // by DecisionCategory
  StrategySet active_set;
  Persona active_persona;
  engine::TechId queued_research = engine::kNoTech;
  engine::PolicyId queued_policy = -1;
  engine::Ideology queued_ideology = engine::Ideology::None;
  std::array<std::string, kDecisionCategoryCount> last_rationale;

  bool is_controlled(DecisionCategory c) const { return controlled[static_cast<int>(c)]; }
  void mark_controlled(DecisionCategory c) { controlled[static_cast<int>(c)] = true; }
  std::string& rationale(DecisionCategory c) { return last_rationale[static_cast<int>(c)]; }
  const std::string& rationale(DecisionCategory c) const {
    return last_rationale[static_cast<int>(c)];
  }
};

struct ValidationError {
  std::string kind;        // decision kind the choice belonged to
  std::string value;       // the offending value
  std::string message;
  std::string suggestion;  // nearest legal option, empty when none

  std::string describe() const;
};

using ValidationResult = std::optional<ValidationError>;  // nullopt == ok

}  // namespace strategos::strategy
