#include "strategos/strategy/ops.h"

#include <algorithm>
#include <stdexcept>

#include "strategos/tables.h"
#include "strategos/util/text.h"

namespace strategos::strategy {

using engine::GameState;
using engine::PlayerId;

namespace {

bool has_research_in_progress(const GameState& state, PlayerId p) {
  return state.players[p].current_research != engine::kNoTech;
}

std::vector<std::string> catalog_values(const std::string& kind, const OptionCatalog& catalog) {
  std::vector<std::string> out;
  if (kind == "grand") {
    out = catalog.grand;
  } else if (kind == "economic") {
    for (const auto& o : catalog.economic) out.push_back(o.name);
  } else if (kind == "military") {
    for (const auto& o : catalog.military) out.push_back(o.name);
  } else if (kind == "research") {
    for (const auto& o : catalog.research) out.push_back(o.name);
  } else if (kind == "policy") {
    for (const auto& o : catalog.policy) out.push_back(o.name);
  }
  return out;
}

ValidationError unknown_choice(const std::string& kind, const std::string& choice,
                               const std::vector<std::string>& candidates) {
  ValidationError err;
  err.kind = kind;
  err.value = choice;
  err.message = "'" + choice + "' is not in the current " + kind + " options";
  err.suggestion = nearest_match(choice, candidates);
  return err;
}

}  // namespace

std::string ValidationError::describe() const {
  std::string out = message;
  if (!suggestion.empty()) out += "; did you mean '" + suggestion + "'?";
  return out;
}

bool OptionCatalog::has_research_option(const std::string& name) const {
  for (const auto& o : research) {
    if (o.name == name) return true;
  }
  return false;
}

const PolicyOption* OptionCatalog::find_policy_option(const std::string& name) const {
  for (const auto& o : policy) {
    if (o.name == name) return &o;
  }
  return nullptr;
}

OptionCatalog option_catalog(const GameState& state, PlayerId player,
                             const OverrideState& overrides) {
  if (player < 0 || player >= state.config.player_count || !state.players[player].alive) {
    throw std::invalid_argument("option_catalog: dead or unknown player");
  }
  const auto& t = tables::get();
  const auto& ps = state.players[player];

  OptionCatalog catalog;
  catalog.grand = t.names("grand");
  for (const auto& e : t.catalog) {
    if (e.kind == "economic") catalog.economic.push_back({e.name, e.description});
    if (e.kind == "military") catalog.military.push_back({e.name, e.description});
  }

  // Research options: legal next techs in id order.
  for (const auto& tech : engine::all_techs()) {
    if (ps.has_tech(tech.id) || ps.current_research == tech.id) continue;
    bool ready = true;
    for (const engine::TechId pre : tech.prereqs) {
      if (!ps.has_tech(pre)) ready = false;
    }
    if (!ready) continue;
    ResearchOption opt;
    opt.name = tech.name;
    opt.description = tech.description;
    for (const auto& later : engine::all_techs()) {
      if (std::find(later.prereqs.begin(), later.prereqs.end(), tech.id) != later.prereqs.end()) {
        opt.leads_to.push_back(later.name);
      }
    }
    catalog.research.push_back(std::move(opt));
  }

  // Policy options: next policy per open branch, openers for unopened
  // branches, ideologies once any branch is complete.
  const auto in_branch = [&](int branch) {
    int have = 0;
    for (const auto& pol : engine::all_policies()) {
      if (pol.branch == branch && ps.has_policy(pol.id)) ++have;
    }
    return have;
  };
  for (int b = 0; b < engine::kPolicyBranchCount; ++b) {
    const int have = in_branch(b);
    if (have >= engine::kPoliciesPerBranch) continue;
    for (const auto& pol : engine::all_policies()) {
      if (pol.branch != b || pol.branch_index != have) continue;
      PolicyOption opt;
      opt.policy = pol.id;
      opt.opens_branch = have == 0;
      opt.name = have == 0 ? std::string(pol.name) + " (New Branch)" : pol.name;
      opt.description = pol.description;
      catalog.policy.push_back(std::move(opt));
    }
  }
  bool any_branch_complete = false;
  for (int b = 0; b < engine::kPolicyBranchCount; ++b) {
    if (in_branch(b) == engine::kPoliciesPerBranch) any_branch_complete = true;
  }
  if (any_branch_complete && ps.ideology == engine::Ideology::None) {
    for (const auto& ideo : engine::all_ideologies()) {
      PolicyOption opt;
      opt.ideology = ideo.id;
      opt.name = std::string(ideo.name) + " (Ideology)";
      opt.description = ideo.description;
      catalog.policy.push_back(std::move(opt));
    }
  }

  catalog.current_grand = overrides.active_set.grand;
  catalog.current_economic = overrides.active_set.economic;
  catalog.current_military = overrides.active_set.military;
  if (has_research_in_progress(state, player)) {
    catalog.current_research = engine::find_tech(ps.current_research)->name;
  }
  if (overrides.queued_research != engine::kNoTech) {
    catalog.queued_research = engine::find_tech(overrides.queued_research)->name;
  }
  if (overrides.queued_policy >= 0) {
    const auto* pol = engine::find_policy(overrides.queued_policy);
    catalog.queued_policy = ps.has_policy(overrides.queued_policy)
                                ? std::string(pol->name)
                                : (pol->branch_index == 0 && in_branch(pol->branch) == 0
                                       ? std::string(pol->name) + " (New Branch)"
                                       : std::string(pol->name));
  } else if (overrides.queued_ideology != engine::Ideology::None) {
    catalog.queued_policy =
        std::string(engine::find_ideology(overrides.queued_ideology)->name) + " (Ideology)";
  }
  return catalog;
}

tactical::FlavorVector apply_strategy_set(const StrategySet& set,
                                          const tactical::FlavorVector& base) {
  const auto& deltas = tables::get().deltas;
  // Sum all deltas first, clamp once: set application is order-independent.
  std::array<int, tactical::kFlavorCount> sums{};

  const auto accumulate = [&](const std::string& name) {
    const auto it = deltas.find(name);
    if (it == deltas.end()) {
      // Strategies without a delta row contribute nothing, but unknown names
      // are a caller bug.
      if (!tables::get().find("economic", name) && !tables::get().find("military", name) &&
          !tables::get().find("grand", name)) {
        throw std::invalid_argument("apply_strategy_set: unknown strategy '" + name + "'");
      }
      return;
    }
    for (const auto& [flavor, delta] : it->second) sums[static_cast<int>(flavor)] += delta;
  };

  accumulate(engine::to_string(set.grand));
  for (const auto& name : set.economic) accumulate(name);
  for (const auto& name : set.military) accumulate(name);

  tactical::FlavorVector out = base;
  for (int f = 0; f < tactical::kFlavorCount; ++f) {
    if (sums[f] != 0) out.add(static_cast<tactical::Flavor>(f), sums[f]);
  }
  return out;
}

ValidationResult validate_choice(const std::string& kind, const std::string& choice,
                                 const OptionCatalog& catalog) {
  const auto values = catalog_values(kind, catalog);
  if (values.empty() && kind != "grand" && kind != "economic" && kind != "military" &&
      kind != "research" && kind != "policy") {
    ValidationError err;
    err.kind = kind;
    err.value = choice;
    err.message = "unknown decision kind '" + kind + "'";
    return err;
  }
  if (std::find(values.begin(), values.end(), choice) == values.end()) {
    return unknown_choice(kind, choice, values);
  }
  // Exclusivity against the currently active set.
  const auto* entry = tables::get().find(kind, choice);
  if (entry && !entry->exclusive_with.empty()) {
    const auto& active = kind == "economic" ? catalog.current_economic : catalog.current_military;
    if (std::find(active.begin(), active.end(), entry->exclusive_with) != active.end()) {
      ValidationError err;
      err.kind = kind;
      err.value = choice;
      err.message = "'" + choice + "' cannot be active together with '" + entry->exclusive_with + "'";
      return err;
    }
  }
  return std::nullopt;
}

ValidationResult validate_strategy_set(const StrategySet& set, const OptionCatalog& catalog) {
  const auto& t = tables::get();
  const auto check_names = [&](const std::vector<std::string>& names, const char* kind)
      -> ValidationResult {
    for (const auto& name : names) {
      if (!t.find(kind, name)) {
        return unknown_choice(kind, name, t.names(kind));
      }
    }
    // No exclusive pair within the new set.
    for (const auto& name : names) {
      const auto* entry = t.find(kind, name);
      if (!entry->exclusive_with.empty() &&
          std::find(names.begin(), names.end(), entry->exclusive_with) != names.end()) {
        ValidationError err;
        err.kind = kind;
        err.value = name;
        err.message =
            "'" + name + "' and '" + entry->exclusive_with + "' are mutually exclusive";
        return err;
      }
    }
    return std::nullopt;
  };
  (void)catalog;
  if (auto err = check_names(set.economic, "economic")) return err;
  if (auto err = check_names(set.military, "military")) return err;
  return std::nullopt;
}

ValidationResult queue_override(const OverrideRequest& request, const OptionCatalog& catalog,
                                OverrideState& overrides) {
  switch (request.category) {
    case DecisionCategory::Strategy: {
      StrategySet next = request.set;
      std::sort(next.economic.begin(), next.economic.end());
      next.economic.erase(std::unique(next.economic.begin(), next.economic.end()),
                          next.economic.end());
      std::sort(next.military.begin(), next.military.end());
      next.military.erase(std::unique(next.military.begin(), next.military.end()),
                          next.military.end());
      if (auto err = validate_strategy_set(next, catalog)) return err;
      next.rationale = request.rationale;
      overrides.active_set = std::move(next);
      overrides.mark_controlled(DecisionCategory::Strategy);
      overrides.rationale(DecisionCategory::Strategy) = request.rationale;
      return std::nullopt;
    }
    case DecisionCategory::Research: {
      if (auto err = validate_choice("research", request.choice, catalog)) return err;
      overrides.queued_research = engine::find_tech_by_name(request.choice)->id;
      overrides.mark_controlled(DecisionCategory::Research);
      overrides.rationale(DecisionCategory::Research) = request.rationale;
      return std::nullopt;
    }
    case DecisionCategory::Policy: {
      if (auto err = validate_choice("policy", request.choice, catalog)) return err;
      const auto* opt = catalog.find_policy_option(request.choice);
      if (opt->policy >= 0) {
        overrides.queued_policy = opt->policy;
        overrides.queued_ideology = engine::Ideology::None;
      } else {
        overrides.queued_policy = -1;
        overrides.queued_ideology = opt->ideology;
      }
      overrides.mark_controlled(DecisionCategory::Policy);
      overrides.rationale(DecisionCategory::Policy) = request.rationale;
      return std::nullopt;
    }
    case DecisionCategory::Persona: {
      Persona next = overrides.active_persona;
      for (const auto& [name, value] : request.persona_updates) {
        if (Persona::param_index(name) < 0) {
          ValidationError err;
          err.kind = "persona";
          err.value = name;
          err.message = "unknown persona parameter '" + name + "'";
          std::vector<std::string> names(Persona::param_names().begin(),
                                         Persona::param_names().end());
          err.suggestion = nearest_match(name, names);
          return err;
        }
        if (value < 1 || value > 10) {
          ValidationError err;
          err.kind = "persona";
          err.value = name + "=" + std::to_string(value);
          err.message = "persona parameter '" + name + "' must be in [1, 10]";
          return err;
        }
        next.set(name, value);
      }
      overrides.active_persona = next;
      overrides.mark_controlled(DecisionCategory::Persona);
      overrides.rationale(DecisionCategory::Persona) = request.rationale;
      return std::nullopt;
    }
  }
  ValidationError err;
  err.kind = "unknown";
  err.message = "unknown decision category";
  return err;
}

}  // namespace strategos::strategy
