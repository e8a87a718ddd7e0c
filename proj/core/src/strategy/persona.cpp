#include <stdexcept>

#include "strategos/strategy/ops.h"
#include "strategos/strategy/strategy.h"
#include "strategos/tables.h"

namespace strategos::strategy {

namespace {
constexpr const char* kParamNames[Persona::kParamCount] = {
    "VictoryCompetitiveness", "WonderCompetitiveness", "MinorCivCompetitiveness", "Boldness",
    "WarBias", "HostileBias", "WarmongerHate", "NeutralBias", "FriendlyBias", "GuardedBias",
    "AfraidBias", "DiplomaticBalance", "Friendliness", "WorkWithWillingness",
    "WorkAgainstWillingness", "Loyalty", "MinorCivFriendlyBias", "MinorCivNeutralBias",
    "MinorCivHostileBias", "MinorCivWarBias", "DenounceWillingness", "Forgiveness", "Meanness",
    "Neediness", "Chattiness", "DeceptiveBias",
};
}

std::span<const char* const> Persona::param_names() {
  return std::span<const char* const>(kParamNames, kParamCount);
}

int Persona::param_index(const std::string& name) {
  for (int i = 0; i < kParamCount; ++i) {
    if (name == kParamNames[i]) return i;
  }
  return -1;
}

Persona::Persona() { values_.fill(5); }

Persona Persona::archetype_default(int archetype_id) {
  Persona p;
  const auto& arch = engine::archetype(archetype_id);
  for (int i = 0; i < kParamCount; ++i) p.values_[i] = arch.default_persona[i];
  return p;
}

int Persona::get(const std::string& name) const {
  const int idx = param_index(name);
  if (idx < 0) throw std::out_of_range("unknown persona parameter: " + name);
  return values_[idx];
}

void Persona::set(int index, int value) {
  if (index < 0 || index >= kParamCount) throw std::out_of_range("persona parameter index");
  if (value < 1 || value > 10) {
    throw std::out_of_range("persona value out of range [1, 10]: " + std::to_string(value));
  }
  values_[index] = value;
}

void Persona::set(const std::string& name, int value) {
  const int idx = param_index(name);
  if (idx < 0) throw std::out_of_range("unknown persona parameter: " + name);
  set(idx, value);
}

const char* to_string(DecisionCategory c) {
  switch (c) {
    case DecisionCategory::Strategy: return "Strategy";
    case DecisionCategory::Research: return "Research";
    case DecisionCategory::Policy: return "Policy";
    case DecisionCategory::Persona: return "Persona";
  }
  return "Strategy";
}

engine::DiplomacyWeights apply_persona(const Persona& p) {
  const auto& coefficients = tables::get().persona_coefficients;
  engine::DiplomacyWeights w;

  const auto linear = [&](const char* weight_name, int fallback) {
    const auto it = coefficients.find(weight_name);
    if (it == coefficients.end()) return fallback;
    int total = 0;
    for (const auto& [param, coef] : it->second) total += coef * p.get(param);
    return total;
  };

  // The one product-form weight: war propensity scales with WarBias x Boldness.
  {
    const auto it = coefficients.find("war_propensity");
    int scale = 4;
    if (it != coefficients.end()) {
      for (const auto& [param, coef] : it->second) {
        if (param == "war_product_scale") scale = coef;
      }
    }
    w.war_propensity = scale * p.get("WarBias") * p.get("Boldness");
  }

  w.hostile_propensity = linear("hostile_propensity", w.hostile_propensity);
  w.friendly_propensity = linear("friendly_propensity", w.friendly_propensity);
  w.peace_propensity = linear("peace_propensity", w.peace_propensity);
  w.denounce_propensity = linear("denounce_propensity", w.denounce_propensity);
  w.deception_propensity = linear("deception_propensity", w.deception_propensity);
  w.warmonger_penalty = linear("warmonger_penalty", w.warmonger_penalty);
  w.neutral_pull = linear("neutral_pull", w.neutral_pull);
  w.caution = linear("caution", w.caution);
  w.loyalty_hold = linear("loyalty_hold", w.loyalty_hold);
  w.coalition_drive = linear("coalition_drive", w.coalition_drive);
  w.competitiveness = linear("competitiveness", w.competitiveness);
  w.minor_influence_drive = linear("minor_influence_drive", w.minor_influence_drive);
  w.minor_aggression = linear("minor_aggression", w.minor_aggression);
  w.minor_neutrality = linear("minor_neutrality", w.minor_neutrality);
  w.chatter = linear("chatter", w.chatter);
  return w;
}

}  // namespace strategos::strategy
