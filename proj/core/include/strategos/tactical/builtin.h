#pragma once

#include "strategos/engine/game.h"
#include "strategos/strategy/strategy.h"

namespace strategos::tactical {

// Full macro decision produced by the builtin rule-based strategist.
struct StrategyDecision {
  strategy::StrategySet set;
  engine::TechId next_research = engine::kNoTech;
  engine::PolicyId next_policy = -1;
  engine::Ideology next_ideology = engine::Ideology::None;
};

// Rule-table baseline: grand strategy from fitness scores, economic/military
// sets from threshold triggers, research/policy completing the current goal.
// Pure: identical state yields an identical decision.
StrategyDecision builtin_macro_decide(const engine::GameState& state, engine::PlayerId player);

}  // namespace strategos::tactical
