#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "strategos/analytics/regression.h"
#include "strategos/harness/record.h"

namespace strategos::analytics {

struct TokenCurvePoint {
  int turn = 0;
  double mean_input = 0.0;
  double mean_output = 0.0;
  int episodes = 0;
};

struct ConditionMetrics {
  std::string condition;
  int games = 0;  // included games

  double win_rate = 0.0;
  double win_rate_ci_low = 0.0;
  double win_rate_ci_high = 0.0;
  double mean_score_ratio = 0.0;
  double survival_rate = 0.0;
  double mean_game_length = 0.0;

  // Share of included games player 0 won with each victory kind.
  std::map<std::string, double> victory_share;
  // Mean fraction of player-0 survived turns each grand strategy was active.
  std::map<std::string, double> adoption;
  double strategy_change_rate = 0.0;  // per 100 survived turns
  double persona_change_rate = 0.0;
  std::map<std::string, double> ideology_share;

  std::vector<TokenCurvePoint> token_curve;
  long long total_input_tokens = 0;
  long long total_output_tokens = 0;

  // Policy adoption sequences, one per included game (ordered).
  std::vector<std::pair<std::uint64_t, std::vector<std::string>>> policy_trajectories;
};

struct MetricsSummary {
  std::vector<ConditionMetrics> conditions;  // sorted by condition name
  int total_records = 0;
  int excluded_records = 0;

  const ConditionMetrics* find(const std::string& condition) const;
};

// Computes the evaluation metrics over included records (exclusions are
// dropped first and never influence any statistic). Throws
// std::invalid_argument when nothing is left.
MetricsSummary compute_metrics(const std::vector<harness::GameRecord>& records);

struct NamedRegression {
  std::string name;
  std::string outcome;
  RegressionResult result;
};

// The fixed-effects analyses over a dataset: deviation-coded condition and
// archetype factors; L1 logistic for binary outcomes, OLS for continuous,
// polynomial fits for the token curve.
std::vector<NamedRegression> run_regressions(const std::vector<harness::GameRecord>& records,
                                             double lambda = 0.01);

}  // namespace strategos::analytics
