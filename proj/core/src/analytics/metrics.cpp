#include "strategos/analytics/metrics.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "strategos/engine/types.h"

namespace strategos::analytics {

const ConditionMetrics* MetricsSummary::find(const std::string& condition) const {
  for (const auto& c : conditions) {
    if (c.condition == condition) return &c;
  }
  return nullptr;
}

namespace {

const char* kGrandNames[4] = {"Culture", "UnitedNations", "Spaceship", "Conquest"};

}  // namespace

MetricsSummary compute_metrics(const std::vector<harness::GameRecord>& records) {
  MetricsSummary summary;
  summary.total_records = static_cast<int>(records.size());

  std::map<std::string, std::vector<const harness::GameRecord*>> by_condition;
  for (const auto& r : records) {
    if (r.excluded()) {
      ++summary.excluded_records;
      continue;
    }
    by_condition[r.condition].push_back(&r);
  }
  if (by_condition.empty()) {
    throw std::invalid_argument("compute_metrics: no included records");
  }

  for (const auto& [condition, rs] : by_condition) {
    ConditionMetrics m;
    m.condition = condition;
    m.games = static_cast<int>(rs.size());

    int wins = 0;
    int survived = 0;
    double score_ratio_sum = 0.0;
    long long total_length = 0;
    long long total_changes = 0;
    long long total_persona_changes = 0;
    long long total_survived_turns = 0;
    std::map<std::string, int> victory_counts;
    std::map<std::string, int> ideology_counts;
    std::map<std::string, double> adoption_sums;
    std::map<int, std::tuple<long long, long long, int>> per_turn_tokens;

    for (const auto* r : rs) {
      if (r->player0_won()) {
        ++wins;
        victory_counts[r->victory_kind] += 1;
      }
      const bool p0_survived = r->outcome_type != "player0_eliminated";
      if (p0_survived) ++survived;
      total_length += r->end_turn;

      int max_peak = 1;
      for (const int s : r->peak_scores) max_peak = std::max(max_peak, s);
      const int p0_peak = r->peak_scores.empty() ? 0 : r->peak_scores[0];
      score_ratio_sum += static_cast<double>(p0_peak) / static_cast<double>(max_peak);

      // Adoption profile over player-0 survived turns.
      int survived_turns = 0;
      std::array<int, 4> adopted{};
      for (const char c : r->grand_history) {
        if (c < '0' || c > '3') continue;
        ++survived_turns;
        adopted[c - '0'] += 1;
      }
      if (survived_turns > 0) {
        for (int g = 0; g < 4; ++g) {
          adoption_sums[kGrandNames[g]] +=
              static_cast<double>(adopted[g]) / static_cast<double>(survived_turns);
        }
      }
      total_survived_turns += survived_turns;
      total_changes += static_cast<long long>(r->strategy_change_turns.size());
      total_persona_changes += static_cast<long long>(r->persona_change_turns.size());

      ideology_counts[r->ideology] += 1;

      for (const auto& e : r->episodes) {
        auto& [in_sum, out_sum, n] = per_turn_tokens[e.turn];
        in_sum += e.input_tokens;
        out_sum += e.output_tokens;
        n += 1;
        m.total_input_tokens += e.input_tokens;
        m.total_output_tokens += e.output_tokens;
      }

      m.policy_trajectories.emplace_back(r->seed, r->policy_sequence);
    }

    const double n = static_cast<double>(m.games);
    m.win_rate = wins / n;
    // 95% CI, normal approximation for a proportion.
    const double se = std::sqrt(std::max(0.0, m.win_rate * (1.0 - m.win_rate) / n));
    m.win_rate_ci_low = std::max(0.0, m.win_rate - 1.96 * se);
    m.win_rate_ci_high = std::min(1.0, m.win_rate + 1.96 * se);
    m.mean_score_ratio = score_ratio_sum / n;
    m.survival_rate = survived / n;
    m.mean_game_length = static_cast<double>(total_length) / n;
    for (const auto& [kind, count] : victory_counts) m.victory_share[kind] = count / n;
    for (int g = 0; g < 4; ++g) m.adoption[kGrandNames[g]] = adoption_sums[kGrandNames[g]] / n;
    if (total_survived_turns > 0) {
      m.strategy_change_rate =
          100.0 * static_cast<double>(total_changes) / static_cast<double>(total_survived_turns);
      m.persona_change_rate = 100.0 * static_cast<double>(total_persona_changes) /
                              static_cast<double>(total_survived_turns);
    }
    for (const auto& [ideology, count] : ideology_counts) m.ideology_share[ideology] = count / n;
    for (const auto& [turn, agg] : per_turn_tokens) {
      const auto& [in_sum, out_sum, count] = agg;
      TokenCurvePoint p;
      p.turn = turn;
      p.mean_input = static_cast<double>(in_sum) / count;
      p.mean_output = static_cast<double>(out_sum) / count;
      p.episodes = count;
      m.token_curve.push_back(p);
    }

    summary.conditions.push_back(std::move(m));
  }
  return summary;
}

std::vector<NamedRegression> run_regressions(const std::vector<harness::GameRecord>& records,
                                             double lambda) {
  std::vector<const harness::GameRecord*> included;
  for (const auto& r : records) {
    if (!r.excluded()) included.push_back(&r);
  }

  std::vector<NamedRegression> out;
  if (included.size() < 4) return out;

  Factor condition{"condition", {}};
  Factor archetype{"archetype", {}};
  for (const auto* r : included) {
    condition.values.push_back(r->condition);
    archetype.values.push_back(
        r->archetypes.empty() ? "unknown" : std::to_string(r->archetypes[0]));
  }

  std::vector<Factor> factors;
  {
    std::set<std::string> condition_levels(condition.values.begin(), condition.values.end());
    if (condition_levels.size() >= 2) factors.push_back(condition);
  }
  {
    std::set<std::string> archetype_levels(archetype.values.begin(), archetype.values.end());
    if (archetype_levels.size() >= 2) factors.push_back(archetype);
  }
  if (factors.empty()) return out;

  DesignMatrix design;
  try {
    design = deviation_design_matrix(factors);
  } catch (const std::exception&) {
    return out;
  }
  const Eigen::Index n = design.X.rows();

  const auto fit_binary = [&](const std::string& name, auto outcome_fn) {
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      y(i) = outcome_fn(*included[static_cast<std::size_t>(i)]) ? 1.0 : 0.0;
    }
    try {
      NamedRegression reg;
      reg.name = name;
      reg.outcome = "binary (L1 logistic)";
      reg.result = fit_logistic_l1(design.X, y, lambda, design.column_names);
      out.push_back(std::move(reg));
    } catch (const std::exception&) {
      // Degenerate outcomes (all zeros) are skipped, not fatal.
    }
  };
  const auto fit_continuous = [&](const std::string& name, auto outcome_fn) {
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      y(i) = outcome_fn(*included[static_cast<std::size_t>(i)]);
    }
    try {
      NamedRegression reg;
      reg.name = name;
      reg.outcome = "continuous (OLS)";
      reg.result = fit_ols(design.X, y, design.column_names);
      out.push_back(std::move(reg));
    } catch (const std::exception&) {
    }
  };

  fit_binary("win_rate", [](const harness::GameRecord& r) { return r.player0_won(); });
  fit_binary("domination_victory", [](const harness::GameRecord& r) {
    return r.player0_won() && r.victory_kind == "Domination";
  });
  fit_binary("cultural_victory", [](const harness::GameRecord& r) {
    return r.player0_won() && r.victory_kind == "Cultural";
  });
  fit_continuous("score_ratio", [](const harness::GameRecord& r) {
    int max_peak = 1;
    for (const int s : r.peak_scores) max_peak = std::max(max_peak, s);
    return r.peak_scores.empty() ? 0.0
                                 : static_cast<double>(r.peak_scores[0]) / max_peak;
  });
  for (int g = 0; g < 4; ++g) {
    fit_continuous(std::string("adoption_") + kGrandNames[g], [g](const harness::GameRecord& r) {
      int survived = 0, adopted = 0;
      for (const char c : r.grand_history) {
        if (c < '0' || c > '3') continue;
        ++survived;
        if (c - '0' == g) ++adopted;
      }
      return survived > 0 ? static_cast<double>(adopted) / survived : 0.0;
    });
  }

  // Token growth vs game progression, linear and quadratic.
  std::vector<double> turns, tokens;
  for (const auto* r : included) {
    for (const auto& e : r->episodes) {
      turns.push_back(static_cast<double>(e.turn));
      tokens.push_back(static_cast<double>(e.input_tokens));
    }
  }
  if (turns.size() > 8) {
    try {
      NamedRegression lin;
      lin.name = "input_tokens_vs_turn_linear";
      lin.outcome = "tokens (polynomial degree 1)";
      lin.result = fit_polynomial(turns, tokens, 1);
      out.push_back(std::move(lin));
      NamedRegression quad;
      quad.name = "input_tokens_vs_turn_quadratic";
      quad.outcome = "tokens (polynomial degree 2)";
      quad.result = fit_polynomial(turns, tokens, 2);
      out.push_back(std::move(quad));
    } catch (const std::exception&) {
    }
  }
  return out;
}

}  // namespace strategos::analytics
