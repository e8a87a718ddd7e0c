#include "strategos/analytics/report.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace strategos::analytics {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::ofstream open_out(const std::string& dir, const std::string& name,
                       std::vector<std::string>& written) {
  const std::string path = dir + "/" + name;
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write report file: " + path);
  written.push_back(path);
  return out;
}

}  // namespace

std::vector<std::string> emit_report(const MetricsSummary& summary,
                                     const std::vector<NamedRegression>& regressions,
                                     const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::string> written;

  {
    auto out = open_out(out_dir, "report.txt", written);
    out << "EXPERIMENT REPORT\n";
    out << "=================\n";
    out << "records: " << summary.total_records << " total, " << summary.excluded_records
        << " excluded\n\n";

    out << "## Gameplay performance\n";
    out << "condition | games | win_rate (95% CI) | score_ratio | survival | mean_length\n";
    for (const auto& c : summary.conditions) {
      out << c.condition << " | " << c.games << " | " << fmt(c.win_rate) << " (" <<
          fmt(c.win_rate_ci_low) << ", " << fmt(c.win_rate_ci_high) << ") | "
          << fmt(c.mean_score_ratio) << " | " << fmt(c.survival_rate) << " | "
          << fmt(c.mean_game_length) << "\n";
    }

    out << "\n## Victory type distribution (share of games won by player 0)\n";
    for (const auto& c : summary.conditions) {
      out << c.condition << ":";
      for (const auto& [kind, share] : c.victory_share) {
        out << " " << kind << "=" << fmt(share);
      }
      out << "\n";
    }

    out << "\n## Grand strategy adoption (mean fraction of survived turns)\n";
    for (const auto& c : summary.conditions) {
      out << c.condition << ":";
      for (const auto& [grand, f] : c.adoption) {
        out << " " << grand << "=" << fmt(f);
      }
      out << "\n";
    }

    out << "\n## Change rates (per 100 survived turns)\n";
    for (const auto& c : summary.conditions) {
      out << c.condition << ": strategy=" << fmt(c.strategy_change_rate)
          << " persona=" << fmt(c.persona_change_rate) << "\n";
    }

    out << "\n## Ideology shares\n";
    for (const auto& c : summary.conditions) {
      out << c.condition << ":";
      for (const auto& [ideology, share] : c.ideology_share) {
        out << " " << ideology << "=" << fmt(share);
      }
      out << "\n";
    }

    out << "\n## Token usage\n";
    for (const auto& c : summary.conditions) {
      out << c.condition << ": input_total=" << c.total_input_tokens
          << " output_total=" << c.total_output_tokens << " curve_points="
          << c.token_curve.size() << "\n";
    }

    out << "\n## Regressions\n";
    for (const auto& reg : regressions) {
      out << "### " << reg.name << " [" << reg.outcome << "]";
      if (reg.result.lambda > 0) out << " lambda=" << fmt(reg.result.lambda);
      if (!reg.result.converged) out << " NOT CONVERGED";
      out << "\n";
      if (!reg.result.diagnostics.empty()) out << reg.result.diagnostics << "\n";
      out << "term | coefficient | marginal_effect | std_error | p_value\n";
      for (std::size_t j = 0; j < reg.result.names.size(); ++j) {
        const auto idx = static_cast<Eigen::Index>(j);
        out << reg.result.names[j] << " | " << fmt(reg.result.coefficients(idx)) << " | "
            << fmt(reg.result.marginal_effects(idx)) << " | " << fmt(reg.result.std_errors(idx))
            << " | " << fmt(reg.result.p_values(idx)) << "\n";
      }
    }
  }

  {
    auto out = open_out(out_dir, "metrics.csv", written);
    out << "condition,games,win_rate,win_rate_ci_low,win_rate_ci_high,mean_score_ratio,"
           "survival_rate,mean_game_length,strategy_change_rate,persona_change_rate,"
           "total_input_tokens,total_output_tokens\n";
    for (const auto& c : summary.conditions) {
      out << c.condition << "," << c.games << "," << fmt(c.win_rate) << ","
          << fmt(c.win_rate_ci_low) << "," << fmt(c.win_rate_ci_high) << ","
          << fmt(c.mean_score_ratio) << "," << fmt(c.survival_rate) << ","
          << fmt(c.mean_game_length) << "," << fmt(c.strategy_change_rate) << ","
          << fmt(c.persona_change_rate) << "," << c.total_input_tokens << ","
          << c.total_output_tokens << "\n";
    }
  }

  {
    auto out = open_out(out_dir, "victory_distribution.csv", written);
    out << "condition,victory_kind,share\n";
    for (const auto& c : summary.conditions) {
      for (const auto& [kind, share] : c.victory_share) {
        out << c.condition << "," << kind << "," << fmt(share) << "\n";
      }
    }
  }

  {
    auto out = open_out(out_dir, "adoption_profile.csv", written);
    out << "condition,grand_strategy,adoption_fraction\n";
    for (const auto& c : summary.conditions) {
      for (const auto& [grand, f] : c.adoption) {
        out << c.condition << "," << grand << "," << fmt(f) << "\n";
      }
    }
  }

  {
    auto out = open_out(out_dir, "change_rates.csv", written);
    out << "condition,strategy_changes_per_100_turns,persona_changes_per_100_turns\n";
    for (const auto& c : summary.conditions) {
      out << c.condition << "," << fmt(c.strategy_change_rate) << ","
          << fmt(c.persona_change_rate) << "\n";
    }
  }

  {
    auto out = open_out(out_dir, "ideology_shares.csv", written);
    out << "condition,ideology,share\n";
    for (const auto& c : summary.conditions) {
      for (const auto& [ideology, share] : c.ideology_share) {
        out << c.condition << "," << ideology << "," << fmt(share) << "\n";
      }
    }
  }

  {
    auto out = open_out(out_dir, "token_curve.csv", written);
    out << "condition,turn,mean_input_tokens,mean_output_tokens,episodes\n";
    for (const auto& c : summary.conditions) {
      for (const auto& p : c.token_curve) {
        out << c.condition << "," << p.turn << "," << fmt(p.mean_input) << ","
            << fmt(p.mean_output) << "," << p.episodes << "\n";
      }
    }
  }

  {
    auto out = open_out(out_dir, "policy_trajectories.csv", written);
    out << "condition,seed,step,policy\n";
    for (const auto& c : summary.conditions) {
      for (const auto& [seed, policies] : c.policy_trajectories) {
        for (std::size_t i = 0; i < policies.size(); ++i) {
          out << c.condition << "," << seed << "," << i << "," << policies[i] << "\n";
        }
      }
    }
  }

  {
    auto out = open_out(out_dir, "regressions.csv", written);
    out << "regression,outcome,term,coefficient,marginal_effect,std_error,p_value,lambda,"
           "converged\n";
    for (const auto& reg : regressions) {
      for (std::size_t j = 0; j < reg.result.names.size(); ++j) {
        const auto idx = static_cast<Eigen::Index>(j);
        out << reg.name << "," << reg.outcome << "," << reg.result.names[j] << ","
            << fmt(reg.result.coefficients(idx)) << "," << fmt(reg.result.marginal_effects(idx))
            << "," << fmt(reg.result.std_errors(idx)) << "," << fmt(reg.result.p_values(idx))
            << "," << fmt(reg.result.lambda) << "," << (reg.result.converged ? "true" : "false")
            << "\n";
      }
    }
  }

  return written;
}

}  // namespace strategos::analytics
