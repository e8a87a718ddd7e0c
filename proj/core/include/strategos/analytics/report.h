#pragma once

#include <string>
#include <vector>

#include "strategos/analytics/metrics.h"

namespace strategos::analytics {

// Writes the text report plus one CSV per figure-equivalent into `out_dir`:
// report.txt, metrics.csv, victory_distribution.csv, adoption_profile.csv,
// change_rates.csv, ideology_shares.csv, token_curve.csv,
// policy_trajectories.csv, regressions.csv. Outputs are byte-stable for
// identical inputs. Returns the written file paths.
std::vector<std::string> emit_report(const MetricsSummary& summary,
                                     const std::vector<NamedRegression>& regressions,
                                     const std::string& out_dir);

}  // namespace strategos::analytics
