#include <algorithm>
#include <set>
#include <stdexcept>

#include "strategos/analytics/regression.h"

namespace strategos::analytics {

DesignMatrix deviation_design_matrix(const std::vector<Factor>& factors) {
  if (factors.empty()) throw std::invalid_argument("deviation_design_matrix: no factors");
  const std::size_t rows = factors.front().values.size();
  for (const auto& f : factors) {
    if (f.values.size() != rows) {
      throw std::invalid_argument("deviation_design_matrix: ragged factor " + f.name);
    }
  }

  struct Coded {
    const Factor* factor;
    std::vector<std::string> levels;  // sorted; levels[0] is the reference
  };
  std::vector<Coded> coded;
  int columns = 1;  // intercept
  for (const auto& f : factors) {
    std::set<std::string> levels(f.values.begin(), f.values.end());
    if (levels.size() < 2) {
      throw std::invalid_argument("deviation_design_matrix: factor '" + f.name +
                                  "' has fewer than 2 levels");
    }
    Coded c;
    c.factor = &f;
    c.levels.assign(levels.begin(), levels.end());
    columns += static_cast<int>(c.levels.size()) - 1;
    coded.push_back(std::move(c));
  }

  DesignMatrix out;
  out.X = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows), columns);
  out.column_names.reserve(static_cast<std::size_t>(columns));
  out.column_names.push_back("intercept");
  out.X.col(0).setOnes();

  int col = 1;
  for (const auto& c : coded) {
    out.references.emplace_back(c.factor->name, c.levels.front());
    for (std::size_t li = 1; li < c.levels.size(); ++li) {
      const std::string& level = c.levels[li];
      out.column_names.push_back(c.factor->name + "[" + level + "]");
      for (std::size_t r = 0; r < rows; ++r) {
        const std::string& v = c.factor->values[r];
        if (v == level) {
          out.X(static_cast<Eigen::Index>(r), col) = 1.0;
        } else if (v == c.levels.front()) {
          out.X(static_cast<Eigen::Index>(r), col) = -1.0;
        }
      }
      ++col;
    }
  }
  return out;
}

}  // namespace strategos::analytics
