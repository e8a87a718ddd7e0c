#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace strategos::analytics {

// One categorical factor: a value per observation row.
struct Factor {
  std::string name;
  std::vector<std::string> values;
};

struct DesignMatrix {
  Eigen::MatrixXd X;
  std::vector<std::string> column_names;
  // Reference level per factor, coded -1 across that factor's columns.
  std::vector<std::pair<std::string, std::string>> references;
};

// Deviation (sum) coding: a k-level factor becomes k-1 columns; the
// reference level (first in sorted order) is coded -1 in each of them, so
// effects are centered on the grand mean. Includes an intercept column.
// Throws std::invalid_argument on a single-level factor.
DesignMatrix deviation_design_matrix(const std::vector<Factor>& factors);

struct RegressionResult {
  std::vector<std::string> names;
  Eigen::VectorXd coefficients;
  Eigen::VectorXd std_errors;
  Eigen::VectorXd p_values;
  Eigen::VectorXd marginal_effects;
  double lambda = 0.0;
  int iterations = 0;
  bool converged = true;
  std::string diagnostics;
};

// Ordinary least squares via column-pivoted QR. Throws std::invalid_argument
// on rank deficiency, naming the dependent columns. p-values use the normal
// approximation on coefficient / standard error.
RegressionResult fit_ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                         const std::vector<std::string>& names);

// L1-regularized logistic regression by proximal gradient (FISTA with
// restart). The column named "intercept" is never penalized. Convergence:
// max coefficient change < 1e-8. Divergence after the iteration cap is
// reported via converged/diagnostics, never silent. Marginal effects are
// average predicted-probability changes per unit of the column. p-values
// come from an unpenalized refit on the selected support.
RegressionResult fit_logistic_l1(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda,
                                 const std::vector<std::string>& names);

// Least-squares polynomial fit of the given degree; coefficient order is
// (1, x, x^2, ...). Requires more distinct x values than the degree.
RegressionResult fit_polynomial(const std::vector<double>& x, const std::vector<double>& y,
                                int degree);

double normal_two_sided_p(double z);

}  // namespace strategos::analytics
