#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "strategos/analytics/regression.h"

namespace strategos::analytics {

double normal_two_sided_p(double z) {
  return std::erfc(std::abs(z) / std::sqrt(2.0));
}

namespace {

double sigmoid(double x) {
  if (x >= 0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// Average negative log-likelihood of the logistic model.
double logistic_nll(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                    const Eigen::VectorXd& beta) {
  const Eigen::VectorXd eta = X * beta;
  double total = 0.0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) {
    const double e = eta(i);
    // log(1 + exp(e)) computed stably.
    const double log1pexp = e > 0 ? e + std::log1p(std::exp(-e)) : std::log1p(std::exp(e));
    total += log1pexp - y(i) * e;
  }
  return total / static_cast<double>(X.rows());
}

Eigen::VectorXd logistic_grad(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                              const Eigen::VectorXd& beta) {
  Eigen::VectorXd mu(X.rows());
  const Eigen::VectorXd eta = X * beta;
  for (Eigen::Index i = 0; i < eta.size(); ++i) mu(i) = sigmoid(eta(i));
  return X.transpose() * (mu - y) / static_cast<double>(X.rows());
}

// Newton-Raphson logistic fit (no penalty) used for p-value refits.
Eigen::VectorXd newton_logistic(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                Eigen::MatrixXd* information_out) {
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(X.cols());
  for (int iter = 0; iter < 100; ++iter) {
    const Eigen::VectorXd eta = X * beta;
    Eigen::VectorXd mu(eta.size()), w(eta.size());
    for (Eigen::Index i = 0; i < eta.size(); ++i) {
      mu(i) = sigmoid(eta(i));
      w(i) = std::max(1e-10, mu(i) * (1.0 - mu(i)));
    }
    const Eigen::MatrixXd XtWX = X.transpose() * w.asDiagonal() * X;
    const Eigen::VectorXd grad = X.transpose() * (y - mu);
    const Eigen::VectorXd step = XtWX.ldlt().solve(grad);
    beta += step;
    if (step.cwiseAbs().maxCoeff() < 1e-10) break;
  }
  if (information_out) {
    const Eigen::VectorXd eta = X * beta;
    Eigen::VectorXd w(eta.size());
    for (Eigen::Index i = 0; i < eta.size(); ++i) {
      const double mu = sigmoid(eta(i));
      w(i) = std::max(1e-10, mu * (1.0 - mu));
    }
    *information_out = X.transpose() * w.asDiagonal() * X;
  }
  return beta;
}

}  // namespace

RegressionResult fit_ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                         const std::vector<std::string>& names) {
  if (X.rows() != y.size()) throw std::invalid_argument("fit_ols: X rows must match y size");
  if (X.rows() < X.cols()) throw std::invalid_argument("fit_ols: need rows >= columns");
  if (static_cast<Eigen::Index>(names.size()) != X.cols()) {
    throw std::invalid_argument("fit_ols: one name per column required");
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  qr.setThreshold(1e-10);
  if (qr.rank() < X.cols()) {
    // Columns pivoted past the rank boundary are linearly dependent.
    std::ostringstream msg;
    msg << "fit_ols: design matrix is rank deficient; dependent columns:";
    const auto perm = qr.colsPermutation().indices();
    for (Eigen::Index i = qr.rank(); i < X.cols(); ++i) {
      msg << " " << names[static_cast<std::size_t>(perm(i))];
    }
    throw std::invalid_argument(msg.str());
  }

  RegressionResult r;
  r.names = names;
  r.coefficients = qr.solve(y);

  const Eigen::VectorXd residuals = y - X * r.coefficients;
  const double dof = static_cast<double>(X.rows() - X.cols());
  const double sigma2 = dof > 0 ? residuals.squaredNorm() / dof : 0.0;
  const Eigen::MatrixXd cov = sigma2 * (X.transpose() * X).inverse();

  r.std_errors.resize(X.cols());
  r.p_values.resize(X.cols());
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    r.std_errors(j) = std::sqrt(std::max(0.0, cov(j, j)));
    const double z = r.std_errors(j) > 0 ? r.coefficients(j) / r.std_errors(j) : 0.0;
    r.p_values(j) = r.std_errors(j) > 0 ? normal_two_sided_p(z) : 1.0;
  }
  r.marginal_effects = r.coefficients;  // linear model
  r.iterations = 1;
  return r;
}

RegressionResult fit_logistic_l1(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda,
                                 const std::vector<std::string>& names) {
  if (X.rows() != y.size()) throw std::invalid_argument("fit_logistic_l1: X rows must match y");
  if (lambda < 0) throw std::invalid_argument("fit_logistic_l1: lambda must be >= 0");
  if (static_cast<Eigen::Index>(names.size()) != X.cols()) {
    throw std::invalid_argument("fit_logistic_l1: one name per column required");
  }
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y(i) != 0.0 && y(i) != 1.0) {
      throw std::invalid_argument("fit_logistic_l1: y must be binary (0/1)");
    }
  }

  std::vector<bool> penalized(names.size(), true);
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (names[j] == "intercept") penalized[j] = false;
  }

  // Lipschitz bound for the logistic gradient: ||X||^2 / (4n).
  const double lipschitz =
      (X.transpose() * X).norm() / (4.0 * static_cast<double>(X.rows())) + 1e-12;
  const double step = 1.0 / lipschitz;

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(X.cols());
  Eigen::VectorXd momentum = beta;
  double t = 1.0;

  RegressionResult r;
  r.names = names;
  r.lambda = lambda;

  constexpr int kMaxIterations = 200000;
  constexpr double kTolerance = 1e-8;
  int iter = 0;
  double last_nll = logistic_nll(X, y, beta);

  for (; iter < kMaxIterations; ++iter) {
    const Eigen::VectorXd grad = logistic_grad(X, y, momentum);
    Eigen::VectorXd next = momentum - step * grad;
    // Soft threshold, skipping unpenalized coordinates.
    const double threshold = lambda * step;
    for (Eigen::Index j = 0; j < next.size(); ++j) {
      if (!penalized[static_cast<std::size_t>(j)]) continue;
      if (next(j) > threshold) next(j) -= threshold;
      else if (next(j) < -threshold) next(j) += threshold;
      else next(j) = 0.0;
    }

    const double change = (next - beta).cwiseAbs().maxCoeff();
    const double t_next = (1.0 + std::sqrt(1.0 + 4.0 * t * t)) / 2.0;
    momentum = next + ((t - 1.0) / t_next) * (next - beta);
    t = t_next;

    // Restart the momentum when the objective worsens.
    const double nll = logistic_nll(X, y, next);
    double penalty = 0.0;
    for (Eigen::Index j = 0; j < next.size(); ++j) {
      if (penalized[static_cast<std::size_t>(j)]) penalty += lambda * std::abs(next(j));
    }
    if (nll + penalty > last_nll + 1e-12) {
      momentum = next;
      t = 1.0;
    }
    last_nll = nll + penalty;

    beta = next;
    if (change < kTolerance) {
      r.converged = true;
      break;
    }
  }
  r.iterations = iter + 1;
  if (iter >= kMaxIterations) {
    r.converged = false;
    r.diagnostics = "proximal gradient failed to converge within " +
                    std::to_string(kMaxIterations) + " iterations";
  }
  r.coefficients = beta;

  // Average predicted-probability change per unit of each column.
  const Eigen::VectorXd eta = X * beta;
  double mean_density = 0.0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) {
    const double mu = sigmoid(eta(i));
    mean_density += mu * (1.0 - mu);
  }
  mean_density /= static_cast<double>(X.rows());
  r.marginal_effects = beta * mean_density;

  // p-values from an unpenalized refit on the selected support.
  std::vector<Eigen::Index> support;
  for (Eigen::Index j = 0; j < beta.size(); ++j) {
    if (!penalized[static_cast<std::size_t>(j)] || std::abs(beta(j)) > 1e-10) support.push_back(j);
  }
  r.std_errors = Eigen::VectorXd::Zero(beta.size());
  r.p_values = Eigen::VectorXd::Ones(beta.size());
  if (!support.empty()) {
    Eigen::MatrixXd Xs(X.rows(), static_cast<Eigen::Index>(support.size()));
    for (std::size_t k = 0; k < support.size(); ++k) Xs.col(static_cast<Eigen::Index>(k)) = X.col(support[k]);
    Eigen::MatrixXd info;
    const Eigen::VectorXd refit = newton_logistic(Xs, y, &info);
    const Eigen::MatrixXd cov = info.inverse();
    for (std::size_t k = 0; k < support.size(); ++k) {
      const double se = std::sqrt(std::max(0.0, cov(static_cast<Eigen::Index>(k),
                                                    static_cast<Eigen::Index>(k))));
      r.std_errors(support[k]) = se;
      const double z = se > 0 ? refit(static_cast<Eigen::Index>(k)) / se : 0.0;
      r.p_values(support[k]) = se > 0 ? normal_two_sided_p(z) : 1.0;
    }
  }
  return r;
}

RegressionResult fit_polynomial(const std::vector<double>& x, const std::vector<double>& y,
                                int degree) {
  if (degree < 1) throw std::invalid_argument("fit_polynomial: degree must be >= 1");
  if (x.size() != y.size()) throw std::invalid_argument("fit_polynomial: x and y sizes differ");
  std::set<double> distinct(x.begin(), x.end());
  if (static_cast<int>(distinct.size()) <= degree) {
    throw std::invalid_argument("fit_polynomial: need more distinct x values than the degree");
  }

  const Eigen::Index n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd X(n, degree + 1);
  Eigen::VectorXd yv(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    yv(i) = y[static_cast<std::size_t>(i)];
    double pow = 1.0;
    for (int d = 0; d <= degree; ++d) {
      X(i, d) = pow;
      pow *= x[static_cast<std::size_t>(i)];
    }
  }
  std::vector<std::string> names;
  names.push_back("intercept");
  for (int d = 1; d <= degree; ++d) names.push_back("x^" + std::to_string(d));

  RegressionResult r = fit_ols(X, yv, names);
  if (degree >= 2) {
    std::ostringstream diag;
    diag << "quadratic term " << (r.p_values(2) < 0.05 ? "significant" : "not significant")
         << " (p=" << r.p_values(2) << ")";
    r.diagnostics = diag.str();
  }
  return r;
}

}  // namespace strategos::analytics
