#include <benchmark/benchmark.h>

#include <random>

#include "strategos/analytics/regression.h"

namespace {

void BM_FitOls(benchmark::State& state) {
  const int n = 500, p = 10;
  std::mt19937_64 gen(7);
  std::normal_distribution<double> noise(0.0, 1.0);
  Eigen::MatrixXd X(n, p);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    X(i, 0) = 1.0;
    for (int j = 1; j < p; ++j) X(i, j) = noise(gen);
    y(i) = X(i, 1) * 2.0 + noise(gen);
  }
  std::vector<std::string> names;
  names.push_back("intercept");
  for (int j = 1; j < p; ++j) names.push_back("x" + std::to_string(j));
  for (auto _ : state) {
    const auto r = strategos::analytics::fit_ols(X, y, names);
    benchmark::DoNotOptimize(r.coefficients.data());
  }
}
BENCHMARK(BM_FitOls);

void BM_FitLogisticL1(benchmark::State& state) {
  const int n = 500, p = 10;
  std::mt19937_64 gen(7);
  std::normal_distribution<double> noise(0.0, 1.0);
  Eigen::MatrixXd X(n, p);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    X(i, 0) = 1.0;
    for (int j = 1; j < p; ++j) X(i, j) = noise(gen);
    y(i) = X(i, 1) + noise(gen) > 0 ? 1.0 : 0.0;
  }
  std::vector<std::string> names;
  names.push_back("intercept");
  for (int j = 1; j < p; ++j) names.push_back("x" + std::to_string(j));
  for (auto _ : state) {
    const auto r = strategos::analytics::fit_logistic_l1(X, y, 0.01, names);
    benchmark::DoNotOptimize(r.coefficients.data());
  }
}
BENCHMARK(BM_FitLogisticL1)->Unit(benchmark::kMillisecond);

}  // namespace
