#ifndef LOGSERIES_SIMULATION_HPP
#define LOGSERIES_SIMULATION_HPP

#include <cstdint>
#include <vector>

#include "logseries/fit.hpp"

namespace logseries {

/// Monte Carlo study configuration. Defaults follow the estimator
/// comparison setup: p = 0.6, x = 12, 1000 replications.
struct StudyConfig {
  double p_true = 0.6;
  int x_eval = 12;
  std::vector<int> sample_sizes = {20, 50, 100, 200, 500};
  int replications = 1000;
  std::uint64_t seed = 1;
  double eps = 1e-10;
  std::vector<Method> methods = {Method::Umvue, Method::Mle, Method::Lse,
                                 Method::Wlse, Method::Pce};
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;  // throws std::invalid_argument
};

/// One (method, sample size) cell of the study. mean_estimate is the
/// average p_hat for parameter-level methods, NaN for UMVUE.
struct CellResult {
  Method method;
  int n;
  double mse_pmf;
  double mse_cdf;
  double bias_pmf;
  double bias_cdf;
  double mean_estimate;
  long long failure_count;
};

struct SimulationResult {
  std::vector<CellResult> cells;  // ordered by (sample size, method)
};

/// Runs the paired study: one sample per (n, replication) sub-stream,
/// every requested method evaluated on it. Accumulation is in
/// replication order, so results do not depend on the worker count.
SimulationResult run_study(const StudyConfig& config, LogStirlingTable& table);

/// Exact UMVUE mean squared errors (= variances, by unbiasedness) per
/// sample size.
struct TrueMseRow {
  int n;
  double mse_pmf;
  double mse_cdf;
};

std::vector<TrueMseRow> true_mse_umvue(const StudyConfig& config,
                                       LogStirlingTable& table);

}  // namespace logseries

#endif  // LOGSERIES_SIMULATION_HPP
