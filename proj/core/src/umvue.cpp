#include "logseries/umvue.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "logseries/logspace.hpp"

namespace logseries {

Sample::Sample(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::domain_error("Sample: empty");
  for (int v : values_) {
    if (v < 1) throw std::domain_error("Sample: every value must be >= 1");
  }
  t_ = std::accumulate(values_.begin(), values_.end(), 0LL);
}

namespace {

double log_umvue_pmf(int n, long long t, int x, LogStirlingTable& table) {
  // Nonzero support is x = 1..t-n+1: the other n-1 observations must
  // sum to t-x >= n-1.
  if (x < 1 || t - x < n - 1) return kLogZero;
  const double td = static_cast<double>(t);
  return -std::log(static_cast<double>(n)) -
         std::log(static_cast<double>(x)) +
         table.log_stirling(static_cast<int>(t - x), n - 1) -
         table.log_stirling(static_cast<int>(t), n) + log_factorial(td) -
         log_factorial(td - x);
}

}  // namespace

double umvue_pmf(int n, long long t, int x, LogStirlingTable& table) {
  if (n < 1 || t < n) throw std::domain_error("umvue_pmf: need t >= n >= 1");
  if (x < 1) throw std::domain_error("umvue_pmf: x must be >= 1");
  double v = std::exp(log_umvue_pmf(n, t, x, table));
  return v < 1.0 ? v : 1.0;
}

double umvue_pmf(const Sample& sample, int x, LogStirlingTable& table) {
  return umvue_pmf(sample.n(), sample.t(), x, table);
}

double umvue_cdf(int n, long long t, int x, LogStirlingTable& table) {
  if (n < 1 || t < n) throw std::domain_error("umvue_cdf: need t >= n >= 1");
  if (x < 1) throw std::domain_error("umvue_cdf: x must be >= 1");
  if (x >= t - n + 1) return 1.0;
  double total = 0.0;
  for (int w = 1; w <= x; ++w) {
    total += umvue_pmf(n, t, w, table);
  }
  return std::clamp(total, 0.0, 1.0);
}

double umvue_cdf(const Sample& sample, int x, LogStirlingTable& table) {
  return umvue_cdf(sample.n(), sample.t(), x, table);
}

namespace {

// Var = E[h^2] - E[h]^2 over the truncated SDFK law, for h(t) either the
// pmf or the cdf estimator.
template <typename Estimator>
Variance sdfk_variance(int n, const Param& p, double eps,
                       LogStirlingTable& table, long long t_min,
                       Estimator est) {
  if (n < 1) throw std::domain_error("variance: n must be >= 1");
  if (!(eps > 0.0)) throw std::domain_error("variance: eps must be > 0");
  const SdfkParams params{n, p};
  const long long t_max = sdfk_tail_cutoff(params, eps, table);
  double first = 0.0;   // E[h]
  double second = 0.0;  // E[h^2]
  for (long long t = t_min; t <= t_max; ++t) {
    const double g = sdfk_pmf(params, t, table);
    const double h = est(t);
    first += h * g;
    second += h * h * g;
  }
  const double var = second - first * first;
  if (var >= 0.0) return {var, false};
  // Tiny negative from cancellation; flag when it is not tiny relative
  // to the expectations involved.
  const bool bad = -var > 1e-6 * std::max(second, first * first);
  return {0.0, bad};
}

}  // namespace

Variance umvue_pmf_variance(int n, const Param& p, int x,
                            LogStirlingTable& table, double eps) {
  if (x < 1) throw std::domain_error("variance: x must be >= 1");
  // Summand is first nonzero at t = x + n - 1.
  const long long t_min = std::max<long long>(x + n - 1, n);
  return sdfk_variance(n, p, eps, table, t_min, [&](long long t) {
    return umvue_pmf(n, t, x, table);
  });
}

Variance umvue_cdf_variance(int n, const Param& p, int x,
                            LogStirlingTable& table, double eps) {
  if (x < 1) throw std::domain_error("variance: x must be >= 1");
  // F_hat(x; t) equals 1 for t <= x + n - 1, so the sum starts at t = n.
  return sdfk_variance(n, p, eps, table, n, [&](long long t) {
    return umvue_cdf(n, t, x, table);
  });
}

}  // namespace logseries
