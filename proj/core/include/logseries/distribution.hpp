#ifndef LOGSERIES_DISTRIBUTION_HPP
#define LOGSERIES_DISTRIBUTION_HPP

#include <cstdint>
#include <vector>

#include "logseries/rng.hpp"

namespace logseries {

/// Distribution parameter p, strictly inside (0,1).
///
/// Caches ln p and ln(-ln(1-p)) since every log-space mass evaluation
/// needs both.
class Param {
 public:
  explicit Param(double p);

  double value() const { return p_; }
  double log_p() const { return log_p_; }
  /// -ln(1-p), the normalizing constant of the series.
  double neg_log1mp() const { return neg_log1mp_; }
  /// ln(-ln(1-p)).
  double log_neg_log1mp() const { return log_neg_log1mp_; }

 private:
  double p_;
  double log_p_;
  double neg_log1mp_;
  double log_neg_log1mp_;
};

/// ln f(x) = x ln p - ln x - ln(-ln(1-p)). Throws std::domain_error for x < 1.
double log_pmf(const Param& param, int x);

/// f(x) = (-1/ln(1-p)) p^x / x, evaluated through log space.
double pmf(const Param& param, int x);

/// F(x) = sum_{w=1}^x f(w).
double cdf(const Param& param, int x);

/// p / ((1-p)(-ln(1-p))); the expectation the MLE score equation pins to T/n.
double mean(const Param& param);

/// Smallest x with F(x) >= u, for u in (0,1).
int quantile(const Param& param, double u);

/// Truncation point for series over the support: smallest X* whose
/// geometric tail bound f(X*) p/(1-p) drops below eps times the
/// accumulated mass.
int support_cutoff(const Param& param, double eps);

/// One draw by Kemp's chop-down inversion: subtract successive masses
/// from a uniform using the recurrence f(x+1) = f(x) p x/(x+1).
int draw(const Param& param, Rng& rng);

/// n independent draws, deterministic given the seed.
std::vector<int> sample(const Param& param, int n, std::uint64_t seed);
std::vector<int> sample(const Param& param, int n, Rng& rng);

}  // namespace logseries

#endif  // LOGSERIES_DISTRIBUTION_HPP
