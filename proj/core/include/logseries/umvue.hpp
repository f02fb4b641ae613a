#ifndef LOGSERIES_UMVUE_HPP
#define LOGSERIES_UMVUE_HPP

#include <vector>

#include "logseries/stirling.hpp"

namespace logseries {

/// An observed sample of positive integers with its sufficient
/// statistic T = sum of the values.
class Sample {
 public:
  explicit Sample(std::vector<int> values);

  const std::vector<int>& values() const { return values_; }
  int n() const { return static_cast<int>(values_.size()); }
  long long t() const { return t_; }

 private:
  std::vector<int> values_;
  long long t_;
};

/// UMVUE of f(x) given (n, t):
///   (1/(n x)) |s(t-x,n-1)| / |s(t,n)| * t!/(t-x)!
/// for x = 1..t-n+1, zero outside that range.
double umvue_pmf(int n, long long t, int x, LogStirlingTable& table);
double umvue_pmf(const Sample& sample, int x, LogStirlingTable& table);

/// UMVUE of F(x): cumulative sum of umvue_pmf over w = 1..x, clamped
/// to [0,1]; equals 1 once x >= t-n+1.
double umvue_cdf(int n, long long t, int x, LogStirlingTable& table);
double umvue_cdf(const Sample& sample, int x, LogStirlingTable& table);

/// Variance value with an ill-conditioning flag: the two-expectation
/// difference is clamped at zero, and the flag is set when the clamp
/// absorbed more than 1e-6 relative cancellation.
struct Variance {
  double value;
  bool ill_conditioned;
};

/// Exact Var(f_hat(x)) under SDFK(n,p), summed over t up to the eps
/// tail cutoff.
Variance umvue_pmf_variance(int n, const Param& p, int x,
                            LogStirlingTable& table, double eps = 1e-10);

/// Exact Var(F_hat(x)) under SDFK(n,p).
Variance umvue_cdf_variance(int n, const Param& p, int x,
                            LogStirlingTable& table, double eps = 1e-10);

}  // namespace logseries

#endif  // LOGSERIES_UMVUE_HPP
