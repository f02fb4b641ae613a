#ifndef LOGSERIES_FIT_HPP
#define LOGSERIES_FIT_HPP

#include <string>
#include <vector>

#include "logseries/umvue.hpp"

namespace logseries {

enum class Method { Umvue, Mle, Lse, Wlse, Pce };

std::string method_name(Method m);
/// Parses "UMVUE", "MLE", "LSE", "WLSE", "PCE" (case-insensitive);
/// throws std::invalid_argument otherwise.
Method method_from_name(const std::string& name);

struct FitResult {
  Method method;
  double p_hat;
  double objective_value;  // 0 for MLE
  int iterations;
  bool converged;
};

/// Sample sorted ascending with plotting positions j/(n+1) and weights
/// (n+1)^2 (n+2) / (j (n-j+1)). Ties keep repeated entries with
/// distinct ranks for the weights, but every member of a tied block
/// takes the block's largest-rank plotting position; see
/// OrderedSample::from for why.
struct OrderedSample {
  std::vector<int> sorted;
  std::vector<double> positions;
  std::vector<double> weights;

  static OrderedSample from(const Sample& sample);
};

/// Root of mean(p) = T/n on (0,1) by bracketed bisection. A sample of
/// all ones has no interior root; it is reported at the bracket edge
/// with converged = false.
FitResult fit_mle(const Sample& sample);

/// Minimizes sum_j [F(x_{j:n}; p) - j/(n+1)]^2.
FitResult fit_lse(const Sample& sample);

/// Minimizes sum_j w_j [F(x_{j:n}; p) - j/(n+1)]^2.
FitResult fit_wlse(const Sample& sample);

/// Minimizes sum_j [ln(j/(n+1)) - ln F(x_{j:n}; p)]^2.
FitResult fit_pce(const Sample& sample);

FitResult fit(Method method, const Sample& sample);

/// Plug-in estimators: f and F evaluated at p_hat.
double plugin_pmf(const FitResult& fit, int x);
double plugin_cdf(const FitResult& fit, int x);

}  // namespace logseries

#endif  // LOGSERIES_FIT_HPP
