#ifndef LOGSERIES_LOGSPACE_HPP
#define LOGSERIES_LOGSPACE_HPP

#include <cmath>
#include <limits>

namespace logseries {

inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

/// log(exp(a) + exp(b)) without leaving log space.
inline double log_add(double a, double b) {
  if (a == kLogZero) return b;
  if (b == kLogZero) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

/// ln m! via lgamma.
inline double log_factorial(double m) { return std::lgamma(m + 1.0); }

}  // namespace logseries

#endif  // LOGSERIES_LOGSPACE_HPP
