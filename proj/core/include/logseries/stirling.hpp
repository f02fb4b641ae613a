#ifndef LOGSERIES_STIRLING_HPP
#define LOGSERIES_STIRLING_HPP

#include <cstddef>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "logseries/distribution.hpp"

namespace logseries {

/// Raised when a table request exceeds the configured row cap; callers
/// should loosen truncation or raise the cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Natural logs of unsigned Stirling numbers of the first kind |s(m,k)|,
/// built row by row from the recurrence
///   |s(m,k)| = |s(m-1,k-1)| + (m-1)|s(m-1,k)|
/// in log space. Zeros (k > m, or k = 0 with m >= 1) are -infinity.
///
/// Reads are concurrent; growth takes the writer lock, so one table can
/// be shared across simulation workers.
class LogStirlingTable {
 public:
  explicit LogStirlingTable(std::size_t row_cap = 50000) : row_cap_(row_cap) {}

  /// ln|s(m,k)|; grows the table to row m on demand.
  double log_stirling(int m, int k);

  std::size_t rows() const;
  std::size_t row_cap() const { return row_cap_; }

 private:
  void ensure_rows(int m);

  std::size_t row_cap_;
  std::vector<std::vector<double>> rows_;  // rows_[m][k], k = 0..m
  mutable std::shared_mutex mutex_;
};

/// Parameters of the law of T = X_1 + ... + X_n, the Stirling
/// distribution of the first kind.
struct SdfkParams {
  int n;
  Param p;

  SdfkParams(int n_, Param p_) : n(n_), p(p_) {
    if (n < 1) throw std::domain_error("SdfkParams: n must be >= 1");
  }
};

/// ln P(T = t) = ln n! + ln|s(t,n)| + t ln p - ln t! - n ln(-ln(1-p)).
double sdfk_log_pmf(const SdfkParams& params, long long t,
                    LogStirlingTable& table);

/// P(T = t); zero for t < n.
double sdfk_pmf(const SdfkParams& params, long long t, LogStirlingTable& table);

/// Smallest T* with accumulated SDFK mass over t = n..T* exceeding 1 - eps.
long long sdfk_tail_cutoff(const SdfkParams& params, double eps,
                           LogStirlingTable& table);

}  // namespace logseries

#endif  // LOGSERIES_STIRLING_HPP
