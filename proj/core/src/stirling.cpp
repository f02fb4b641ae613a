#include "logseries/stirling.hpp"

#include <cmath>
#include <mutex>
#include <string>

#include "logseries/logspace.hpp"

namespace logseries {

double LogStirlingTable::log_stirling(int m, int k) {
  if (m < 0 || k < 0) throw std::domain_error("log_stirling: negative index");
  if (k > m) return kLogZero;
  {
    std::shared_lock lock(mutex_);
    if (static_cast<std::size_t>(m) < rows_.size()) {
      return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
    }
  }
  ensure_rows(m);
  std::shared_lock lock(mutex_);
  return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

std::size_t LogStirlingTable::rows() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

void LogStirlingTable::ensure_rows(int m) {
  if (static_cast<std::size_t>(m) >= row_cap_) {
    throw CapacityError("LogStirlingTable: requested row " + std::to_string(m) +
                        " exceeds cap " + std::to_string(row_cap_) +
                        "; loosen truncation or raise the cap");
  }
  std::unique_lock lock(mutex_);
  if (rows_.empty()) rows_.push_back({0.0});  // |s(0,0)| = 1
  while (rows_.size() <= static_cast<std::size_t>(m)) {
    const std::size_t row = rows_.size();
    const auto& prev = rows_[row - 1];
    std::vector<double> next(row + 1);
    next[0] = kLogZero;
    const double log_rm1 = std::log(static_cast<double>(row - 1));
    for (std::size_t k = 1; k <= row; ++k) {
      const double carry = (k <= row - 1) ? log_rm1 + prev[k] : kLogZero;
      next[k] = log_add(prev[k - 1], carry);
    }
    rows_.push_back(std::move(next));
  }
}

double sdfk_log_pmf(const SdfkParams& params, long long t,
                    LogStirlingTable& table) {
  if (t < params.n) return kLogZero;
  const double td = static_cast<double>(t);
  return log_factorial(params.n) +
         table.log_stirling(static_cast<int>(t), params.n) +
         td * params.p.log_p() - log_factorial(td) -
         params.n * params.p.log_neg_log1mp();
}

double sdfk_pmf(const SdfkParams& params, long long t,
                LogStirlingTable& table) {
  return std::exp(sdfk_log_pmf(params, t, table));
}

long long sdfk_tail_cutoff(const SdfkParams& params, double eps,
                           LogStirlingTable& table) {
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw std::domain_error("sdfk_tail_cutoff: eps must lie in (0,1)");
  }
  double total = 0.0;
  long long t = params.n;
  for (;; ++t) {
    total += sdfk_pmf(params, t, table);
    if (total > 1.0 - eps) return t;
  }
}

}  // namespace logseries
