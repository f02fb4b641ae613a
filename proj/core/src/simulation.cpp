#include "logseries/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <string>
#include <stdexcept>
#include <thread>
#include <vector>

namespace logseries {

void StudyConfig::validate() const {
  Param check(p_true);  // throws outside (0,1)
  (void)check;
  if (x_eval < 1) throw std::invalid_argument("x_eval must be >= 1");
  if (replications < 1) throw std::invalid_argument("replications must be >= 1");
  if (sample_sizes.empty()) throw std::invalid_argument("no sample sizes");
  if (methods.empty()) throw std::invalid_argument("no methods");
  const bool needs_order_stats =
      std::any_of(methods.begin(), methods.end(), [](Method m) {
        return m == Method::Lse || m == Method::Wlse || m == Method::Pce;
      });
  const int min_n = needs_order_stats ? 2 : 1;
  for (int n : sample_sizes) {
    if (n < min_n) {
      throw std::invalid_argument("sample sizes must be >= " +
                                  std::to_string(min_n) +
                                  " for the requested methods");
    }
  }
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw std::invalid_argument("eps must lie in (0,1)");
  }
  if (threads < 0) throw std::invalid_argument("threads must be >= 0");
}

namespace {

struct Estimates {
  double pmf_hat;
  double cdf_hat;
  double p_hat;  // NaN for UMVUE
  bool failed;
};

// One replication: one shared sample, every method evaluated on it.
std::vector<Estimates> run_replication(const StudyConfig& config, int n,
                                       int rep, LogStirlingTable& table) {
  const Param p(config.p_true);
  Rng rng = Rng::substream(config.seed, static_cast<std::uint64_t>(n),
                           static_cast<std::uint64_t>(rep));
  const Sample sample(logseries::sample(p, n, rng));
  std::vector<Estimates> out;
  out.reserve(config.methods.size());
  for (Method m : config.methods) {
    if (m == Method::Umvue) {
      out.push_back({umvue_pmf(sample, config.x_eval, table),
                     umvue_cdf(sample, config.x_eval, table),
                     std::numeric_limits<double>::quiet_NaN(), false});
    } else {
      const FitResult f = fit(m, sample);
      out.push_back({plugin_pmf(f, config.x_eval), plugin_cdf(f, config.x_eval),
                     f.p_hat, !f.converged});
    }
  }
  return out;
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  if (threads == 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads == 0) threads = 1;
  }
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

SimulationResult run_study(const StudyConfig& config, LogStirlingTable& table) {
  config.validate();
  const Param p(config.p_true);
  const double true_pmf = pmf(p, config.x_eval);
  const double true_cdf = cdf(p, config.x_eval);

  SimulationResult result;
  for (int n : config.sample_sizes) {
    std::vector<std::vector<Estimates>> reps(
        static_cast<std::size_t>(config.replications));
    parallel_for(config.replications, config.threads, [&](int r) {
      reps[static_cast<std::size_t>(r)] = run_replication(config, n, r, table);
    });

    for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
      CellResult cell{config.methods[mi], n, 0, 0, 0, 0, 0, 0};
      double p_hat_sum = 0.0;
      // Replication-order reduction keeps results worker-count independent.
      for (const auto& rep : reps) {
        const Estimates& e = rep[mi];
        cell.mse_pmf += (e.pmf_hat - true_pmf) * (e.pmf_hat - true_pmf);
        cell.mse_cdf += (e.cdf_hat - true_cdf) * (e.cdf_hat - true_cdf);
        cell.bias_pmf += e.pmf_hat - true_pmf;
        cell.bias_cdf += e.cdf_hat - true_cdf;
        p_hat_sum += e.p_hat;
        cell.failure_count += e.failed ? 1 : 0;
      }
      const double r = config.replications;
      cell.mse_pmf /= r;
      cell.mse_cdf /= r;
      cell.bias_pmf /= r;
      cell.bias_cdf /= r;
      cell.mean_estimate = p_hat_sum / r;
      result.cells.push_back(cell);
    }
  }
  return result;
}

std::vector<TrueMseRow> true_mse_umvue(const StudyConfig& config,
                                       LogStirlingTable& table) {
  config.validate();
  const Param p(config.p_true);
  std::vector<TrueMseRow> rows;
  rows.reserve(config.sample_sizes.size());
  for (int n : config.sample_sizes) {
    rows.push_back(
        {n, umvue_pmf_variance(n, p, config.x_eval, table, config.eps).value,
         umvue_cdf_variance(n, p, config.x_eval, table, config.eps).value});
  }
  return rows;
}

}  // namespace logseries
