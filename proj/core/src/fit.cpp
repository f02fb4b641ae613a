#include "logseries/fit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace logseries {

std::string method_name(Method m) {
  switch (m) {
    case Method::Umvue: return "UMVUE";
    case Method::Mle: return "MLE";
    case Method::Lse: return "LSE";
    case Method::Wlse: return "WLSE";
    case Method::Pce: return "PCE";
  }
  throw std::logic_error("method_name: unknown method");
}

Method method_from_name(const std::string& name) {
  std::string up;
  for (char c : name) up.push_back(static_cast<char>(std::toupper(c)));
  if (up == "UMVUE") return Method::Umvue;
  if (up == "MLE") return Method::Mle;
  if (up == "LSE") return Method::Lse;
  if (up == "WLSE") return Method::Wlse;
  if (up == "PCE") return Method::Pce;
  throw std::invalid_argument("unknown method: " + name);
}

OrderedSample OrderedSample::from(const Sample& sample) {
  OrderedSample out;
  out.sorted = sample.values();
  std::sort(out.sorted.begin(), out.sorted.end());
  const int n = sample.n();
  out.positions.resize(static_cast<std::size_t>(n));
  out.weights.resize(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    out.weights[j - 1] = static_cast<double>(n + 1) * (n + 1) * (n + 2) /
                         (static_cast<double>(j) * (n - j + 1));
  }
  // A tied block shares the plotting position of its largest rank, so
  // the target for a repeated value x approaches F(x) instead of the
  // mid-block average; with per-rank positions the fitted CDF chases
  // (F(x-1)+F(x))/2 and the estimator stays biased even as n grows.
  int block_end = n - 1;
  for (int j = n - 1; j >= 0; --j) {
    if (out.sorted[j] != out.sorted[block_end]) block_end = j;
    out.positions[j] = static_cast<double>(block_end + 1) / (n + 1);
  }
  return out;
}

namespace {

constexpr double kPLo = 1e-12;
constexpr double kPHi = 1.0 - 1e-12;

// F at each sorted value, computed once per unique value.
std::vector<double> cdf_at_sorted(const std::vector<int>& sorted, double p) {
  const Param param(p);
  std::vector<double> out(sorted.size());
  double cached = -1.0;
  int cached_x = -1;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    if (sorted[j] != cached_x) {
      cached_x = sorted[j];
      cached = cdf(param, cached_x);
    }
    out[j] = cached;
  }
  return out;
}

struct MinimizeResult {
  double p;
  double objective;
  int iterations;
};

// 64-point grid pre-scan, then golden-section on the bracketing cells
// with a final parabolic refinement step. Tolerance 1e-10 in p.
MinimizeResult minimize_scalar(const std::function<double(double)>& objective) {
  constexpr int kGridPoints = 64;
  constexpr double kTol = 1e-10;
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  double grid[kGridPoints];
  for (int i = 0; i < kGridPoints; ++i) {
    const double p = (i + 1.0) / (kGridPoints + 1.0);
    grid[i] = objective(p);
    if (grid[i] < best_val) {
      best_val = grid[i];
      best = i;
    }
  }
  double a = best > 0 ? best / (kGridPoints + 1.0) : kPLo;
  double b = best < kGridPoints - 1 ? (best + 2.0) / (kGridPoints + 1.0) : kPHi;

  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = objective(x1);
  double f2 = objective(x2);
  int iterations = kGridPoints + 2;
  while (b - a > kTol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = objective(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = objective(x2);
    }
    ++iterations;
  }
  double p_min = f1 < f2 ? x1 : x2;
  double f_min = std::min(f1, f2);

  // Parabola through (a, x, b); accept the vertex if it improves.
  const double fa = objective(a);
  const double fb = objective(b);
  const double denom =
      (p_min - a) * (f_min - fb) - (p_min - b) * (f_min - fa);
  if (denom != 0.0) {
    const double num = (p_min - a) * (p_min - a) * (f_min - fb) -
                       (p_min - b) * (p_min - b) * (f_min - fa);
    const double vertex = p_min - 0.5 * num / denom;
    if (vertex > kPLo && vertex < kPHi) {
      const double fv = objective(vertex);
      ++iterations;
      if (fv < f_min) {
        p_min = vertex;
        f_min = fv;
      }
    }
  }
  return {p_min, f_min, iterations};
}

FitResult fit_least_squares(Method method, const Sample& sample) {
  if (sample.n() < 2) {
    throw std::domain_error(method_name(method) + " requires n >= 2");
  }
  const OrderedSample ordered = OrderedSample::from(sample);
  auto objective = [&](double p) {
    const std::vector<double> f = cdf_at_sorted(ordered.sorted, p);
    double total = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      double r;
      switch (method) {
        case Method::Pce:
          r = std::log(ordered.positions[j]) - std::log(f[j]);
          break;
        case Method::Wlse:
        case Method::Lse:
        default:
          r = f[j] - ordered.positions[j];
          break;
      }
      const double w = method == Method::Wlse ? ordered.weights[j] : 1.0;
      total += w * r * r;
    }
    return total;
  };
  const MinimizeResult res = minimize_scalar(objective);
  return {method, res.p, res.objective, res.iterations, true};
}

}  // namespace

FitResult fit_mle(const Sample& sample) {
  const double target = static_cast<double>(sample.t()) / sample.n();
  if (sample.t() == sample.n()) {
    // All ones: the sample mean sits at the p -> 0 limit of mean(p).
    return {Method::Mle, kPLo, 0.0, 0, false};
  }
  auto g = [&](double p) { return mean(Param(p)) - target; };
  double lo = kPLo;
  double hi = kPHi;
  double mid = 0.5;
  int iterations = 0;
  bool converged = false;
  // g is increasing in p, so the bracket is guaranteed.
  while (iterations < 200) {
    mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    ++iterations;
    if (std::abs(gm) < 1e-12 || hi - lo < 1e-14) {
      converged = true;
      break;
    }
    (gm < 0.0 ? lo : hi) = mid;
  }
  return {Method::Mle, mid, 0.0, iterations, converged};
}

FitResult fit_lse(const Sample& sample) {
  return fit_least_squares(Method::Lse, sample);
}

FitResult fit_wlse(const Sample& sample) {
  return fit_least_squares(Method::Wlse, sample);
}

FitResult fit_pce(const Sample& sample) {
  return fit_least_squares(Method::Pce, sample);
}

FitResult fit(Method method, const Sample& sample) {
  switch (method) {
    case Method::Mle: return fit_mle(sample);
    case Method::Lse: return fit_lse(sample);
    case Method::Wlse: return fit_wlse(sample);
    case Method::Pce: return fit_pce(sample);
    case Method::Umvue:
      throw std::invalid_argument("UMVUE has no parameter-level fit");
  }
  throw std::logic_error("fit: unknown method");
}

double plugin_pmf(const FitResult& fit, int x) {
  return pmf(Param(fit.p_hat), x);
}

double plugin_cdf(const FitResult& fit, int x) {
  return cdf(Param(fit.p_hat), x);
}

}  // namespace logseries
