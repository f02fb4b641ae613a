#include "logseries/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace logseries {

Param::Param(double p) : p_(p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("Param: p must lie strictly in (0,1)");
  }
  log_p_ = std::log(p);
  neg_log1mp_ = -std::log1p(-p);
  log_neg_log1mp_ = std::log(neg_log1mp_);
}

namespace {

void check_support(int x) {
  if (x < 1) throw std::domain_error("support point x must be >= 1");
}

}  // namespace

double log_pmf(const Param& param, int x) {
  check_support(x);
  return x * param.log_p() - std::log(static_cast<double>(x)) -
         param.log_neg_log1mp();
}

double pmf(const Param& param, int x) { return std::exp(log_pmf(param, x)); }

double cdf(const Param& param, int x) {
  check_support(x);
  // f(w+1) = f(w) * p * w/(w+1); accumulate directly, term underflow is
  // harmless.
  double term = pmf(param, 1);
  double total = term;
  for (int w = 1; w < x; ++w) {
    term *= param.value() * w / (w + 1.0);
    total += term;
  }
  return total < 1.0 ? total : 1.0;
}

double mean(const Param& param) {
  return param.value() / ((1.0 - param.value()) * param.neg_log1mp());
}

int quantile(const Param& param, double u) {
  if (!(u > 0.0) || !(u < 1.0)) {
    throw std::domain_error("quantile: u must lie in (0,1)");
  }
  double term = pmf(param, 1);
  double total = term;
  int x = 1;
  while (total < u) {
    term *= param.value() * x / (x + 1.0);
    total += term;
    ++x;
    if (term == 0.0) break;  // u within roundoff of 1
  }
  return x;
}

int support_cutoff(const Param& param, double eps) {
  const double ratio = param.value() / (1.0 - param.value());
  double term = pmf(param, 1);
  double total = term;
  int x = 1;
  while (term * ratio >= eps * total) {
    term *= param.value() * x / (x + 1.0);
    total += term;
    ++x;
  }
  return x;
}

int draw(const Param& param, Rng& rng) {
  double u = rng.uniform();
  double mass = pmf(param, 1);
  int x = 1;
  while (u > mass && mass > 0.0) {
    u -= mass;
    mass *= param.value() * x / (x + 1.0);
    ++x;
  }
  return x;
}

std::vector<int> sample(const Param& param, int n, Rng& rng) {
  if (n < 1) throw std::domain_error("sample: n must be >= 1");
  std::vector<int> out(static_cast<std::size_t>(n));
  for (auto& v : out) v = draw(param, rng);
  return out;
}

std::vector<int> sample(const Param& param, int n, std::uint64_t seed) {
  Rng rng(seed);
  return sample(param, n, rng);
}

}  // namespace logseries
