#include <doctest.h>

#include <cmath>

#include "logseries/umvue.hpp"
#include "oracles.hpp"

using namespace logseries;

TEST_CASE("Sample validates and derives the sufficient statistic") {
  const Sample s({3, 1, 2});
  CHECK(s.n() == 3);
  CHECK(s.t() == 6);
  CHECK_THROWS_AS(Sample({}), std::domain_error);
  CHECK_THROWS_AS(Sample({1, 0}), std::domain_error);
}

TEST_CASE("single observation gives the empirical point mass") {
  LogStirlingTable table;
  for (int x : {1, 3, 5}) {
    CHECK(umvue_pmf(1, x, x, table) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(umvue_pmf(1, 5, 2, table) == 0.0);
  CHECK(umvue_pmf(1, 5, 7, table) == 0.0);
  CHECK(umvue_cdf(1, 5, 5, table) == 1.0);
  CHECK(umvue_cdf(1, 5, 4, table) == 0.0);
}

TEST_CASE("hand-computed small case n=2, t=3") {
  LogStirlingTable table;
  CHECK(umvue_pmf(2, 3, 1, table) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(umvue_pmf(2, 3, 2, table) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(umvue_pmf(2, 3, 3, table) == 0.0);
  CHECK(umvue_cdf(2, 3, 1, table) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(umvue_cdf(2, 3, 3, table) == 1.0);
}

TEST_CASE("matches the exact-integer oracle and sums to one per sample") {
  LogStirlingTable table;
  oracles::ExactStirling exact;
  for (int n : {1, 2, 3, 4}) {
    for (long long t = n; t <= 15; ++t) {
      long double total = 0.0L;
      for (int x = 1; x <= static_cast<int>(t); ++x) {
        const double got = umvue_pmf(n, t, x, table);
        const long double want = oracles::exact_umvue_pmf(exact, n, t, x);
        CHECK(got == doctest::Approx(static_cast<double>(want)).epsilon(1e-12));
        CHECK(got >= 0.0);
        total += want;
      }
      CHECK(static_cast<double>(total) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  // Log-space path also sums to one for larger t.
  double total = 0.0;
  for (int x = 1; x <= 200 - 5 + 1; ++x) total += umvue_pmf(5, 200, x, table);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("cdf estimator is nondecreasing and clamped") {
  LogStirlingTable table;
  double prev = 0.0;
  for (int x = 1; x <= 25; ++x) {
    const double v = umvue_cdf(3, 20, x, table);
    CHECK(v >= prev);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    prev = v;
  }
  CHECK(umvue_cdf(3, 20, 18, table) == 1.0);
  CHECK(umvue_cdf(3, 20, 30, table) == 1.0);
}

TEST_CASE("Rao-Blackwell unbiasedness at sampled grid points") {
  LogStirlingTable table;
  for (double pv : {0.3, 0.6}) {
    const Param p(pv);
    for (int n : {2, 3}) {
      const SdfkParams params{n, p};
      const long long cutoff = sdfk_tail_cutoff(params, 1e-12, table);
      for (int x : {1, 2, 12}) {
        double expect_f = 0.0;
        double expect_cf = 0.0;
        for (long long t = n; t <= cutoff; ++t) {
          const double g = sdfk_pmf(params, t, table);
          expect_f += umvue_pmf(n, t, x, table) * g;
          expect_cf += umvue_cdf(n, t, x, table) * g;
        }
        CHECK(expect_f == doctest::Approx(pmf(p, x)).epsilon(1e-8));
        CHECK(expect_cf == doctest::Approx(cdf(p, x)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("n=1 variance reduces to the Bernoulli indicator") {
  LogStirlingTable table;
  const Param p(0.5);
  const double f2 = pmf(p, 2);
  CHECK(f2 == doctest::Approx(0.180337).epsilon(1e-5));
  CHECK(umvue_pmf_variance(1, p, 2, table).value ==
        doctest::Approx(f2 * (1.0 - f2)).epsilon(1e-10));
  const double F1 = cdf(p, 1);
  CHECK(F1 == doctest::Approx(0.721348).epsilon(1e-5));
  CHECK(umvue_cdf_variance(1, p, 1, table).value ==
        doctest::Approx(F1 * (1.0 - F1)).epsilon(1e-10));
}

TEST_CASE("variance matches the brute-force definition over the SDFK law") {
  LogStirlingTable table;
  oracles::ExactStirling exact;
  for (double pv : {0.3, 0.6}) {
    for (int n : {2, 3}) {
      for (int x : {1, 2}) {
        // Brute force with the exact triangle, independent of the
        // implementation path.
        long double e1 = 0.0L, e2 = 0.0L;
        for (long long t = n;; ++t) {
          const long double g = oracles::exact_sdfk_pmf(exact, n, pv, t);
          const long double h = oracles::exact_umvue_pmf(exact, n, t, x);
          e1 += h * g;
          e2 += h * h * g;
          if (t > n + 10 && g < 1e-16L) break;
        }
        const double brute = static_cast<double>(e2 - e1 * e1);
        CHECK(umvue_pmf_variance(n, Param(pv), x, table, 1e-12).value ==
              doctest::Approx(brute).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("cdf variance matches brute force and vanishes in the tail") {
  LogStirlingTable table;
  oracles::ExactStirling exact;
  const int n = 2;
  const double pv = 0.3;
  const int x = 2;
  long double e1 = 0.0L, e2 = 0.0L;
  for (long long t = n;; ++t) {
    const long double g = oracles::exact_sdfk_pmf(exact, n, pv, t);
    const long double h = oracles::exact_umvue_cdf(exact, n, t, x);
    e1 += h * g;
    e2 += h * h * g;
    if (t > n + 10 && g < 1e-16L) break;
  }
  const double brute = static_cast<double>(e2 - e1 * e1);
  CHECK(umvue_cdf_variance(n, Param(pv), x, table, 1e-12).value ==
        doctest::Approx(brute).epsilon(1e-8));

  // F_hat is identically 1 far in the tail; the residual is truncation
  // noise of order eps.
  CHECK(umvue_cdf_variance(2, Param(0.3), 200, table, 1e-12).value < 1e-10);
}
