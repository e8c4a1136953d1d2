#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rgl/bounds.hpp"
#include "rgl/rng.hpp"

using namespace rgl;

TEST_CASE("bound calculators") {
  CHECK(chernoff_lower_tail(1.0, 100, 0.5) == doctest::Approx(std::exp(-25.0)));
  CHECK(chernoff_upper_tail(0.5, 100, 0.5) ==
        doctest::Approx(std::exp(-0.25 * 50 / 3.0)));
  CHECK_THROWS_AS(chernoff_lower_tail(0.0, 10, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(chernoff_upper_tail(1.0, 10, 0.5), std::invalid_argument);
  CHECK(chebyshev_bound(2.0) == doctest::Approx(0.25));
  CHECK(trivial_tail(100, 0.1, 20) ==
        doctest::Approx(std::pow(std::exp(1.0) * 10 / 20, 20)));
  CHECK(tail_bound(BoundKind::chebyshev, {.a = 4.0}) == doctest::Approx(1.0 / 16));
}

TEST_CASE("exact binomials") {
  CHECK(binomial_exact(0, 0) == 1);
  CHECK(binomial_exact(10, 3) == 120);
  CHECK(binomial_exact(60, 30) == 118264581564861424ULL);
  CHECK_THROWS_AS(binomial_exact(70, 2), std::invalid_argument);
  // the big-integer oracle agrees where both apply
  for (int n = 1; n <= 40; ++n) {
    for (int k = 0; k <= n; k += 3) {
      CHECK(oracle::binomial_big(n, k).compare(oracle::BigNat(binomial_exact(n, k))) == 0);
    }
  }
}

TEST_CASE("coefficient estimates hold exactly on a dense subrange") {
  // the acceptance suite sweeps all 1 <= x <= k <= n <= 60; here a
  // fast slice guards the three inequalities during development
  for (int n = 1; n <= 24; ++n) {
    for (int k = 1; k <= n; ++k) {
      const oracle::BigNat c = oracle::binomial_big(n, k);
      // (n/k)^k <= C(n,k): n^k <= C * k^k
      CHECK(oracle::BigNat::pow(n, k).compare(c.times(oracle::BigNat::pow(k, k))) <= 0);
      // C(n,k) <= (en/k)^k via a rational e lower bound
      const std::uint64_t e_num = 2718281828459045235ULL;
      const std::uint64_t e_den = 1000000000000000000ULL;
      oracle::BigNat lhs = c.times(oracle::BigNat::pow(k, k));
      for (int i = 0; i < k; ++i) lhs = lhs.times(e_den);
      oracle::BigNat rhs = oracle::BigNat::pow(n, k);
      for (int i = 0; i < k; ++i) rhs = rhs.times(e_num);
      CHECK(lhs.compare(rhs) <= 0);
      for (int x = 1; x <= k; ++x) {
        // C(n-x,k-x) * n^x <= C(n,k) * k^x
        const oracle::BigNat left =
            oracle::binomial_big(n - x, k - x).times(oracle::BigNat::pow(n, x));
        const oracle::BigNat right = c.times(oracle::BigNat::pow(k, x));
        CHECK(left.compare(right) <= 0);
        // C(n-x,k) / C(n,k) <= exp(-kx/n), safely inside long double
        const long double ratio =
            k <= n - x ? static_cast<long double>(binomial_exact(n - x, k)) /
                             static_cast<long double>(binomial_exact(n, k))
                       : 0.0L;
        CHECK(ratio <= std::exp(-static_cast<long double>(k) * x / n));
      }
    }
  }
}

TEST_CASE("empirical binomial tails stay under their bounds") {
  // geometric-hop sampler: number of successes among n Bernoulli(p)
  const auto sample_binomial = [](std::uint64_t n, double p, Rng& rng) {
    std::uint64_t successes = 0, pos = 0;
    while (true) {
      const std::uint64_t gap = rng.geometric(p);
      if (gap == Rng::kNoSuccess || gap >= n - pos) break;
      pos += gap + 1;
      ++successes;
      if (pos >= n) break;
    }
    return successes;
  };

  const int samples = 200000;
  struct GridPoint {
    std::uint64_t n;
    double p, a;
  };
  for (const GridPoint& point : {GridPoint{2000, 0.05, 0.3}, GridPoint{500, 0.2, 0.4}}) {
    Rng rng(derive_seed(31337, static_cast<std::uint64_t>(point.n)));
    const double np = static_cast<double>(point.n) * point.p;
    int upper_hits = 0, lower_hits = 0, trivial_hits = 0;
    const std::uint64_t trivial_k = static_cast<std::uint64_t>(2.0 * np);
    for (int s = 0; s < samples; ++s) {
      const std::uint64_t x = sample_binomial(point.n, point.p, rng);
      upper_hits += static_cast<double>(x) > (1.0 + point.a) * np;
      lower_hits += static_cast<double>(x) < (1.0 - point.a) * np;
      trivial_hits += x >= trivial_k;
    }
    const double upper_bound = chernoff_upper_tail(point.a, point.n, point.p);
    const double lower_bound = chernoff_lower_tail(point.a, point.n, point.p);
    const double trivial_bound =
        trivial_tail(static_cast<double>(point.n), point.p, trivial_k);
    CHECK(static_cast<double>(upper_hits) / samples <= upper_bound);
    CHECK(static_cast<double>(lower_hits) / samples <= lower_bound);
    CHECK(static_cast<double>(trivial_hits) / samples <= trivial_bound);
  }
}
