#pragma once

#include <cstdint>

namespace rgl {

// Closed-form tail and coefficient estimates used by the experiment
// suite to put provable ceilings next to measured frequencies. All
// arguments are validated; out-of-range values throw invalid_argument.

// Pr[Bin(n,p) < (1-a)np] < exp(-a^2 np / 2), a > 0
double chernoff_lower_tail(double a, double n, double p);

// Pr[Bin(n,p) > (1+a)np] < exp(-a^2 np / 3), 0 < a < 1
double chernoff_upper_tail(double a, double n, double p);

// Pr[Bin(n,p) >= k] <= (e n p / k)^k, integer k >= 1
double trivial_tail(double n, double p, double k);

// Pr[|X - mu| >= a sigma] <= 1/a^2, a > 0
double chebyshev_bound(double a);

// (n/k)^k <= C(n,k) <= (en/k)^k
double binom_lower_estimate(double n, double k);
double binom_upper_estimate(double n, double k);

// C(n-x, k-x) / C(n,k) <= (k/n)^x
double subset_ratio_bound(double n, double k, double x);

// C(n-x, k) / C(n,k) <= exp(-kx/n)
double shift_ratio_bound(double n, double k, double x);

enum class BoundKind {
  chernoff_lower,
  chernoff_upper,
  trivial,
  chebyshev,
  binom_lower,
  binom_upper,
  subset_ratio,
  shift_ratio
};

struct BoundParams {
  double a = 0;
  double n = 0;
  double p = 0;
  double k = 0;
  double x = 0;
};

double tail_bound(BoundKind kind, const BoundParams& params);

// Exact binomial coefficient for n <= 62 (fits in 64 bits up to there).
std::uint64_t binomial_exact(int n, int k);

}  // namespace rgl
