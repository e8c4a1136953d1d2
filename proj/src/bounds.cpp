#include "rgl/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace rgl {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

double chernoff_lower_tail(double a, double n, double p) {
  require(a > 0.0, "chernoff lower tail needs a > 0");
  require(n >= 0.0 && p >= 0.0 && p <= 1.0, "bad binomial parameters");
  return std::exp(-a * a * n * p / 2.0);
}

double chernoff_upper_tail(double a, double n, double p) {
  require(a > 0.0 && a < 1.0, "chernoff upper tail needs 0 < a < 1");
  require(n >= 0.0 && p >= 0.0 && p <= 1.0, "bad binomial parameters");
  return std::exp(-a * a * n * p / 3.0);
}

double trivial_tail(double n, double p, double k) {
  require(k >= 1.0, "trivial tail needs k >= 1");
  require(n >= 0.0 && p >= 0.0 && p <= 1.0, "bad binomial parameters");
  return std::pow(std::exp(1.0) * n * p / k, k);
}

double chebyshev_bound(double a) {
  require(a > 0.0, "chebyshev needs a > 0");
  return 1.0 / (a * a);
}

double binom_lower_estimate(double n, double k) {
  require(k >= 1.0 && k <= n, "needs 1 <= k <= n");
  return std::pow(n / k, k);
}

double binom_upper_estimate(double n, double k) {
  require(k >= 1.0 && k <= n, "needs 1 <= k <= n");
  return std::pow(std::exp(1.0) * n / k, k);
}

double subset_ratio_bound(double n, double k, double x) {
  require(x >= 1.0 && x <= k && k <= n, "needs 1 <= x <= k <= n");
  return std::pow(k / n, x);
}

double shift_ratio_bound(double n, double k, double x) {
  require(x >= 1.0 && x <= k && k <= n, "needs 1 <= x <= k <= n");
  return std::exp(-k * x / n);
}

double tail_bound(BoundKind kind, const BoundParams& params) {
  switch (kind) {
    case BoundKind::chernoff_lower:
      return chernoff_lower_tail(params.a, params.n, params.p);
    case BoundKind::chernoff_upper:
      return chernoff_upper_tail(params.a, params.n, params.p);
    case BoundKind::trivial:
      return trivial_tail(params.n, params.p, params.k);
    case BoundKind::chebyshev:
      return chebyshev_bound(params.a);
    case BoundKind::binom_lower:
      return binom_lower_estimate(params.n, params.k);
    case BoundKind::binom_upper:
      return binom_upper_estimate(params.n, params.k);
    case BoundKind::subset_ratio:
      return subset_ratio_bound(params.n, params.k, params.x);
    case BoundKind::shift_ratio:
      return shift_ratio_bound(params.n, params.k, params.x);
  }
  throw std::invalid_argument("unknown bound kind");
}

std::uint64_t binomial_exact(int n, int k) {
  require(n >= 0 && k >= 0 && k <= n && n <= 62, "binomial_exact needs 0 <= k <= n <= 62");
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // multiply first, divide by i afterwards: the running value is always
    // a binomial coefficient, so the division is exact
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

}  // namespace rgl
