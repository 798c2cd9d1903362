#include "wulff/bessel.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace wulff {

namespace {

// Ascending series sum_k (z/2)^(n+2k) / (k! (n+k)!) accumulated as
// exp(t_k - t_peak) with the peak term located analytically. Terms are
// positive and unimodal in k, so one upward pass with a fixed scale is exact
// log-sum-exp.
double log_i_series(long long n, double z) {
  const double L = std::log(0.5 * z);
  const double k_star =
      std::floor(std::max(0.0, 0.5 * (std::hypot((double)n, z) - (double)n)));
  const double t_peak = ((double)n + 2.0 * k_star) * L -
                        std::lgamma(k_star + 1.0) -
                        std::lgamma((double)n + k_star + 1.0);

  double t = (double)n * L - std::lgamma((double)n + 1.0);  // k = 0 term
  double acc = 0.0;
  for (long long k = 0;; ++k) {
    const double term = std::exp(t - t_peak);
    acc += term;
    if ((double)k > k_star && term < 1e-18 * acc) break;
    t += 2.0 * L - std::log(((double)k + 1.0) * ((double)n + k + 1.0));
  }
  return t_peak + std::log(acc);
}

// Large-argument expansion I_n(z) ~ e^z / sqrt(2 pi z) * sum_j c_j, with
// c_0 = 1, c_{j+1} = -c_j (mu - (2j+1)^2) / (8 z (j+1)), mu = 4 n^2.
// Truncated at the smallest term; only used where that term is < 1e-15.
double log_i_asymptotic(long long n, double z) {
  const double mu = 4.0 * (double)n * (double)n;
  double c = 1.0, sum = 1.0, prev = 1.0;
  for (int j = 0; j < 40; ++j) {
    const double q = 2.0 * j + 1.0;
    c *= -(mu - q * q) / (8.0 * z * (j + 1.0));
    if (std::fabs(c) >= prev) break;  // divergent tail reached
    sum += c;
    prev = std::fabs(c);
    if (prev < 1e-17 * std::fabs(sum)) break;
  }
  return z - 0.5 * std::log(2.0 * M_PI * z) + std::log(sum);
}

}  // namespace

double log_bessel_i(long long n, double z) {
  n = std::llabs(n);
  if (z == 0.0)
    return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  if (z >= 300.0 && 20.0 * (double)n * (double)n <= z)
    return log_i_asymptotic(n, z);
  return log_i_series(n, z);
}

}  // namespace wulff
