#ifndef WULFF_MONTECARLO_HPP
#define WULFF_MONTECARLO_HPP

#include <cstdint>

#include "wulff/green.hpp"

namespace wulff {

/// Counter-based random stream (Philox 4x32-10). Each (seed, sample index)
/// pair names an independent stream; draws depend only on (seed, sample,
/// draw index), never on shared state, so sample partitioning across workers
/// cannot change any value.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t sample_index);

  std::uint64_t next_u64();
  /// Uniform in (0,1), centered on the 2^-53 grid.
  double next_double();

 private:
  void refill();

  std::uint32_t key_[2];
  std::uint64_t sample_;
  std::uint64_t draw_ = 0;
  std::uint32_t buf_[4];
  int avail_ = 0;
};

struct McEstimate {
  enum class Statistic { visits, hit };

  double mean = 0;
  double std_error = 0;  // sample standard deviation / sqrt(n_samples)
  long long n_samples = 0;
  std::uint64_t seed = 0;
  Statistic statistic = Statistic::visits;
  long long n_truncated = 0;  // walks cut at the hard 1e8-step liveness bound
};

/// Unbiased estimator of E[V_m(x)]: each sample draws a geometric lifetime
/// (P(xi >= k) = m^k, inverse-CDF from a single uniform), walks it, and
/// counts visits to x including time 0. Per-sample counts are integers, so
/// the accumulated moments are exact and independent of worker count.
/// Requires 0 <= m < 1.
McEstimate simulate_visits(LatticePoint x, double m, long long n_samples,
                           std::uint64_t seed);

/// Bernoulli estimator of E[e^{-lambda H(x)}] = P(walk reaches x before the
/// kill), x != 0.
McEstimate simulate_hit(LatticePoint x, double m, long long n_samples,
                        std::uint64_t seed);

}  // namespace wulff

#endif
