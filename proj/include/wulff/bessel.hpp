#ifndef WULFF_BESSEL_HPP
#define WULFF_BESSEL_HPP

namespace wulff {

/// log I_n(z) for integer order (I_{-n} = I_n) and z >= 0, computed entirely
/// in the log domain so that integrands assembled from products of large-order
/// Bessel factors never overflow. Uses the ascending series with a log-sum-exp
/// accumulation when the series is short, and the large-argument expansion of
/// the exponential envelope when z dominates the order.
/// Returns -inf for z = 0, n != 0.
double log_bessel_i(long long n, double z);

}  // namespace wulff

#endif
