#ifndef WULFF_RATE_HPP
#define WULFF_RATE_HPP

#include <array>

#include "wulff/duality.hpp"
#include "wulff/tension.hpp"

namespace wulff {

/// Result of the Legendre transform at velocity z: the conjugate tilt y with
/// grad Lambda(y) = z and the rate value I(z) = z.y - Lambda(y).
/// Outside the reachable cone |z1|+|z2| > 1 the value is +inf and no tilt
/// exists; on the cone boundary the value is the finite limit but the tilt
/// escapes to infinity (has_tilt = false in both cases).
struct RatePoint {
  std::array<double, 2> z{};
  std::array<double, 2> y{};
  double value = 0;
  bool has_tilt = false;
};

/// Log moment generating function of one walk step:
///   Lambda(y) = log((cosh y1 + cosh y2)/2).
/// Even in each coordinate, convex, Lambda(0) = 0. Overflow-safe for large
/// tilts.
double log_mgf(double y1, double y2);

/// Cramer rate function of the simple random walk, via the reduction of the
/// two-dimensional Legendre transform to one scalar monotone root:
///   sinh(y_i) = z_i C  with  C = sqrt(1 + z1^2 C^2) + sqrt(1 + z2^2 C^2).
/// On the boundary |z1|+|z2| = 1 returns the analytic limit
///   I(z) = log 4 + |z1| log|z1| + |z2| log|z2|.
RatePoint cramer(double z1, double z2);

/// Variational form of the surface tension:
///   tau(x) = inf_{gamma > 0} (lambda gamma + gamma I(x/gamma)),
/// minimized by golden section over gamma >= |x1|+|x2| plus one Newton polish
/// on the optimality condition Lambda(y(x/gamma)) = lambda. Agrees with
/// tension::tau to 1e-8; the two routes share no code below the duality pair.
double tau_variational(const Direction& x, const TemperaturePair& pair);

}  // namespace wulff

#endif
