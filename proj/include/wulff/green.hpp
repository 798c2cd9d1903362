#ifndef WULFF_GREEN_HPP
#define WULFF_GREEN_HPP

#include <string>
#include <vector>

#include "wulff/duality.hpp"

namespace wulff {

struct LatticePoint {
  long long x1 = 0;
  long long x2 = 0;
};

enum class GreenMethod { series, quadrature, bessel };

const char* green_method_name(GreenMethod method);

/// One evaluation of the killed-walk Green function G(x) = E[V_m(x)], tagged
/// with the method that produced it and an estimate of its absolute error.
struct GreenValue {
  double value = 0;
  GreenMethod method = GreenMethod::series;
  double err_est = 0;
  std::string params;
};

/// Truncated generating function sum_{k<=k_max} m^k P(S_k = x), with the step
/// distributions built by exact dynamic-programming convolution on a box of
/// radius k_max. err_est is the geometric tail bound m^(k_max+1)/(1-m).
/// Requires 0 <= m < 1 and k_max >= |x1|+|x2|.
GreenValue green_series(LatticePoint x, double m, int k_max);

/// Batched form of green_series: the same single DP sweep accumulates G on
/// the whole window |x|_inf <= radius. Much cheaper than per-site calls when
/// a grid of values is needed.
struct GreenWindow {
  int radius = 0;
  int k_max = 0;
  double m = 0;
  double err_est = 0;
  std::vector<double> values;  // (2*radius+1)^2, row-major over x2 then x1

  double at(long long x1, long long x2) const;
};

GreenWindow green_series_window(double m, int k_max, int radius);

/// Double integral representation
///   G(x) = (1/4pi^2) Int Int cos(x.theta) / (1 - (m/2)(cos th1 + cos th2))
/// by the tensor-product trapezoid rule on [-pi,pi]^2, which converges
/// spectrally for this periodic integrand while m stays away from 1.
/// err_est compares n_grid against n_grid/2. n_grid must be a power of two
/// >= 16; m above 0.999 is refused (the policy cap of the fixed grid family,
/// not a property of the integral).
GreenValue green_quadrature(LatticePoint x, double m, int n_grid);

struct BesselQuad {
  int panels = 48;         // Gauss-Legendre panels on the truncated u-range
  double log_drop = 40.0;  // truncate where log-integrand falls this far below max
};

/// Bessel-product representation
///   G(x) = r Int_0^inf e^{-r u} I_{x1}(m r u / 2) I_{x2}(m r u / 2) du
/// with both factors evaluated as log I and the integrand assembled as
/// exp(log-sum), so near-critical orders never overflow. The upper limit is
/// truncated where the log-integrand has fallen log_drop below its running
/// maximum. Requires x != 0 and 0 < m < 1.
GreenValue green_bessel(LatticePoint x, double m, BesselQuad quad = {});

/// Hitting-time Laplace transform E[e^{-lambda H(x)}] = G(x)/G(0), exact by
/// the strong Markov property and memoryless killing. Method choice is
/// automatic (quadrature near the origin, Bessel far out); errors of the two
/// Green evaluations are combined in quadrature.
GreenValue hitting_laplace(LatticePoint x, double m);

/// Asymptotic proxy for the subcritical two-point function:
///   prefactor(beta_low) * G(x; m)
/// with prefactor [sinh^{-4}(2 b) - 1]^{1/4} / (gamma_b a_b),
/// a_b = (1 + tanh^2 b)^2, gamma_b = 2 tanh b (1 - tanh^2 b), b = beta_low.
/// No err_est is reported: the underlying relation is an asymptotic
/// equivalence with no stated error bound.
double ising_correlation_asymptotic(LatticePoint x, const TemperaturePair& pair);

/// The algebraic prefactor above, exposed for identity checks.
double ising_prefactor(const TemperaturePair& pair);

}  // namespace wulff

#endif
