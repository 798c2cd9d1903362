#ifndef WULFF_ASYMPTOTICS_HPP
#define WULFF_ASYMPTOTICS_HPP

#include <array>

#include "wulff/duality.hpp"
#include "wulff/green.hpp"

namespace wulff {

/// The exponent of the Bessel-product representation written for the Laplace
/// method: with (c1, c2) = (cos phi, sin phi),
///   f_m(u, th1, th2) = (m u/2)(cos th1 + cos th2) - u
///                      + c1 log(m u sin^2 th1 / (4 c1))
///                      + c2 log(m u sin^2 th2 / (4 c2)),
/// on (0,inf) x (0,pi)^2; a term with c_i = 0 vanishes identically.
double f_m(double u, double th1, double th2, double phi, double m);

/// Saddle point of f_m and the assembled large-r estimate of E[V_m] at
/// radius r in direction phi. All entries come from closed forms; saddle()
/// additionally checks that the analytic gradient vanishes there.
struct SaddleData {
  double u_star = 0;
  double theta1_star = 0;  // in [0, pi)
  double theta2_star = 0;
  double f_star = 0;       // maximum of f_m
  double hess_det = 0;     // determinant of the Hessian at the saddle, < 0
  double decay_rate = 0;   // c1 arcsinh(2c1/(m u*)) + c2 arcsinh(2c2/(m u*))
  double prefactor = 0;    // algebraic prefactor at the given radius
  double value = 0;        // prefactor * exp(-r * decay_rate)
};

/// phi outside [0, pi/4] is symmetry-reduced first; requires 0 < m < 1.
SaddleData saddle(double phi, double m, double r = 1.0);

/// The r^{-1/2} e^{-r tau} estimate of E[V_m(x)] (no Ising prefactor).
/// x is folded into the first octant exactly, so lattice-symmetric inputs
/// produce bit-identical values. Requires x != 0.
double oz_visits_asymptotic(LatticePoint x, double m);

/// oz_visits_asymptotic times the Ising prefactor at pair.beta_low; an
/// asymptotic proxy for the subcritical two-point function.
double oz_correlation_asymptotic(LatticePoint x, const TemperaturePair& pair);

/// Verification harness for the Laplace step: numeric maximization of f_m
/// (coarse grid scan + damped Newton on a finite-difference gradient) and a
/// finite-difference Hessian determinant. Independent of the closed forms.
struct NumericSaddle {
  std::array<double, 3> point{};  // (u, th1, th2)
  double f = 0;
  double grad_norm = 0;
  double hess_det = 0;
};

NumericSaddle numeric_saddle(double phi, double m);

}  // namespace wulff

#endif
