#include "wulff/duality.hpp"

#include <cmath>
#include <stdexcept>

namespace wulff {

double critical_beta() {
  static const double bc = 0.5 * std::log(1.0 + std::sqrt(2.0));
  return bc;
}

double dual_of(double beta) {
  if (!(beta > 0)) throw std::domain_error("dual_of: beta must be positive");
  return 0.5 * std::asinh(1.0 / std::sinh(2.0 * beta));
}

namespace {

// sinh(2b) - 1 without cancellation: sinh A - sinh B = 2 cosh((A+B)/2) sinh((A-B)/2)
// with B = 2 beta_c where sinh B = 1.
double sinh2b_minus_one(double beta) {
  const double bc = critical_beta();
  return 2.0 * std::cosh(beta + bc) * std::sinh(beta - bc);
}

// Assembles the pair given beta_high and the cancellation-free gap
// S + 1/S - 2 = (S-1)^2 / S, S = sinh(2 beta_high).
TemperaturePair assemble(double beta_high, double gap) {
  TemperaturePair p;
  p.beta_high = beta_high;
  p.beta_low = dual_of(beta_high);
  p.rhs_gap = gap;
  p.m = 2.0 / (2.0 + gap);
  p.lambda = std::log1p(0.5 * gap);
  return p;
}

}  // namespace

TemperaturePair make_pair(double beta_high) {
  const double bc = critical_beta();
  if (!(beta_high >= bc))
    throw std::domain_error("make_pair: beta_high must be >= beta_c");
  const double d = sinh2b_minus_one(beta_high);
  const double gap = d * d / std::sinh(2.0 * beta_high);
  return assemble(beta_high, gap);
}

TemperaturePair pair_from_beta_low(double beta_low) {
  const double bc = critical_beta();
  if (!(beta_low > 0 && beta_low <= bc))
    throw std::domain_error("pair_from_beta_low: need 0 < beta_low <= beta_c");
  // S_high = 1/S_low, so the gap is symmetric in the two sides.
  const double d = sinh2b_minus_one(beta_low);
  const double gap = d * d / std::sinh(2.0 * beta_low);
  TemperaturePair p = assemble(dual_of(beta_low), gap);
  p.beta_low = beta_low;  // keep the caller's value exactly
  return p;
}

TemperaturePair pair_from_m(double m) {
  if (!(m > 0 && m <= 1)) throw std::domain_error("pair_from_m: need m in (0,1]");
  const double gap = 2.0 * (1.0 - m) / m;
  // supercritical branch: sinh(2b) = (1 + sqrt(1-m^2))/m >= 1
  const double s2b = (1.0 + std::sqrt((1.0 - m) * (1.0 + m))) / m;
  TemperaturePair p = assemble(0.5 * std::asinh(s2b), gap);
  p.m = m;
  p.lambda = -std::log(m);
  return p;
}

TemperaturePair pair_from_lambda(double lambda) {
  if (!(lambda >= 0)) throw std::domain_error("pair_from_lambda: need lambda >= 0");
  const double gap = 2.0 * std::expm1(lambda);
  const double m = std::exp(-lambda);
  const double s2b = (1.0 + std::sqrt(-std::expm1(-2.0 * lambda))) * std::exp(lambda);
  TemperaturePair p = assemble(0.5 * std::asinh(s2b), gap);
  p.m = m;
  p.lambda = lambda;
  return p;
}

}  // namespace wulff
