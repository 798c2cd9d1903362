#include "wulff/tension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wulff {

Direction::Direction(double x1_, double x2_) : x1(x1_), x2(x2_) {
  const double a = std::fabs(x1_), b = std::fabs(x2_);
  const double hi = std::max(a, b), lo = std::min(a, b);
  r = std::hypot(hi, lo);
  phi = (r == 0) ? 0.0 : std::atan2(lo, hi);
}

namespace {

// sqrt(1 + y^2) - 1 without cancellation.
double sqrt1p_m1(double y) {
  const double y2 = y * y;
  return y2 / (1.0 + std::sqrt(1.0 + y2));
}

}  // namespace

double solve_s(const Direction& x, const TemperaturePair& pair) {
  if (x.r == 0) throw std::domain_error("solve_s: x must be nonzero");
  const double gap = pair.rhs_gap;
  if (gap == 0) return 0.0;  // beta_high = beta_c, right side equals 2

  const double q1 = x.x1 * x.x1, q2 = x.x2 * x.x2;
  // residual(s) = sqrt(1+s^2 x1^2) + sqrt(1+s^2 x2^2) - (2 + gap), increasing in s
  const auto residual = [&](double s) {
    return sqrt1p_m1(s * x.x1) + sqrt1p_m1(s * x.x2) - gap;
  };
  const auto dresidual = [&](double s) {
    return s * q1 / std::sqrt(1.0 + s * s * q1) +
           s * q2 / std::sqrt(1.0 + s * s * q2);
  };

  // Taylor seed s^2 ~ 2 gap / (x1^2 + x2^2); exact as gap -> 0.
  const double seed = std::sqrt(2.0 * gap / (q1 + q2));
  double hi = std::max(seed * 2.0, 1e-300);
  while (residual(hi) <= 0) hi *= 2.0;
  double lo = 0.0;
  while (hi - lo > 1e-13 && hi - lo > 1e-15 * hi) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) <= 0 ? lo : hi) = mid;
  }
  double s = 0.5 * (lo + hi);
  for (int i = 0; i < 2; ++i) {
    const double d = dresidual(s);
    if (d > 0) s -= residual(s) / d;
  }
  return s;
}

TensionValue tau(const Direction& x, const TemperaturePair& pair) {
  if (x.r == 0) return {0.0, 0.0};
  const double s = solve_s(x, pair);
  const double t = x.x1 * std::asinh(s * x.x1) + x.x2 * std::asinh(s * x.x2);
  return {t, s};
}

WulffBoundary wulff_boundary(const TemperaturePair& pair, int n_points) {
  if (n_points < 4) throw std::domain_error("wulff_boundary: n_points must be >= 4");
  WulffBoundary out;
  out.points.resize(n_points);
  const double gap = pair.rhs_gap;
  if (gap == 0) {
    out.degenerate = true;
    for (auto& p : out.points) p = {0.0, 0.0};
    return out;
  }

  for (int i = 0; i < n_points; ++i) {
    const double t = 2.0 * M_PI * i / n_points;
    const double c = std::cos(t), s = std::sin(t);
    // (cosh(rho c) - 1) + (cosh(rho s) - 1) = gap, via cosh y - 1 = 2 sinh^2(y/2)
    const auto g = [&](double rho) {
      const double sa = std::sinh(0.5 * rho * c), sb = std::sinh(0.5 * rho * s);
      return 2.0 * (sa * sa) + 2.0 * (sb * sb) - gap;
    };
    double hi = 1.0;
    while (g(hi) <= 0) hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) <= 0 ? lo : hi) = mid;
    }
    double rho = 0.5 * (lo + hi);
    for (int it = 0; it < 2; ++it) {
      const double d = c * std::sinh(rho * c) + s * std::sinh(rho * s);
      if (d > 0) rho -= g(rho) / d;
    }
    out.points[i] = {rho * c, rho * s};
  }
  return out;
}

}  // namespace wulff
