#include "wulff/rate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wulff {

double log_mgf(double y1, double y2) {
  const double a = std::fabs(y1), b = std::fabs(y2);
  const double big = std::max(a, b);
  if (big < 20.0) return std::log(0.5 * (std::cosh(a) + std::cosh(b)));
  // cosh a + cosh b = e^big/2 * ((1+e^-2a) e^(a-big) + (1+e^-2b) e^(b-big))
  const double inner = (1.0 + std::exp(-2.0 * a)) * std::exp(a - big) +
                       (1.0 + std::exp(-2.0 * b)) * std::exp(b - big);
  return big - std::log(4.0) + std::log(inner);
}

RatePoint cramer(double z1, double z2) {
  RatePoint out;
  out.z = {z1, z2};
  const double a1 = std::fabs(z1), a2 = std::fabs(z2);
  const double sum = a1 + a2;
  const double inf = std::numeric_limits<double>::infinity();

  if (sum > 1.0) {
    out.value = inf;
    return out;  // outside the reachable cone
  }
  if (z1 == 0 && z2 == 0) {
    out.value = 0;
    out.has_tilt = true;
    return out;
  }
  if (sum == 1.0) {
    // the sup is attained only at infinity; the finite limit is
    // log 4 + |z1| log|z1| + |z2| log|z2| (ballistic path counting)
    double v = std::log(4.0);
    if (a1 > 0) v += a1 * std::log(a1);
    if (a2 > 0) v += a2 * std::log(a2);
    out.value = v;
    return out;
  }

  // scalar reduction: C = sqrt(1 + z1^2 C^2) + sqrt(1 + z2^2 C^2),
  // strictly decreasing residual, unique root C >= 2
  const double q1 = z1 * z1, q2 = z2 * z2;
  const auto residual = [&](double c) {
    return std::sqrt(1.0 + q1 * c * c) + std::sqrt(1.0 + q2 * c * c) - c;
  };
  double lo = 2.0, hi = 4.0;
  while (residual(hi) > 0) {
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) > 0 ? lo : hi) = mid;
  }
  double c = 0.5 * (lo + hi);
  for (int it = 0; it < 2; ++it) {
    const double d = q1 * c / std::sqrt(1.0 + q1 * c * c) +
                     q2 * c / std::sqrt(1.0 + q2 * c * c) - 1.0;
    if (d < 0) c -= residual(c) / d;
  }

  const double y1 = std::asinh(z1 * c), y2 = std::asinh(z2 * c);
  out.y = {y1, y2};
  out.has_tilt = true;
  // Lambda(y) = log(C/2) exactly on this solution manifold
  out.value = z1 * y1 + z2 * y2 - std::log(0.5 * c);
  if (out.value < 0) out.value = 0;  // clip roundoff at z ~ 0
  return out;
}

double tau_variational(const Direction& x, const TemperaturePair& pair) {
  if (x.r == 0) return 0.0;
  const double lambda = pair.lambda;
  if (lambda == 0) return 0.0;  // critical point: infimum over gamma is 0

  const double gamma_min = std::fabs(x.x1) + std::fabs(x.x2);
  const auto g = [&](double gamma) {
    return lambda * gamma + gamma * cramer(x.x1 / gamma, x.x2 / gamma).value;
  };
  // optimality condition: Lambda(y(x/gamma)) = lambda, decreasing in gamma
  const auto h = [&](double gamma) {
    const RatePoint rp = cramer(x.x1 / gamma, x.x2 / gamma);
    return log_mgf(rp.y[0], rp.y[1]) - lambda;
  };

  double hi = std::max(2.0 * gamma_min, x.r * (2.0 / std::sqrt(lambda) + 2.0));
  while (h(hi) > 0) hi *= 2.0;

  // golden section on the convex g
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = gamma_min, b = hi;
  double c1 = b - invphi * (b - a), c2 = a + invphi * (b - a);
  double f1 = g(c1), f2 = g(c2);
  while (b - a > 1e-10) {
    if (f1 <= f2) {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - invphi * (b - a);
      f1 = g(c1);
    } else {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + invphi * (b - a);
      f2 = g(c2);
    }
  }
  double gamma = 0.5 * (a + b);

  // one Newton step on h with a finite-difference slope
  const double step = 1e-6 * gamma;
  const double dh = (h(gamma + step) - h(gamma - step)) / (2.0 * step);
  if (dh < 0) {
    const double polished = gamma - h(gamma) / dh;
    if (polished > gamma_min) gamma = polished;
  }
  return g(gamma);
}

}  // namespace wulff
