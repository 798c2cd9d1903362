#include "wulff/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wulff/green.hpp"

namespace wulff {

double f_m(double u, double th1, double th2, double phi, double m) {
  const double c1 = std::cos(phi), c2 = std::sin(phi);
  double v = 0.5 * m * u * (std::cos(th1) + std::cos(th2)) - u;
  if (c1 > 0) {
    const double s = std::sin(th1);
    v += c1 * std::log(m * u * s * s / (4.0 * c1));
  }
  if (c2 > 0) {
    const double s = std::sin(th2);
    v += c2 * std::log(m * u * s * s / (4.0 * c2));
  }
  return v;
}

namespace {

double fold_octant(double phi) {
  double p = std::fmod(std::fabs(phi), M_PI / 2.0);
  if (p > M_PI / 4.0) p = M_PI / 2.0 - p;
  return p;
}

}  // namespace

SaddleData saddle(double phi, double m, double r) {
  if (!(m > 0 && m < 1)) throw std::domain_error("saddle: need m in (0,1)");
  const double p = fold_octant(phi);
  const double c1 = std::cos(p), c2 = std::sin(p);

  SaddleData sd;
  const double s2 = std::sin(2.0 * p);
  sd.u_star = std::sqrt(
      (1.0 + std::sqrt(m * m + (1.0 - m * m) * s2 * s2)) / (1.0 - m * m));

  const double a1 = 2.0 * c1 / (m * sd.u_star);
  const double a2 = 2.0 * c2 / (m * sd.u_star);
  const double h1 = std::sqrt(a1 * a1 + 1.0), h2 = std::sqrt(a2 * a2 + 1.0);
  const double cos1 = 1.0 / (h1 + a1), cos2 = 1.0 / (h2 + a2);
  sd.theta1_star = std::acos(cos1);
  sd.theta2_star = std::acos(cos2);

  sd.decay_rate = c1 * std::asinh(a1) + c2 * std::asinh(a2);
  sd.f_star = -sd.decay_rate - c1 - c2;

  const double bracket = c1 * c1 * h2 + c2 * c2 * h1;
  sd.hess_det = -(2.0 * m / sd.u_star) * bracket;

  sd.prefactor = std::sqrt(sd.u_star / (M_PI * m * r)) / std::sqrt(bracket);
  sd.value = sd.prefactor * std::exp(-r * sd.decay_rate);

  // stationarity of the closed forms, checked with the analytic gradient;
  // theta components only where the corresponding log term is present
  double g0 = -1.0 + 0.5 * m * (cos1 + cos2) + (c1 + c2) / sd.u_star;
  double gnorm2 = g0 * g0;
  if (c1 > 0) {
    const double s1 = std::sin(sd.theta1_star);
    const double g1 = -0.5 * m * sd.u_star * s1 + 2.0 * c1 * cos1 / s1;
    gnorm2 += g1 * g1;
  }
  if (c2 > 0) {
    const double sn2 = std::sin(sd.theta2_star);
    const double g2 = -0.5 * m * sd.u_star * sn2 + 2.0 * c2 * cos2 / sn2;
    gnorm2 += g2 * g2;
  }
  if (std::sqrt(gnorm2) > 1e-9)
    throw std::logic_error("saddle: closed forms fail the gradient check");
  return sd;
}

double oz_visits_asymptotic(LatticePoint x, double m) {
  const long long a = std::llabs(x.x1), b = std::llabs(x.x2);
  const long long hi = std::max(a, b), lo = std::min(a, b);
  if (hi == 0) throw std::domain_error("oz_visits_asymptotic: x must be nonzero");
  const double r = std::hypot(static_cast<double>(hi), static_cast<double>(lo));
  const double phi = std::atan2(static_cast<double>(lo), static_cast<double>(hi));
  return saddle(phi, m, r).value;
}

double oz_correlation_asymptotic(LatticePoint x, const TemperaturePair& pair) {
  return ising_prefactor(pair) * oz_visits_asymptotic(x, pair.m);
}

namespace {

struct Vec3 {
  double u, t1, t2;
};

double eval(const Vec3& v, double phi, double m) {
  return f_m(v.u, v.t1, v.t2, phi, m);
}

}  // namespace

NumericSaddle numeric_saddle(double phi, double m) {
  if (!(m > 0 && m < 1)) throw std::domain_error("numeric_saddle: need m in (0,1)");
  const double p = fold_octant(phi);

  // coarse scan of the domain (0,inf) x (0,pi)^2; u* is bounded by
  // sqrt(2/(1-m^2)) for any phi, so the box below always contains the max
  const double u_hi = 2.0 * std::sqrt(2.0 / (1.0 - m * m));
  Vec3 best{1.0, M_PI / 2, M_PI / 2};
  double fbest = -std::numeric_limits<double>::infinity();
  const int NU = 48, NT = 48;
  for (int i = 1; i <= NU; ++i) {
    const double u = u_hi * i / (NU + 1);
    for (int j = 1; j <= NT; ++j) {
      const double t1 = M_PI * j / (NT + 1);
      for (int k = 1; k <= NT; ++k) {
        const double t2 = M_PI * k / (NT + 1);
        const double f = f_m(u, t1, t2, p, m);
        if (f > fbest) {
          fbest = f;
          best = {u, t1, t2};
        }
      }
    }
  }

  // damped Newton on the finite-difference gradient
  const auto grad = [&](const Vec3& v, double h) {
    Vec3 g;
    g.u = (eval({v.u + h, v.t1, v.t2}, p, m) - eval({v.u - h, v.t1, v.t2}, p, m)) / (2 * h);
    g.t1 = (eval({v.u, v.t1 + h, v.t2}, p, m) - eval({v.u, v.t1 - h, v.t2}, p, m)) / (2 * h);
    g.t2 = (eval({v.u, v.t1, v.t2 + h}, p, m) - eval({v.u, v.t1, v.t2 - h}, p, m)) / (2 * h);
    return g;
  };
  const auto hessian = [&](const Vec3& v, double h, double H[3][3]) {
    const double f0 = eval(v, p, m);
    const double du[3] = {h, 0, 0}, dt1[3] = {0, h, 0}, dt2[3] = {0, 0, h};
    const double* dirs[3] = {du, dt1, dt2};
    for (int i = 0; i < 3; ++i) {
      Vec3 vp = v, vm = v;
      const double* d = dirs[i];
      vp.u += d[0]; vp.t1 += d[1]; vp.t2 += d[2];
      vm.u -= d[0]; vm.t1 -= d[1]; vm.t2 -= d[2];
      H[i][i] = (eval(vp, p, m) - 2 * f0 + eval(vm, p, m)) / (h * h);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const double* di = dirs[i];
        const double* dj = dirs[j];
        Vec3 vpp = v, vpm = v, vmp = v, vmm = v;
        vpp.u += di[0] + dj[0]; vpp.t1 += di[1] + dj[1]; vpp.t2 += di[2] + dj[2];
        vpm.u += di[0] - dj[0]; vpm.t1 += di[1] - dj[1]; vpm.t2 += di[2] - dj[2];
        vmp.u += dj[0] - di[0]; vmp.t1 += dj[1] - di[1]; vmp.t2 += dj[2] - di[2];
        vmm.u -= di[0] + dj[0]; vmm.t1 -= di[1] + dj[1]; vmm.t2 -= di[2] + dj[2];
        H[i][j] = H[j][i] =
            (eval(vpp, p, m) - eval(vpm, p, m) - eval(vmp, p, m) + eval(vmm, p, m)) /
            (4 * h * h);
      }
  };

  Vec3 v = best;
  for (int it = 0; it < 60; ++it) {
    const double h = 1e-6 * std::max(1.0, v.u);
    const Vec3 g = grad(v, h);
    const double gn = std::sqrt(g.u * g.u + g.t1 * g.t1 + g.t2 * g.t2);
    if (gn < 1e-11) break;
    double H[3][3];
    hessian(v, 1e-4 * std::max(1.0, v.u), H);
    // solve H d = -g by Cramer's rule
    const double det = H[0][0] * (H[1][1] * H[2][2] - H[1][2] * H[2][1]) -
                       H[0][1] * (H[1][0] * H[2][2] - H[1][2] * H[2][0]) +
                       H[0][2] * (H[1][0] * H[2][1] - H[1][1] * H[2][0]);
    if (det == 0) break;
    const double b0 = -g.u, b1 = -g.t1, b2 = -g.t2;
    const double d0 = (b0 * (H[1][1] * H[2][2] - H[1][2] * H[2][1]) -
                       H[0][1] * (b1 * H[2][2] - H[1][2] * b2) +
                       H[0][2] * (b1 * H[2][1] - H[1][1] * b2)) / det;
    const double d1 = (H[0][0] * (b1 * H[2][2] - H[1][2] * b2) -
                       b0 * (H[1][0] * H[2][2] - H[1][2] * H[2][0]) +
                       H[0][2] * (H[1][0] * b2 - b1 * H[2][0])) / det;
    const double d2 = (H[0][0] * (H[1][1] * b2 - b1 * H[2][1]) -
                       H[0][1] * (H[1][0] * b2 - b1 * H[2][0]) +
                       b0 * (H[1][0] * H[2][1] - H[1][1] * H[2][0])) / det;
    double scale = 1.0;
    const double fprev = eval(v, p, m);
    for (int bt = 0; bt < 30; ++bt) {
      Vec3 cand{v.u + scale * d0, v.t1 + scale * d1, v.t2 + scale * d2};
      if (cand.u > 0 && cand.t1 > 0 && cand.t1 < M_PI && cand.t2 > 0 &&
          cand.t2 < M_PI && eval(cand, p, m) >= fprev) {
        v = cand;
        break;
      }
      scale *= 0.5;
    }
    if (scale < 1e-9) break;
  }

  NumericSaddle out;
  out.point = {v.u, v.t1, v.t2};
  out.f = eval(v, p, m);
  const double h = 1e-6 * std::max(1.0, v.u);
  const Vec3 g = grad(v, h);
  out.grad_norm = std::sqrt(g.u * g.u + g.t1 * g.t1 + g.t2 * g.t2);
  double H[3][3];
  hessian(v, 1e-4 * std::max(1.0, v.u), H);
  out.hess_det = H[0][0] * (H[1][1] * H[2][2] - H[1][2] * H[2][1]) -
                 H[0][1] * (H[1][0] * H[2][2] - H[1][2] * H[2][0]) +
                 H[0][2] * (H[1][0] * H[2][1] - H[1][1] * H[2][0]);
  return out;
}

}  // namespace wulff
