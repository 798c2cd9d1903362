#include "wulff/green.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wulff/bessel.hpp"
#include "wulff/duality.hpp"
#include "wulff/kernels.hpp"
#include "wulff/parallel.hpp"

namespace wulff {

const char* green_method_name(GreenMethod method) {
  switch (method) {
    case GreenMethod::series: return "series";
    case GreenMethod::quadrature: return "quadrature";
    case GreenMethod::bessel: return "bessel";
  }
  return "?";
}

double GreenWindow::at(long long x1, long long x2) const {
  if (std::llabs(x1) > radius || std::llabs(x2) > radius)
    throw std::out_of_range("GreenWindow::at: site outside window");
  const long long n = 2 * radius + 1;
  return values[(x2 + radius) * n + (x1 + radius)];
}

GreenWindow green_series_window(double m, int k_max, int radius) {
  if (!(m >= 0 && m < 1))
    throw std::domain_error("green_series: series requires 0 <= m < 1");
  if (k_max < 0 || radius < 0)
    throw std::domain_error("green_series: negative truncation or radius");

  GreenWindow win;
  win.radius = radius;
  win.k_max = k_max;
  win.m = m;
  win.err_est = (m == 0) ? 0.0 : std::pow(m, k_max + 1) / (1.0 - m);
  const int wn = 2 * radius + 1;
  win.values.assign(static_cast<std::size_t>(wn) * wn, 0.0);
  win.values[static_cast<std::size_t>(radius) * wn + radius] = 1.0;  // k = 0 term
  if (k_max == 0 || m == 0) return win;

  // probability field on a box of radius k_max with a one-cell zero halo;
  // mass cannot reach the halo within k_max steps
  const int n = 2 * k_max + 1;
  const std::size_t stride = n + 2;
  std::vector<double> cur(stride * stride, 0.0), next(stride * stride, 0.0);
  const auto idx = [&](int row, int col) {
    // row, col in [-k_max, k_max]
    return static_cast<std::size_t>(row + k_max + 1) * stride + (col + k_max + 1);
  };
  cur[idx(0, 0)] = 1.0;

  const Kernels& kern = active_kernels();
  double w = 1.0;
  for (int k = 1; k <= k_max; ++k) {
    parallel_for(n, [&](std::int64_t j) {
      const int row = static_cast<int>(j) - k_max;
      kern.stencil_row(&next[idx(row, -k_max)], &cur[idx(row, -k_max)],
                       &cur[idx(row - 1, -k_max)], &cur[idx(row + 1, -k_max)],
                       n);
    });
    cur.swap(next);
    w *= m;
    for (int row = -radius; row <= radius; ++row)
      for (int col = -radius; col <= radius; ++col)
        win.values[static_cast<std::size_t>(row + radius) * wn + (col + radius)] +=
            w * cur[idx(row, col)];
  }
  return win;
}

GreenValue green_series(LatticePoint x, double m, int k_max) {
  if (k_max < std::llabs(x.x1) + std::llabs(x.x2))
    throw std::domain_error("green_series: k_max below the first reaching time");
  const int radius = static_cast<int>(std::max(std::llabs(x.x1), std::llabs(x.x2)));
  const GreenWindow win = green_series_window(m, k_max, radius);
  GreenValue gv;
  gv.value = win.at(x.x1, x.x2);
  gv.method = GreenMethod::series;
  gv.err_est = win.err_est;
  gv.params = "k_max=" + std::to_string(k_max);
  return gv;
}

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double quadrature_sum(LatticePoint x, double m, int n) {
  // cos(x1 th1 + x2 th2) = c1 c2 - s1 s2 over the periodic trapezoid grid
  std::vector<double> c1(n), s1(n), ct(n);
  for (int j = 0; j < n; ++j) {
    const double th = -M_PI + 2.0 * M_PI * j / n;
    c1[j] = std::cos(static_cast<double>(x.x1) * th);
    s1[j] = std::sin(static_cast<double>(x.x1) * th);
    ct[j] = std::cos(th);
  }
  const double hm = 0.5 * m;
  const Kernels& kern = active_kernels();
  std::vector<double> rows(n);
  parallel_for(n, [&](std::int64_t k) {
    const double th = -M_PI + 2.0 * M_PI * static_cast<double>(k) / n;
    const double c2 = std::cos(static_cast<double>(x.x2) * th);
    const double s2 = std::sin(static_cast<double>(x.x2) * th);
    rows[k] = kern.quad_row_sum(c1.data(), s1.data(), ct.data(), n, c2, s2, hm,
                                std::cos(th));
  });
  return pairwise_sum(rows) / (static_cast<double>(n) * n);
}

}  // namespace

GreenValue green_quadrature(LatticePoint x, double m, int n_grid) {
  if (!(m >= 0 && m <= 0.999))
    throw std::domain_error(
        "green_quadrature: m > 0.999 is outside the validated grid policy "
        "(integrable singularity too sharp); use the series or Bessel route");
  if (!power_of_two(n_grid) || n_grid < 16)
    throw std::domain_error("green_quadrature: n_grid must be a power of two >= 16");
  GreenValue gv;
  gv.value = quadrature_sum(x, m, n_grid);
  gv.method = GreenMethod::quadrature;
  gv.err_est = std::fabs(gv.value - quadrature_sum(x, m, n_grid / 2));
  gv.params = "n_grid=" + std::to_string(n_grid);
  return gv;
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
struct GaussRule {
  std::vector<double> node, weight;
};

const GaussRule& gauss16() {
  static const GaussRule rule = [] {
    const int n = 16;
    GaussRule r;
    r.node.resize(n);
    r.weight.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double pp = 0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
        }
        pp = n * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / pp;
        z -= dz;
        if (std::fabs(dz) < 1e-15) break;
      }
      r.node[i] = -z;
      r.node[n - 1 - i] = z;
      r.weight[i] = r.weight[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return r;
  }();
  return rule;
}

struct LogIntegrand {
  long long n1, n2;
  double r, half_mr;

  double operator()(double u) const {
    const double z = half_mr * u;
    return -r * u + log_bessel_i(n1, z) + log_bessel_i(n2, z);
  }
};

double bessel_panel_sum(const LogIntegrand& f, double lo, double hi, int panels,
                        double t_max) {
  const GaussRule& gl = gauss16();
  const int nodes = static_cast<int>(gl.node.size());
  std::vector<double> contrib(static_cast<std::size_t>(panels) * nodes);
  const double width = (hi - lo) / panels;
  parallel_for(panels, [&](std::int64_t pidx) {
    const double a = lo + width * static_cast<double>(pidx);
    for (int q = 0; q < nodes; ++q) {
      const double u = a + 0.5 * width * (gl.node[q] + 1.0);
      contrib[pidx * nodes + q] =
          0.5 * width * gl.weight[q] * std::exp(f(u) - t_max);
    }
  });
  return pairwise_sum(contrib);
}

}  // namespace

GreenValue green_bessel(LatticePoint x, double m, BesselQuad quad) {
  if (x.x1 == 0 && x.x2 == 0)
    throw std::domain_error(
        "green_bessel: representation needs x != 0; use series or quadrature");
  if (!(m > 0 && m < 1))
    throw std::domain_error("green_bessel: need m in (0,1)");
  if (quad.panels < 2 || quad.log_drop <= 0)
    throw std::domain_error("green_bessel: invalid integration parameters");

  const long long n1 = std::llabs(x.x1), n2 = std::llabs(x.x2);
  const double r = std::hypot(static_cast<double>(n1), static_cast<double>(n2));
  const LogIntegrand f{n1, n2, r, 0.5 * m * r};

  // locate the peak of the log-integrand on a doubling grid, then take the
  // bracket where it has fallen log_drop below the max
  double t_max = -std::numeric_limits<double>::infinity();
  double u_peak = 1.0;
  std::vector<double> us, ts;
  for (double u = 1.0 / 1024.0;; u *= 1.25) {
    const double t = f(u);
    us.push_back(u);
    ts.push_back(t);
    if (t > t_max) {
      t_max = t;
      u_peak = u;
    }
    if (t < t_max - quad.log_drop && u > u_peak * 2.0) break;
    if (u > 1e9) break;  // tail slope is r(1-m) > 0, unreachable in practice
  }
  double u_lo = 0.0, u_hi = us.back();
  for (std::size_t i = 0; i + 1 < us.size(); ++i) {
    if (us[i] < u_peak && ts[i] < t_max - quad.log_drop) u_lo = us[i];
  }

  // Panels must resolve the peak even when the exponential tail is long:
  // measure the width of the top two log-units from the scan and keep at
  // least ~4 panels per such width across the whole bracket.
  double w_lo = u_peak, w_hi = u_peak;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (ts[i] >= t_max - 2.0) {
      w_lo = std::min(w_lo, us[i]);
      w_hi = std::max(w_hi, us[i]);
    }
  }
  const double peak_width = std::max(w_hi - w_lo, 1e-3 * u_peak);
  const int panels = std::clamp(
      static_cast<int>(std::ceil(4.0 * (u_hi - u_lo) / peak_width)),
      quad.panels, 4096);

  const double scaled = bessel_panel_sum(f, u_lo, u_hi, panels, t_max);
  const double scaled_half =
      bessel_panel_sum(f, u_lo, u_hi, std::max(1, panels / 2), t_max);

  GreenValue gv;
  gv.value = r * std::exp(t_max) * scaled;
  gv.method = GreenMethod::bessel;
  const double refine_err = r * std::exp(t_max) * std::fabs(scaled - scaled_half);
  const double tail_err = gv.value * std::exp(-quad.log_drop) / (1.0 - m);
  gv.err_est = refine_err + tail_err;
  gv.params = "panels=" + std::to_string(panels) +
              ",log_drop=" + std::to_string(quad.log_drop);
  return gv;
}

namespace {

int quadrature_grid_for(double m) {
  if (m <= 0.9) return 256;
  if (m <= 0.99) return 512;
  return 2048;
}

int series_kmax_for(double m) {
  if (m == 0) return 1;
  const int k = static_cast<int>(
      std::ceil(std::log(1e-10 * (1.0 - m)) / std::log(m)));
  return std::clamp(k, 32, 1024);  // box is (2k+1)^2 doubles; keep it sane
}

GreenValue green_auto(LatticePoint x, double m) {
  const long long norm_inf = std::max(std::llabs(x.x1), std::llabs(x.x2));
  if (m == 0) {
    GreenValue gv;
    gv.value = (norm_inf == 0) ? 1.0 : 0.0;
    gv.method = GreenMethod::series;
    gv.err_est = 0;
    gv.params = "k_max=0";
    return gv;
  }
  if (norm_inf > 0 && (norm_inf > 8 || m > 0.999))
    return green_bessel(x, m, {});
  if (m <= 0.999) return green_quadrature(x, m, quadrature_grid_for(m));
  throw std::domain_error(
      "green: no validated route to G(0) for m > 0.999 (quadrature policy cap, "
      "Bessel representation needs x != 0)");
}

}  // namespace

GreenValue hitting_laplace(LatticePoint x, double m) {
  if (x.x1 == 0 && x.x2 == 0)
    throw std::domain_error("hitting_laplace: x must be nonzero");
  if (!(m > 0 && m < 1))
    throw std::domain_error("hitting_laplace: need m in (0,1)");
  const GreenValue gx = green_auto(x, m);
  const GreenValue g0 = green_auto({0, 0}, m);
  GreenValue gv;
  gv.value = gx.value / g0.value;
  gv.method = gx.method;
  // relative errors of the two Green evaluations combined in quadrature
  const double rel = (gx.value != 0)
                         ? std::hypot(gx.err_est / gx.value, g0.err_est / g0.value)
                         : 0.0;
  gv.err_est = std::fabs(gv.value) * rel;
  gv.params = "ratio:" + gx.params;
  return gv;
}

double ising_prefactor(const TemperaturePair& pair) {
  const double b = pair.beta_low;
  if (!(b > 0) || b >= critical_beta())
    throw std::domain_error(
        "ising_prefactor: beta_low must be subcritical (root is non-real otherwise)");
  const double t = std::tanh(b);
  const double a = (1.0 + t * t) * (1.0 + t * t);
  const double gamma = 2.0 * t * (1.0 - t * t);
  const double sh = std::sinh(2.0 * b);
  const double root = std::pow(1.0 / (sh * sh * sh * sh) - 1.0, 0.25);
  return root / (gamma * a);
}

double ising_correlation_asymptotic(LatticePoint x, const TemperaturePair& pair) {
  return ising_prefactor(pair) * green_auto(x, pair.m).value;
}

}  // namespace wulff
