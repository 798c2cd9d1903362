#include "wulff/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "wulff/duality.hpp"
#include "wulff/parallel.hpp"

namespace wulff {

std::vector<Direction> direction_set(int n) {
  if (n < 1) throw std::domain_error("direction_set: need n >= 1");
  std::vector<Direction> dirs;

  // lattice directions (q, p) from the Farey fractions p/q <= 1 of order 8
  for (int q = 1; q <= 8 && static_cast<int>(dirs.size()) < n; ++q) {
    for (int p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      dirs.emplace_back(static_cast<double>(q), static_cast<double>(p));
    }
  }
  // fill with uniform angles in (0, pi/4)
  int extra = n - static_cast<int>(dirs.size());
  for (int j = 0; j < extra; ++j) {
    const double a = (j + 0.5) * (M_PI / 4.0) / extra;
    dirs.emplace_back(std::cos(a), std::sin(a));
  }
  std::sort(dirs.begin(), dirs.end(),
            [](const Direction& a, const Direction& b) { return a.phi < b.phi; });
  dirs.resize(n);
  return dirs;
}

std::vector<ScalingRow> isotropy_sweep(std::span<const double> eps_list,
                                       int n_directions) {
  for (double e : eps_list)
    if (!(e > 0)) throw std::domain_error("isotropy_sweep: eps must be > 0");
  if (n_directions < 8)
    throw std::domain_error("isotropy_sweep: need at least 8 directions");

  const std::vector<Direction> dirs = direction_set(n_directions);
  const double bc = critical_beta();
  std::vector<ScalingRow> rows(eps_list.size() * dirs.size());

  parallel_for(static_cast<std::int64_t>(eps_list.size()), [&](std::int64_t e) {
    const double eps = eps_list[e];
    const TemperaturePair pair = make_pair(bc + eps);
    for (std::size_t d = 0; d < dirs.size(); ++d) {
      ScalingRow& row = rows[e * dirs.size() + d];
      row.eps = eps;
      row.direction = dirs[d];
      row.ratio = tau(dirs[d], pair).tau / (eps * dirs[d].r);
    }
    double lo = rows[e * dirs.size()].ratio, hi = lo;
    for (std::size_t d = 1; d < dirs.size(); ++d) {
      lo = std::min(lo, rows[e * dirs.size() + d].ratio);
      hi = std::max(hi, rows[e * dirs.size() + d].ratio);
    }
    for (std::size_t d = 0; d < dirs.size(); ++d)
      rows[e * dirs.size() + d].gap = hi - lo;
  });
  return rows;
}

double moderate_rate(double lambda) {
  if (!(lambda > 0)) throw std::domain_error("moderate_rate: need lambda > 0");
  // sqrt(1+s^2) = 2 e^lambda - 1  =>  s^2 = 4 e^lambda (e^lambda - 1),
  // written with expm1 so the near-critical difference stays exact
  const double s = 2.0 * std::sqrt(std::exp(lambda) * std::expm1(lambda));
  return std::asinh(s) / std::sqrt(lambda);
}

double md_empirical(LatticePoint x, double lambda, long long n) {
  if (!(lambda > 0)) throw std::domain_error("md_empirical: need lambda > 0");
  if (n < 1) throw std::domain_error("md_empirical: need n >= 1");
  if (x.x1 == 0 && x.x2 == 0)
    throw std::domain_error("md_empirical: x must be nonzero");
  const double m = std::exp(-lambda);
  const GreenValue hl = hitting_laplace({n * x.x1, n * x.x2}, m);
  return std::log(hl.value) / (static_cast<double>(n) * std::sqrt(lambda));
}

double joint_regime_parameter(long long n, double beta) {
  if (n < 2) return 0.0;
  const double nn = static_cast<double>(n);
  return nn / std::log(nn) * (beta - critical_beta());
}

}  // namespace wulff
