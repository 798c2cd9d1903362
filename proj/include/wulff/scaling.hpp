#ifndef WULFF_SCALING_HPP
#define WULFF_SCALING_HPP

#include <span>
#include <vector>

#include "wulff/green.hpp"
#include "wulff/tension.hpp"

namespace wulff {

/// One cell of the isotropy sweep: the rescaled tension ratio
/// tau(x) / ((beta - beta_c) |x|) at beta = beta_c + eps, which tends to 4
/// uniformly in the direction as eps -> 0. gap is the max-minus-min of the
/// ratio over the whole direction set at this eps.
struct ScalingRow {
  double eps = 0;
  Direction direction;
  double ratio = 0;
  double gap = 0;
};

/// Mixed direction set: lattice directions from Farey fractions plus
/// uniformly spaced angles, all in the first octant. Size >= n.
std::vector<Direction> direction_set(int n);

/// Evaluates the ratio for every (eps, direction) cell; all eps > 0,
/// n_directions >= 8. Rows are grouped by eps in input order.
std::vector<ScalingRow> isotropy_sweep(std::span<const double> eps_list,
                                       int n_directions);

/// Exact per-sqrt(lambda) decay rate of E[e^{-lambda H(n e1)}] as n -> inf:
///   arcsinh(s)/sqrt(lambda) with sqrt(1+s^2) = 2 e^lambda - 1,
/// evaluated cancellation-free. Tends to 2 as lambda -> 0, from above.
double moderate_rate(double lambda);

/// Finite-size moderate-deviation functional
///   (1/(n sqrt(lambda))) log E[e^{-lambda H(n x)}]
/// through the deterministic Green routes; approaches -2|x| on schedules
/// with n^2 lambda -> inf.
double md_empirical(LatticePoint x, double lambda, long long n);

/// The joint-limit hypothesis (n / log n)(beta - beta_c) for labelling
/// schedule rows; the near-critical regime requires it to diverge.
double joint_regime_parameter(long long n, double beta);

}  // namespace wulff

#endif
