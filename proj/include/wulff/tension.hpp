#ifndef WULFF_TENSION_HPP
#define WULFF_TENSION_HPP

#include <array>
#include <vector>

#include "wulff/duality.hpp"

namespace wulff {

/// A planar displacement together with its symmetry-reduced polar form.
/// phi lives in [0, pi/4]: the square lattice's dihedral symmetry folds
/// (x1, x2) onto (max(|x1|,|x2|), min(|x1|,|x2|)).
struct Direction {
  double x1 = 0;
  double x2 = 0;
  double r = 0;    // Euclidean norm
  double phi = 0;  // angle of the folded representative, in [0, pi/4]

  Direction() = default;
  Direction(double x1_, double x2_);
};

struct TensionValue {
  double tau;  // surface tension, per lattice unit
  double s;    // root of the constraint equation
};

/// The unique s > 0 with
///   sqrt(1 + s^2 x1^2) + sqrt(1 + s^2 x2^2) = sinh(2 beta) + 1/sinh(2 beta).
/// The left side is strictly increasing in s, so the root is bracketed,
/// bisected, then Newton-polished. Returns 0 at beta_high = beta_c.
/// Throws std::domain_error for x = 0.
double solve_s(const Direction& x, const TemperaturePair& pair);

/// Exact surface tension tau(x) = x1 arcsinh(s x1) + x2 arcsinh(s x2) with s
/// from solve_s. A norm on the plane: homogeneous, subadditive, invariant
/// under coordinate permutation and sign flips. On the axis it reduces to the
/// independent closed form 2 beta + log tanh beta, which pins this arcsinh
/// form of the summands.
TensionValue tau(const Direction& x, const TemperaturePair& pair);

/// The Wulff crystal boundary: the level set
///   log((cosh y1 + cosh y2)/2) = lambda
/// traced by a per-angle radial root solve. At beta_c the level set collapses
/// to the origin; that case is reported via `degenerate`, not an error.
struct WulffBoundary {
  std::vector<std::array<double, 2>> points;
  bool degenerate = false;
};

WulffBoundary wulff_boundary(const TemperaturePair& pair, int n_points);

}  // namespace wulff

#endif
