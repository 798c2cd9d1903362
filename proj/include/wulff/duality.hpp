#ifndef WULFF_DUALITY_HPP
#define WULFF_DUALITY_HPP

namespace wulff {

/// A supercritical inverse temperature together with its subcritical dual and
/// the derived killed-walk parameters.
///
/// Invariants (see tests): sinh(2*beta_high)*sinh(2*beta_low) = 1,
/// m = 2/(sinh(2*beta_low)+sinh(2*beta_high)) in (0,1], lambda = -log(m),
/// and beta_high >= beta_c >= beta_low with equality only at beta_c.
struct TemperaturePair {
  double beta_high;  // supercritical side, >= beta_c
  double beta_low;   // subcritical dual, <= beta_c
  double m;          // walk survival probability per step
  double lambda;     // kill rate, -log(m)

  // sinh(2*beta_high) + 1/sinh(2*beta_high) - 2, evaluated without the
  // catastrophic cancellation the direct difference suffers near beta_c.
  // This quantity drives every constraint equation of the form
  // "lhs(s) = 2/m"; keeping it exact keeps the near-critical root solves
  // exact.
  double rhs_gap;
};

/// The self-dual point (1/2) log(1 + sqrt(2)), i.e. the unique beta with
/// sinh(2*beta) = 1.
double critical_beta();

/// Kramers-Wannier dual temperature (1/2) arcsinh(1/sinh(2*beta)).
/// Involution; throws std::domain_error for beta <= 0.
double dual_of(double beta);

/// Builds the full pair from the supercritical temperature.
/// Throws std::domain_error when beta_high < beta_c.
TemperaturePair make_pair(double beta_high);

// Alternative entry points used by the CLI's mutually exclusive parameter
// flags; all produce the same invariant-satisfying pair.
TemperaturePair pair_from_beta_low(double beta_low);
TemperaturePair pair_from_m(double m);
TemperaturePair pair_from_lambda(double lambda);

}  // namespace wulff

#endif
