#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "wulff/duality.hpp"

using namespace wulff;

namespace {

// independent oracle: solve sinh(2b) sinh(2b') = 1 for b' by bisection
double dual_by_root_solve(double beta) {
  const double target = std::sinh(2.0 * beta);
  double lo = 1e-12, hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (target * std::sinh(2.0 * mid) < 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE("duality") {
  TEST_CASE("critical point") {
    const double bc = critical_beta();
    CHECK(bc == doctest::Approx(0.4406868).epsilon(1e-7));
    CHECK(std::fabs(std::sinh(2.0 * bc) - 1.0) <= 1e-14);
    CHECK(std::fabs(dual_of(bc) - bc) <= 1e-14);
  }

  TEST_CASE("dual_of closed form vs root-solve oracle") {
    CHECK(dual_of(0.6) == doctest::Approx(0.310832442599233).epsilon(1e-12));
    for (double b : {0.2, 0.45, 0.6, 1.0, 2.5}) {
      CHECK(dual_of(b) == doctest::Approx(dual_by_root_solve(b)).epsilon(1e-10));
    }
  }

  TEST_CASE("dual_of rejects non-positive beta") {
    CHECK_THROWS_AS(dual_of(0.0), std::domain_error);
    CHECK_THROWS_AS(dual_of(-1.0), std::domain_error);
  }

  TEST_CASE("involution on [0.05, 5]") {
    for (int i = 0; i <= 200; ++i) {
      const double b = 0.05 + (5.0 - 0.05) * i / 200.0;
      CHECK(dual_of(dual_of(b)) == doctest::Approx(b).epsilon(1e-12));
    }
  }

  TEST_CASE("make_pair at 0.6") {
    const TemperaturePair p = make_pair(0.6);
    // oracle: m = 2/(sinh 1.2 + 1/sinh 1.2), evaluated to full precision
    CHECK(p.m == doctest::Approx(0.920831793806103).epsilon(1e-12));
    CHECK(p.lambda == doctest::Approx(0.082477893710411).epsilon(1e-10));
    CHECK(p.beta_low == doctest::Approx(0.310832442599233).epsilon(1e-12));
  }

  TEST_CASE("make_pair at the critical point") {
    const TemperaturePair p = make_pair(critical_beta());
    CHECK(p.m == 1.0);
    CHECK(p.lambda == 0.0);
    CHECK(p.rhs_gap == 0.0);
  }

  TEST_CASE("make_pair rejects subcritical input") {
    CHECK_THROWS_AS(make_pair(0.4), std::domain_error);
  }

  TEST_CASE("pair invariants on a beta grid") {
    for (int i = 1; i <= 60; ++i) {
      const double b = critical_beta() + i * 0.025;
      const TemperaturePair p = make_pair(b);
      CHECK(std::sinh(2 * p.beta_high) * std::sinh(2 * p.beta_low) ==
            doctest::Approx(1.0).epsilon(1e-12));
      CHECK(p.m == doctest::Approx(2.0 / (std::sinh(2 * p.beta_low) +
                                          std::sinh(2 * p.beta_high)))
                       .epsilon(1e-12));
      CHECK(p.lambda == doctest::Approx(-std::log(p.m)).epsilon(1e-12));
      CHECK(p.beta_high >= critical_beta());
      CHECK(p.beta_low <= critical_beta());
      CHECK(p.m > 0);
      CHECK(p.m <= 1);
    }
  }

  TEST_CASE("m decreases strictly in beta_high") {
    double prev = 1.0;
    for (int i = 1; i <= 100; ++i) {
      const double b = critical_beta() + i * 0.03;
      const double m = make_pair(b).m;
      CHECK(m < prev);
      prev = m;
    }
    CHECK(make_pair(8.0).m < 1e-6);  // m -> 0 as beta -> inf
  }

  TEST_CASE("m equals 2 gamma / a on a beta grid") {
    // a = (1 + tanh^2 b')^2, gamma = 2 tanh b' (1 - tanh^2 b'), b' = beta_low;
    // the identity (1+t^2)^2 = (1-t^2)^2 + 4t^2 makes the two expressions equal
    for (int i = 1; i <= 40; ++i) {
      const double b = critical_beta() + i * 0.04;
      const TemperaturePair p = make_pair(b);
      const double t = std::tanh(p.beta_low);
      const double a = (1 + t * t) * (1 + t * t);
      const double gamma = 2 * t * (1 - t * t);
      CHECK(p.m == doctest::Approx(2 * gamma / a).epsilon(1e-12));
      const double lhs = (1 + t * t) * (1 + t * t);
      const double rhs = (1 - t * t) * (1 - t * t) + 4 * t * t;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-15));
    }
  }

  TEST_CASE("alternative entry points are consistent") {
    const TemperaturePair ref = make_pair(0.7);
    const TemperaturePair via_m = pair_from_m(ref.m);
    const TemperaturePair via_lambda = pair_from_lambda(ref.lambda);
    const TemperaturePair via_low = pair_from_beta_low(ref.beta_low);
    CHECK(via_m.beta_high == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(via_lambda.beta_high == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(via_low.beta_high == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(via_m.lambda == doctest::Approx(ref.lambda).epsilon(1e-12));
    CHECK(via_lambda.m == doctest::Approx(ref.m).epsilon(1e-12));

    CHECK_THROWS_AS(pair_from_m(0.0), std::domain_error);
    CHECK_THROWS_AS(pair_from_m(1.5), std::domain_error);
    CHECK_THROWS_AS(pair_from_lambda(-0.1), std::domain_error);
    CHECK_THROWS_AS(pair_from_beta_low(0.6), std::domain_error);
  }
}
