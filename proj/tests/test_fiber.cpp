#include <cmath>

#include "doctest.h"
#include "glstep/error.hpp"
#include "glstep/fiber.hpp"

using namespace glstep;

namespace {

const DeGennesPoint& theta0() {
  static const DeGennesPoint p = theta(0.0);
  return p;
}

// Fiber discretisation matched to the half-line grid used for mu^N(-xi).
FiberDisc matched(double xi) {
  const RobinParams p = robin_params(0.0, -xi);
  FiberDisc d;
  d.truncation_neg = p.truncation;
  d.truncation_pos = p.truncation;
  return d;
}

}  // namespace

TEST_CASE("a = -1 reduces to the Neumann band") {
  CHECK(std::abs(mu_fiber(-1.0, 0.0) - 1.0) < 1e-4);
  CHECK(std::abs(mu_fiber(-1.0, -std::sqrt(theta0().theta)) - 0.59) < 5e-3);
  double worst = 0.0;
  for (int k = 0; k <= 40; ++k) {
    const double xi = -3.0 + 0.1 * k;
    const double m1 = mu_fiber(-1.0, xi, matched(xi));
    const double mn = mu_neumann(-xi);
    worst = std::max(worst, std::abs(m1 - mn) / std::abs(mn));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("positive a: decreasing band confined between a and 1") {
  const double a = 0.5;
  const double far = mu_fiber(a, 14.0);  // discrete far-field level
  CHECK(std::abs(far - a) < 1e-5);
  double prev = 2.0;
  // Beyond xi ~ 3 the decrease is below round-off.
  for (double xi = -4.0; xi <= 3.0; xi += 0.5) {
    const double v = mu_fiber(a, xi);
    CHECK(v < prev);
    CHECK(v < 1.0);
    CHECK(v > far);
    prev = v;
  }
  for (double xi = 3.5; xi <= 6.0; xi += 0.5) CHECK(mu_fiber(a, xi) > far - 1e-10);
  const double at6 = mu_fiber(a, 6.0);
  CHECK(std::abs(at6 - a) < 2e-2);
  const DispersionCurve c = beta(a);
  CHECK(c.beta == a);
  CHECK_FALSE(c.zeta.has_value());

  auto r = minimize_scalar([&](double xi) { return mu_fiber(a, xi); }, -5.0, 5.0);
  CHECK(r.boundary_minimum);
  CHECK_FALSE(r.at_lower);
}

TEST_CASE("barrier constant for a = -1 equals Theta0") {
  const DispersionCurve c = beta(-1.0);
  REQUIRE(c.zeta.has_value());
  CHECK(std::abs(c.beta - theta0().theta) < 1e-8);
  CHECK(std::abs(*c.zeta + theta0().xi_star) < 1e-4);
  CHECK(c.f0 > 0.0);
  CHECK(c.nu > 0.0);
  CHECK_FALSE(c.near_tie);
}

TEST_CASE("barrier constant bounds for negative a") {
  const double t0 = theta0().theta;
  for (double a : {-0.25, -0.4, -0.5, -0.55, -0.75}) {
    const DispersionCurve c = beta(a);
    const double abs_a = -a;
    REQUIRE(c.zeta.has_value());
    CHECK(*c.zeta < 0.0);
    CHECK(abs_a * t0 < c.beta);
    CHECK(c.beta < abs_a);
    const TrialBound tb = trial_upper_bound(a);
    CHECK(c.beta <= tb.quotient);
    CHECK(tb.quotient < tb.abs_a_theta);
    CHECK(tb.abs_a_theta < abs_a);
    // Band minimum agrees with the coarse scan.
    for (double v : c.mu_samples) CHECK(c.beta <= v + 1e-12);
  }
  const DispersionCurve half = beta(-0.5);
  CHECK(half.beta > 0.295);
  CHECK(half.beta < 0.5);
  CHECK(half.beta == doctest::Approx(0.39123824).epsilon(1e-6));
  double dense = 1e300;
  for (int k = -50; k <= 50; ++k) dense = std::min(dense, mu_fiber(-0.5, *half.zeta + 1e-3 * k));
  CHECK(half.beta <= dense + 1e-12);
  CHECK(dense - half.beta < 1e-6);
}

TEST_CASE("band function limits for negative a") {
  for (double a : {-1.0, -0.75, -0.5, -0.25}) CHECK(std::abs(mu_fiber(a, -6.0) + a) < 5e-2);
  CHECK(mu_fiber(-0.5, 4.0) > 10.0);
}

TEST_CASE("trial bound matches its closed form inputs") {
  const TrialBound t = trial_upper_bound(-0.5);
  CHECK(t.gamma == doctest::Approx(std::sqrt(2.0)));
  CHECK(t.m == doctest::Approx(1.0));
  CHECK(t.quotient < 0.5);
  CHECK(trial_upper_bound(-0.05).quotient < 0.05);
  CHECK_THROWS_AS(trial_upper_bound(-1.0), Error);
  CHECK_THROWS_AS(trial_upper_bound(0.5), Error);
}

TEST_CASE("closed-form derivative against central differences") {
  for (double a : {-1.0, -0.7, -0.5, -0.3}) {
    for (double xi : {-1.5, -1.0, -0.5, 0.0, 0.5, 1.0}) {
      const double closed = mu_fiber_derivative(a, xi);
      const double fd = (mu_fiber(a, xi + 1e-4) - mu_fiber(a, xi - 1e-4)) / 2e-4;
      CHECK(std::abs(closed - fd) / std::max(std::abs(closed), 1e-8) < 1e-3);
    }
  }
  const DispersionCurve m1 = beta(-1.0);
  CHECK(std::abs(mu_fiber_derivative(-1.0, *m1.zeta)) < 1e-4);
  // Chain rule through the a = -1 symmetry.
  for (double xi : {-1.2, 0.3}) {
    const double dn = (mu_neumann(-xi + 1e-4) - mu_neumann(-xi - 1e-4)) / 2e-4;
    CHECK(mu_fiber_derivative(-1.0, xi) == doctest::Approx(-dn).epsilon(1e-4));
  }
  const double closed = mu_fiber_derivative(-0.5, -1.0);
  const double fd = (mu_fiber(-0.5, -1.0 + 1e-4) - mu_fiber(-0.5, -1.0 - 1e-4)) / 2e-4;
  CHECK(std::abs(closed - fd) / std::abs(fd) < 1e-3);
  CHECK_THROWS_AS(mu_fiber_derivative(0.5, 0.0), Error);
}

TEST_CASE("de Gennes parameter at the kink") {
  CHECK(std::abs(degennes_param(-1.0, 0.0).gamma_a) < 2e-3);
  // One-sided estimates agree to second order.
  FiberDisc coarse;
  coarse.h = 0.01;
  FiberDisc fine;
  fine.h = 0.005;
  for (double xi : {-1.0, 0.4}) {
    const auto c = degennes_param(-0.5, xi, coarse);
    const auto f = degennes_param(-0.5, xi, fine);
    const double scale = 1.0 + std::abs(f.gamma_a) + xi * xi;
    CHECK(std::abs(c.gamma_left - c.gamma_right) < 5 * 0.01 * 0.01 * scale);
    CHECK(std::abs(f.gamma_left - f.gamma_right) < 5 * 0.005 * 0.005 * scale);
  }
  const DispersionCurve half = beta(-0.5);
  const FiberGround g = fiber_ground(-0.5, *half.zeta);
  const DeGennesParamSample s = degennes_param(g);
  const double f0 = g.at_zero();
  const double residual = (1.0 + 2.0) * (s.gamma_a * s.gamma_a + g.value - *half.zeta * *half.zeta) * f0 * f0;
  CHECK(std::abs(residual) < 1e-4);
}

TEST_CASE("sandwich bounds") {
  const Bounds m1 = sandwich_bounds(-1.0, 0.0);
  CHECK(m1.lower == doctest::Approx(mu_fiber(-1.0, 0.0)).epsilon(1e-8));
  CHECK(m1.upper >= m1.lower);
  const Bounds h = sandwich_bounds(-0.5, -0.7);
  const double mu = mu_fiber(-0.5, -0.7);
  CHECK(h.lower < mu);
  CHECK(mu < h.upper);
  const Bounds p = sandwich_bounds(0.5, 0.0);
  CHECK(std::abs(p.lower - 0.5) < 1e-5);
  for (double xi : {-2.0, -0.5, 1.0, 3.0}) {
    const Bounds s = sandwich_bounds(0.5, xi);
    const double v = mu_fiber(0.5, xi);
    CHECK(s.lower <= v + 1e-6);
    CHECK(v <= s.upper + 1e-6);
  }
}

TEST_CASE("xi bracket") {
  const DispersionCurve c = beta(-1.0);
  const auto [x1, x2] = xi_bracket(-1.0, 1.2, c);
  CHECK(x1 < *c.zeta);
  CHECK(*c.zeta < x2);
  CHECK(std::abs(mu_fiber(-1.0, x1) - 1.0 / 1.2) < 1e-8);
  CHECK(std::abs(mu_fiber(-1.0, x2) - 1.0 / 1.2) < 1e-8);
  const auto [y1, y2] = xi_bracket(-1.0, 1.0 / c.beta - 1e-3, c);
  CHECK(y2 - y1 < 0.2);
  CHECK(y2 > y1);
  try {
    xi_bracket(-1.0, 1.0, c);
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
  CHECK_THROWS_AS(xi_bracket(-1.0, 1.0 / c.beta + 0.01, c), Error);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(mu_fiber(0.0, 0.0), Error);
  CHECK_THROWS_AS(mu_fiber(1.0, 0.0), Error);
  CHECK_THROWS_AS(mu_fiber(-1.5, 0.0), Error);
  FiberDisc tight;
  tight.truncation_neg = 1.0;
  tight.truncation_pos = 1.0;
  try {
    mu_fiber(-1.0, -0.8, tight);
    FAIL("expected truncation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Truncation);
  }
}

TEST_CASE("kink node sits on the grid") {
  const FiberOperator op = fiber_operator(-0.37, -0.9);
  const Grid1D g = op.grid();
  CHECK(std::abs(g.node(op.n_neg)) < 1e-12);
  CHECK(op.potential(-1.0) == doctest::Approx((-0.9 + 0.37) * (-0.9 + 0.37)));
}
