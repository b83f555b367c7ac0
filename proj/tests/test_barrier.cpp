#include <cmath>

#include "doctest.h"
#include "glstep/barrier.hpp"
#include "glstep/error.hpp"
#include "glstep/halfline.hpp"

using namespace glstep;

namespace {

const DispersionCurve& curve_m1() {
  static const DispersionCurve c = beta(-1.0);
  return c;
}

BarrierOptions coarse(std::vector<double> schedule) {
  BarrierOptions o;
  o.schedule = std::move(schedule);
  o.strip.hx = o.strip.hy = 0.1;
  return o;
}

// Largest b in [lo, hi] with a negative strip energy at width R.
double strip_threshold(double R, double lo, double hi, const StripGroundOptions& o) {
  for (int it = 0; it < 10; ++it) {
    const double b = 0.5 * (lo + hi);
    (strip_ground_state(-1.0, b, R, curve_m1(), o).g < -1e-10 ? lo : hi) = b;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("vanishing branches need no strip solve") {
  const BarrierEnergyEstimate p = barrier_energy(0.5, 2.5);
  CHECK(p.analytic_zero);
  CHECK(p.e_best == 0.0);
  CHECK(p.schedule.empty());
  const double theta0 = theta(0.0).theta;
  for (double b : {1.0 / theta0, 1.0 / theta0 + 0.05, 2.5}) {
    const BarrierEnergyEstimate e = barrier_energy(-1.0, b, curve_m1());
    CHECK(e.analytic_zero);
    CHECK(e.e_best == 0.0);
  }
  CHECK_THROWS_AS(barrier_energy(-1.0, 0.9, curve_m1()), Error);
  CHECK_THROWS_AS(barrier_energy(0.0, 2.0), Error);
  CHECK_THROWS_AS(barrier_energy(-1.0, 1.2, curve_m1(), coarse({8})), Error);
}

TEST_CASE("analytic bounds") {
  const DispersionCurve& c = curve_m1();
  const EnergyBounds e = analytic_bounds(-1.0, 1.2, c, 1.0);
  CHECK(e.upper < 0.0);
  CHECK(e.lower < e.upper);
  const EnergyBounds z = analytic_bounds(-1.0, 1.0 / c.beta + 1e-3, c, 1.0);
  CHECK(z.lower == 0.0);
  CHECK(z.upper == 0.0);
  // Quadratic vanishing at the threshold.
  const double b1 = 1.0 / c.beta - 0.02, b2 = 1.0 / c.beta - 0.01;
  const double r1 = analytic_bounds(-1.0, b1, c, 1.0).upper / std::pow(1.0 - b1 * c.beta, 2);
  const double r2 = analytic_bounds(-1.0, b2, c, 1.0).upper / std::pow(1.0 - b2 * c.beta, 2);
  CHECK(r1 == doctest::Approx(r2).epsilon(1e-14));
  CHECK(r1 == doctest::Approx(-1.0 / (2.0 * c.nu)));
  CHECK_THROWS_AS(analytic_bounds(0.5, 2.5, c, 1.0), Error);
}

TEST_CASE("finite-width sandwich") {
  const DispersionCurve& c = curve_m1();
  const StripSandwich s = strip_sandwich(-1.0, 1.2, 8.0, c, 2.0);
  const double gap = 1.0 - 1.2 * c.beta;
  CHECK(s.lower == doctest::Approx(-gap * 2.0));
  CHECK(s.c2 == doctest::Approx(gap * (11.0 / 16) * (11.0 / 16) / (2 * (163.0 / 256) * c.nu)));
  CHECK(s.c3 == doctest::Approx(1.2 * (11.0 / 16) * M_PI * M_PI / ((163.0 / 256) * c.nu)));
  // The upper side tends to the analytic density per unit width.
  const double R = 1e6;
  CHECK(strip_sandwich(-1.0, 1.2, R, c, 0.0).upper / R ==
        doctest::Approx(-gap * s.c2).epsilon(1e-9));
  CHECK(-gap * s.c2 >= analytic_bounds(-1.0, 1.2, c, 0.0).upper);
  const StripSandwich z = strip_sandwich(-1.0, 1.8, 8.0, c, 2.0);
  CHECK(z.upper == 0.0);
  CHECK(z.lower == 0.0);
}

TEST_CASE("schedule estimate is bracketed and consistent") {
  const BarrierEnergyEstimate e = barrier_energy(-1.0, 1.2, curve_m1(), coarse({13.5, 6, 9}));
  REQUIRE(e.schedule.size() == 3);
  CHECK(e.schedule[0].R == 6);
  CHECK(e.schedule[2].R == 13.5);
  double lowest = 0.0;
  for (const SchedulePoint& p : e.schedule) {
    CHECK(p.g < 0.0);
    CHECK(p.g_over_R == doctest::Approx(p.g / p.R).epsilon(1e-15));
    lowest = std::min(lowest, p.g_over_R);
  }
  CHECK(e.e_upper == lowest);
  CHECK(e.e_upper <= 0.0);
  CHECK(e.e_best <= e.e_upper);
  CHECK(e.e_best >= std::min(e.e_lower, e.e_upper));
  // Normal equations of both fits.
  double r0 = 0, r1 = 0, w0 = 0, w1 = 0;
  for (const SchedulePoint& p : e.schedule) {
    const double x = std::cbrt(1.0 / p.R), y = 1.0 / p.R;
    const double rf = p.g_over_R - e.fit_e - e.fit_c * x;
    const double rw = p.g_over_R - e.wall_e - e.wall_w * y;
    r0 += rf;
    r1 += rf * x;
    w0 += rw;
    w1 += rw * y;
  }
  CHECK(std::abs(r0) < 1e-12);
  CHECK(std::abs(r1) < 1e-12);
  CHECK(std::abs(w0) < 1e-12);
  CHECK(std::abs(w1) < 1e-12);
  CHECK(e.fit_c_over_b2 == doctest::Approx(e.fit_c / 1.44));
  CHECK(e.e_best <= analytic_bounds(-1.0, 1.2, curve_m1(), 0.0).upper);
}

TEST_CASE("monotone in b") {
  const BarrierOptions o = coarse({6, 9, 13.5});
  double prev = -1e300;
  for (double b : {1.2, 1.35, 1.5}) {
    const BarrierEnergyEstimate e = barrier_energy(-1.0, b, curve_m1(), o);
    const double slack = e.e_upper - std::min(e.e_lower, e.e_upper);
    CHECK(e.e_best >= prev - slack);
    CHECK(e.e_upper >= prev);
    prev = e.e_upper;
  }
}

TEST_CASE("finite-width threshold extrapolates to 1/beta") {
  // The Dirichlet sides lift the linear threshold by O(R^-2); the located
  // zero of g at widths 12 and 16 is extrapolated in 1/R^2.
  StripGroundOptions o;
  o.hx = o.hy = 0.1;
  const double b12 = strip_threshold(12.0, 1.5, 1.7, o);
  const double b16 = strip_threshold(16.0, 1.5, 1.7, o);
  const double c = curve_m1().beta;
  CHECK(b12 < b16);
  CHECK(b16 < 1.0 / c);
  const double k = (1.0 / b12 - 1.0 / b16) / (1.0 / 144.0 - 1.0 / 256.0);
  const double b_inf = 1.0 / (1.0 / b16 - k / 256.0);
  CHECK(std::abs(b_inf - 1.0 / c) < 5e-3);
}

TEST_CASE("conjecture comparison") {
  const ConjectureGap z = conjecture_gap(-1.0, 1.75);
  CHECK(z.e2d == 0.0);
  CHECK(z.e1d == 0.0);
  CHECK(z.gap == 0.0);
  CHECK(z.estimate.analytic_zero);
  CHECK_THROWS_AS(conjecture_gap(0.5, 2.5), Error);
}
