#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "glstep/barrier.hpp"
#include "glstep/error.hpp"
#include "glstep/strip2d.hpp"

using namespace glstep;

namespace {

const DispersionCurve& curve_m1() {
  static const DispersionCurve c = beta(-1.0);
  return c;
}

StripDisc coarse(double R, double m, double h = 0.1) {
  StripDisc d;
  d.a = -1.0;
  d.b = 1.2;
  d.R = R;
  d.m = m;
  d.hx = h;
  d.hy = h;
  return d;
}

std::vector<double> wavy(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = 0.4 * std::sin(0.37 * static_cast<double>(k)) + 0.1;
  return x;
}

StripGroundOptions coarse_ground(double h = 0.1) {
  StripGroundOptions o;
  o.hx = h;
  o.hy = h;
  return o;
}

}  // namespace

TEST_CASE("disc validation") {
  StripDisc d = coarse(8, 6);
  CHECK_NOTHROW(d.validate());
  CHECK(d.nx() == 79);
  CHECK(d.ny() == 119);
  CHECK(std::abs(d.x2(d.zero_row())) < 1e-12);
  d.m = 3;
  CHECK_THROWS_AS(d.validate(), Error);
  d = coarse(8, 6);
  d.R = 8.03;
  CHECK_THROWS_AS(d.validate(), Error);
  CHECK(StripDisc::default_spacing(1.2) == 0.05);
  CHECK(StripDisc::default_spacing(100.0) == doctest::Approx(0.025));
}

TEST_CASE("serial and parallel kernels agree with finite differences") {
  StripDisc d = coarse(2, 4);
  d.a = -0.6;
  d.b = 2.0;
  const StripLattice lat(d);
  const std::vector<double> x = wavy(lat.unknowns());
  std::vector<double> gs(x.size()), gp(x.size());
  const double es = lat.energy_and_gradient(x, gs, Kernel::Serial);
  const double ep = lat.energy_and_gradient(x, gp, Kernel::Parallel);
  CHECK(es == doctest::Approx(ep).epsilon(1e-13));
  double worst = 0.0, scale = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    worst = std::max(worst, std::abs(gs[k] - gp[k]));
    scale = std::max(scale, std::abs(gs[k]));
  }
  CHECK(worst < 1e-12 * scale);
  EnergyFunction e = [&](std::span<const double> v, std::span<double> g) { return lat.energy_and_gradient(v, g); };
  const std::vector<double> fd = finite_difference_gradient(e, x, 1e-6);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    num += (fd[k] - gp[k]) * (fd[k] - gp[k]);
    den += gp[k] * gp[k];
  }
  CHECK(std::sqrt(num / den) < 1e-6);
  CHECK(lat.energy(x) == doctest::Approx(ep).epsilon(1e-14));
}

TEST_CASE("energy of simple states") {
  const StripDisc d = coarse(4, 4);
  StripState s;
  s.disc = d;
  s.psi.assign(d.nx() * d.ny(), 0.0);
  CHECK(strip_energy(s) == 0.0);

  // Above the barrier threshold any constant state costs energy.
  StripDisc hot = d;
  hot.b = 1.0 / curve_m1().beta + 0.05;
  s.disc = hot;
  for (double c : {0.05, 0.5, 1.0}) {
    s.psi.assign(hot.nx() * hot.ny(), c);
    CHECK(strip_energy(s) >= 0.0);
  }

  s.disc = d;
  const StripLattice lat(d);
  const std::vector<double> x = wavy(lat.unknowns());
  for (std::size_t n = 0; n < s.psi.size(); ++n) s.psi[n] = {x[2 * n], x[2 * n + 1]};
  const double e0 = strip_energy(s);
  for (double th : {0.4, 2.2, -1.3}) {
    StripState r = s;
    for (auto& z : r.psi) z *= std::polar(1.0, th);
    CHECK(std::abs(strip_energy(r) - e0) < 1e-12);
  }
  s.psi[3] = std::nan("");
  CHECK_THROWS_AS(strip_energy(s), Error);
}

TEST_CASE("preconditioner is symmetric positive definite") {
  const StripDisc d = coarse(2, 4);
  const StripLattice lat(d);
  const std::vector<double> u = wavy(lat.unknowns());
  std::vector<double> v(u.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = std::cos(0.11 * static_cast<double>(k));
  std::vector<double> mu(u.size()), mv(u.size());
  lat.precondition(u, mu);
  lat.precondition(v, mv);
  double uv = 0, vu = 0, uu = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    uv += u[k] * mv[k];
    vu += v[k] * mu[k];
    uu += u[k] * mu[k];
  }
  CHECK(uv == doctest::Approx(vu).epsilon(1e-10));
  CHECK(uu > 0.0);
}

TEST_CASE("cutoff and its integrals") {
  CHECK(strip_cutoff(0.0) == 1.0);
  CHECK(strip_cutoff(0.25) == 1.0);
  CHECK(strip_cutoff(0.5) == 0.0);
  CHECK(strip_cutoff(-0.4) == doctest::Approx(strip_cutoff(0.4)));
  const double h = 1e-6;
  for (double s : {-0.4, 0.3, 0.45})
    CHECK(strip_cutoff_derivative(s) ==
          doctest::Approx((strip_cutoff(s + h) - strip_cutoff(s - h)) / (2 * h)).epsilon(1e-6));
  // Closed forms for the cos^2 ramp.
  const CutoffIntegrals c = cutoff_integrals();
  CHECK(c.square == doctest::Approx(11.0 / 16.0).epsilon(1e-12));
  CHECK(c.quartic == doctest::Approx(163.0 / 256.0).epsilon(1e-12));
  CHECK(c.slope == doctest::Approx(M_PI * M_PI).epsilon(1e-12));
}

TEST_CASE("positive a at b above 1/a has the zero minimiser") {
  StripDisc d = coarse(6, 4);
  d.a = 0.5;
  d.b = 2.5;
  const DispersionCurve c = beta(0.5);
  const StripState z = minimize_strip(d, c);
  CHECK(z.energy == 0.0);
  StripOptions o;
  o.amplitude = 0.3;
  const StripState s = minimize_strip(d, c, o);
  CHECK(s.converged);
  CHECK(std::abs(s.energy) < 1e-10);
  CHECK(s.sup_norm < 1e-4);
}

TEST_CASE("narrow strip below the finite-width threshold returns exactly zero") {
  StripDisc d = coarse(4, 4);
  const StripState s = minimize_strip(d, beta(-1.0));
  CHECK(s.converged);
  CHECK(s.energy == 0.0);
  CHECK(s.sup_norm == 0.0);
}

TEST_CASE("ground state at a = -1, b = 1.2, R = 8") {
  StripDisc d;
  d.a = -1.0;
  d.b = 1.2;
  d.R = 8.0;
  d.m = 6.0;
  d.hx = d.hy = StripDisc::default_spacing(d.b);
  const StripState s = minimize_strip(d, curve_m1());
  REQUIRE(s.converged);
  CHECK(s.energy < 0.0);
  CHECK(s.sup_norm <= 1.0);
  CHECK(std::abs(s.energy - strip_energy(s)) < 1e-12);
  const DecayReport r = decay_diagnostics(s);
  const StripSandwich w = strip_sandwich(-1.0, 1.2, 8.0, curve_m1(), r.mass);
  CHECK(w.lower <= s.energy);
  CHECK(s.energy <= w.upper);
  // Trial state is an upper bound.
  CHECK(s.energy <= strip_trial_state(d, curve_m1()).energy);
  // Scaling identity at a critical point.
  CHECK(std::abs(s.energy + 0.5 * r.quartic) < 1e-6 * std::abs(s.energy));
  const StripLattice lat(d);
  std::vector<double> x(2 * s.psi.size());
  for (std::size_t n = 0; n < s.psi.size(); ++n) {
    x[2 * n] = s.psi[n].real();
    x[2 * n + 1] = s.psi[n].imag();
  }
  CHECK(lat.euler_lagrange_residual(x) < 1e-3);
}

TEST_CASE("m schedule: monotone and truncation independent") {
  const StripGround g = strip_ground_state(-1.0, 1.2, 8.0, curve_m1(), coarse_ground());
  REQUIRE(g.energies.size() >= 2);
  for (std::size_t k = 1; k < g.energies.size(); ++k) CHECK(g.energies[k] <= g.energies[k - 1] + 1e-9);
  CHECK(g.g == g.energies.back());

  const StripState s9 = minimize_strip(coarse(8, 9), curve_m1());
  const StripState s18 = minimize_strip(coarse(8, 18), curve_m1(), {}, &s9);
  CHECK(std::abs(s18.energy - s9.energy) < 1e-6);
  CHECK_THROWS_AS(strip_ground_state(-1.0, 0.9, 8.0, curve_m1()), Error);
}

TEST_CASE("width monotonicity and subadditivity") {
  const StripGroundOptions o = coarse_ground();
  const double g6 = strip_ground_state(-1.0, 1.2, 6.0, curve_m1(), o).g;
  const double g8 = strip_ground_state(-1.0, 1.2, 8.0, curve_m1(), o).g;
  const double g12 = strip_ground_state(-1.0, 1.2, 12.0, curve_m1(), o).g;
  CHECK(g8 <= g6 + 1e-8);
  CHECK(g12 <= g8 + 1e-8);
  CHECK(g12 <= 2.0 * g6 + 1e-6);
  CHECK(g12 / 12.0 <= g6 / 6.0 + 1e-6);
}

TEST_CASE("decay diagnostics") {
  StripState z;
  z.disc = coarse(4, 4);
  z.psi.assign(z.disc.nx() * z.disc.ny(), 0.0);
  const DecayReport r0 = decay_diagnostics(z);
  CHECK(r0.weighted_l2 == 0.0);
  CHECK(r0.weighted_l4 == 0.0);
  CHECK(r0.plain_mass == 0.0);

  const StripGroundOptions o = coarse_ground();
  std::vector<double> mass_c, l4_c;
  for (double R : {8.0, 12.0, 16.0}) {
    const StripGround g = strip_ground_state(-1.0, 1.2, R, curve_m1(), o);
    const DecayReport r = decay_diagnostics(g.state);
    CHECK(std::isfinite(r.weighted_l2));
    CHECK(r.weighted_l2 >= 0.0);
    CHECK(r.weighted_l4 >= 0.0);
    CHECK(r.plain_mass > r.mass);
    mass_c.push_back(r.mass_constant);
    l4_c.push_back(r.l4_constant);
  }
  const auto [mlo, mhi] = std::minmax_element(mass_c.begin(), mass_c.end());
  CHECK(*mhi < 2.0 * *mlo);
  const auto [llo, lhi] = std::minmax_element(l4_c.begin(), l4_c.end());
  CHECK(*lhi < 2.0 * *llo);
}

TEST_CASE("second-order convergence in the spacing") {
  std::vector<double> e;
  for (double h : {0.2, 0.1, 0.05}) e.push_back(minimize_strip(coarse(8, 6, h), curve_m1()).energy);
  const double order = std::log2((e[0] - e[1]) / (e[1] - e[2]));
  CHECK(order >= 1.7);
  CHECK(order <= 2.2);
}

TEST_CASE("binary dump round trip") {
  const StripState s = minimize_strip(coarse(6, 4), curve_m1());
  const auto path = std::filesystem::temp_directory_path() / "glstep_strip_dump.bin";
  write_strip_dump(s, path.string());
  CHECK(std::filesystem::file_size(path) == 8 * (6 + 2 * s.psi.size()));
  const StripState r = read_strip_dump(path.string());
  CHECK(r.disc.R == s.disc.R);
  CHECK(r.disc.hx == s.disc.hx);
  REQUIRE(r.psi.size() == s.psi.size());
  CHECK(std::equal(r.psi.begin(), r.psi.end(), s.psi.begin()));
  CHECK(r.energy == s.energy);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_strip_dump(path.string()), Error);
}
