#include "glstep/fiber.hpp"

#include <algorithm>
#include <cmath>

#include "glstep/error.hpp"
#include "glstep/parallel.hpp"

namespace glstep {

namespace {

void check_a(double a) {
  if (!std::isfinite(a) || a == 0.0 || a >= 1.0 || a < -1.0)
    fail(ErrorKind::Domain, "fiber: a must lie in [-1, 1) without 0");
}

void check_negative_a(double a, const char* who) {
  if (!(a >= -1.0 && a < 0.0))
    fail(ErrorKind::Domain, std::string(who) + ": a must lie in [-1, 0)");
}

std::size_t cells_for(double length, double h) {
  return std::max<std::size_t>(3, static_cast<std::size_t>(std::ceil(length / h - 1e-9)));
}

}  // namespace

Grid1D FiberOperator::grid() const {
  return Grid1D(-static_cast<double>(n_neg) * h, static_cast<double>(n_pos) * h, size());
}

double FiberOperator::potential(double t) const noexcept {
  const double s = t < 0.0 ? xi + a * t : xi + t;
  return s * s;
}

FiberOperator fiber_operator(double a, double xi, const FiberDisc& disc) {
  check_a(a);
  if (!std::isfinite(xi)) fail(ErrorKind::Input, "fiber: xi must be finite");
  if (!(disc.h > 0.0)) fail(ErrorKind::Input, "fiber: spacing must be positive");
  const double abs_a = std::abs(a);

  // Wells at t = -xi/a (left branch) and t = -xi (right branch).
  const double left_well = (-xi / a < 0.0) ? xi / a : 0.0;  // its distance from 0
  const double right_well = std::max(0.0, -xi);
  const bool no_well = a < 0.0 && xi > 0.0;
  const double mu_est = (no_well ? xi * xi : 0.0) + 5.0;
  const double s = std::sqrt(mu_est + disc.level_margin);

  const double sign = a < 0.0 ? 1.0 : -1.0;
  const double neg_level = std::max(0.0, s - sign * xi) / abs_a;
  const double neg_decay = std::abs(left_well) + disc.decay_lengths / std::sqrt(abs_a);
  const double pos_level = std::max(0.0, s - xi);
  const double pos_decay = right_well + disc.decay_lengths;

  FiberOperator op;
  op.a = a;
  op.xi = xi;
  op.h = disc.h;
  const double ln = disc.truncation_neg > 0.0 ? disc.truncation_neg : std::max(neg_level, neg_decay);
  const double lp = disc.truncation_pos > 0.0 ? disc.truncation_pos : std::max(pos_level, pos_decay);
  op.n_neg = cells_for(ln, disc.h);
  op.n_pos = cells_for(lp, disc.h);
  op.truncation_neg = static_cast<double>(op.n_neg) * disc.h;
  op.truncation_pos = static_cast<double>(op.n_pos) * disc.h;
  return op;
}

FiberGround fiber_ground(const FiberOperator& op, double tol) {
  const std::size_t n = op.size();
  const double h = op.h;
  const std::size_t m = n - 2;
  std::vector<double> d(m), e(m - 1, -1.0 / (h * h));
  for (std::size_t i = 0; i < m; ++i) {
    const double t = (static_cast<double>(i + 1) - static_cast<double>(op.n_neg)) * h;
    d[i] = 2.0 / (h * h) + op.potential(t);
  }
  EigenResult r = smallest_eigenpair(d, e, tol);
  FiberGround g;
  g.op = op;
  g.value = r.value;
  g.residual = r.residual;
  g.f.assign(n, 0.0);
  const double s = 1.0 / std::sqrt(h);
  for (std::size_t i = 0; i < m; ++i) g.f[i + 1] = r.vector[i] * s;

  double left = 0.0, right = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    left += h * g.f[i] * g.f[i];
    right += h * g.f[n - 1 - i] * g.f[n - 1 - i];
  }
  if (left > 1e-8 || right > 1e-8)
    fail(ErrorKind::Truncation, "fiber: ground state mass near the " +
                                    std::string(left > 1e-8 ? "left" : "right") +
                                    " cutoff exceeds 1e-8; increase the truncation");
  return g;
}

FiberGround fiber_ground(double a, double xi, const FiberDisc& disc) {
  return fiber_ground(fiber_operator(a, xi, disc), disc.eigen_tol);
}

double mu_fiber(double a, double xi, const FiberDisc& disc) {
  return fiber_ground(a, xi, disc).value;
}

std::vector<double> dispersion(double a, const std::vector<double>& xi, const FiberDisc& disc) {
  std::vector<double> mu(xi.size());
  parallel_for(xi.size(), [&](std::size_t i) { mu[i] = mu_fiber(a, xi[i], disc); });
  return mu;
}

DispersionCurve beta(double a, const FiberDisc& disc) {
  check_a(a);
  DispersionCurve c;
  c.a = a;
  if (a > 0.0) {
    c.beta = a;
    return c;
  }
  if (!(disc.scan_step > 0.0) || !(disc.scan_lo < disc.scan_hi))
    fail(ErrorKind::Input, "beta: invalid scan window");

  double lo = disc.scan_lo;
  std::size_t best = 0;
  for (int attempt = 0; attempt < 3; ++attempt) {
    const auto count = static_cast<std::size_t>(std::llround((disc.scan_hi - lo) / disc.scan_step)) + 1;
    c.xi_samples.resize(count);
    for (std::size_t i = 0; i < count; ++i)
      c.xi_samples[i] = lo + static_cast<double>(i) * disc.scan_step;
    c.mu_samples = dispersion(a, c.xi_samples, disc);
    best = static_cast<std::size_t>(
        std::min_element(c.mu_samples.begin(), c.mu_samples.end()) - c.mu_samples.begin());
    if (best > 0 && best + 1 < count) break;
    if (best + 1 == count)
      fail(ErrorKind::Solver, "beta: band minimum at the right end of the scan window");
    lo -= (disc.scan_hi - lo);
    if (attempt == 2) fail(ErrorKind::Solver, "beta: band minimum keeps sitting on the scan window");
  }

  // Coarse local minima; report a near tie between the two lowest.
  std::vector<std::size_t> minima;
  for (std::size_t i = 1; i + 1 < c.mu_samples.size(); ++i)
    if (c.mu_samples[i] <= c.mu_samples[i - 1] && c.mu_samples[i] <= c.mu_samples[i + 1])
      minima.push_back(i);
  for (std::size_t i : minima)
    if (i != best && std::abs(c.mu_samples[i] - c.mu_samples[best]) < 1e-6) {
      c.near_tie = true;
      best = std::min(best, i);
    }

  auto f = [&](double xi) { return mu_fiber(a, xi, disc); };
  const ScalarMinimum r =
      minimize_scalar(f, c.xi_samples[best - 1], c.xi_samples[best + 1], disc.scalar_tol);
  const FiberGround g = fiber_ground(a, r.x, disc);
  c.beta = g.value;
  c.zeta = r.x;
  c.f0 = g.at_zero();
  std::vector<double> f4(g.f.size());
  for (std::size_t i = 0; i < f4.size(); ++i) f4[i] = std::pow(g.f[i], 4);
  c.nu = trapezoid(g.op.grid(), f4);
  return c;
}

DeGennesParamSample degennes_param(const FiberGround& g) {
  const std::size_t k = g.op.n_neg;
  const auto& f = g.f;
  const double h = g.op.h;
  if (!(f[k] > 1e-12)) fail(ErrorKind::Conditioning, "degennes_param: f(0) below 1e-12");
  DeGennesParamSample s;
  s.xi = g.op.xi;
  s.gamma_left = (3 * f[k] - 4 * f[k - 1] + f[k - 2]) / (2 * h) / f[k];
  s.gamma_right = (-3 * f[k] + 4 * f[k + 1] - f[k + 2]) / (2 * h) / f[k];
  s.gamma_a = 0.5 * (s.gamma_left + s.gamma_right);
  return s;
}

DeGennesParamSample degennes_param(double a, double xi, const FiberDisc& disc) {
  return degennes_param(fiber_ground(a, xi, disc));
}

double mu_fiber_derivative(double a, double xi, const FiberDisc& disc) {
  check_negative_a(a, "mu_fiber_derivative");
  const FiberGround g = fiber_ground(a, xi, disc);
  const DeGennesParamSample s = degennes_param(g);
  const double f0 = g.at_zero();
  return (1.0 - 1.0 / a) * (s.gamma_a * s.gamma_a + g.value - xi * xi) * f0 * f0;
}

Bounds sandwich_bounds(double a, double xi, const HalflineDisc& disc) {
  check_a(a);
  const double abs_a = std::abs(a);
  const double scaled = a > 0.0 ? xi / std::sqrt(abs_a) : -xi / std::sqrt(abs_a);
  Bounds b;
  b.lower = std::min(mu_neumann(-xi, disc), abs_a * mu_neumann(scaled, disc));
  b.upper = std::min(mu_dirichlet(-xi, disc), abs_a * mu_dirichlet(scaled, disc));
  return b;
}

TrialBound trial_upper_bound(double a, const HalflineDisc& disc) {
  if (!(a > -1.0 && a < 0.0))
    fail(ErrorKind::Domain, "trial_upper_bound: a must lie in (-1, 0)");
  const double abs_a = -a;
  TrialBound t;
  t.gamma = std::sqrt(1.0 / (2.0 * abs_a * (1.0 - abs_a)));
  t.m = std::sqrt(abs_a) * t.gamma;
  const DeGennesPoint p = theta(t.gamma, disc);
  t.theta_gamma = p.theta;
  t.phi0 = p.phi0;
  t.quotient = std::sqrt(abs_a) * p.theta / (1.0 / std::sqrt(abs_a) + p.phi0 * p.phi0 / (2.0 * t.m));
  t.abs_a_theta = abs_a * p.theta;
  return t;
}

std::pair<double, double> xi_bracket(double a, double b, const DispersionCurve& curve,
                                     const FiberDisc& disc) {
  check_negative_a(a, "xi_bracket");
  if (!curve.zeta) fail(ErrorKind::Input, "xi_bracket: curve has no minimiser");
  if (!(b > 1.0 / std::abs(a)))
    fail(ErrorKind::Domain, "xi_bracket: b must exceed 1/|a| = " + std::to_string(1.0 / std::abs(a)));
  if (threshold_reached(b, curve.beta))
    fail(ErrorKind::Domain, "xi_bracket: b must stay below 1/beta_a = " + std::to_string(1.0 / curve.beta));
  const double target = 1.0 / b;
  auto g = [&](double xi) { return mu_fiber(a, xi, disc) - target; };
  const double z = *curve.zeta;

  double step = 0.25;
  double left = z - step;
  while (g(left) <= 0.0) {
    step *= 2.0;
    left = z - step;
    if (step > 1e3) fail(ErrorKind::Solver, "xi_bracket: no left root found");
  }
  step = 0.25;
  double right = z + step;
  while (g(right) <= 0.0) {
    step *= 2.0;
    right = z + step;
    if (step > 1e3) fail(ErrorKind::Solver, "xi_bracket: no right root found");
  }
  const double xi1 = bisect_root(g, left, z, 1e-12);
  const double xi2 = bisect_root(g, z, right, 1e-12);
  return {xi1, xi2};
}

std::pair<double, double> xi_bracket(double a, double b, const FiberDisc& disc) {
  return xi_bracket(a, b, beta(a, disc), disc);
}

}  // namespace glstep
