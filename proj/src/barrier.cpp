#include "glstep/barrier.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "glstep/error.hpp"
#include "glstep/gl1d.hpp"
#include "glstep/parallel.hpp"

namespace glstep {

namespace {

struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  if (!(std::abs(den) > 0.0)) fail(ErrorKind::Conditioning, "barrier: degenerate fit abscissae");
  LineFit f;
  f.slope = (n * sxy - sx * sy) / den;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

}  // namespace

BarrierEnergyEstimate barrier_energy(double a, double b, const DispersionCurve& curve,
                                     const BarrierOptions& opt) {
  BarrierEnergyEstimate est;
  est.a = a;
  est.b = b;
  if (!std::isfinite(a) || !std::isfinite(b) || a == 0.0 || a < -1.0 || a >= 1.0)
    fail(ErrorKind::Domain, "barrier_energy: a must lie in [-1, 1) without 0");
  if (a > 0.0 || threshold_reached(b, curve.beta)) {
    est.analytic_zero = true;
    return est;
  }
  if (!(b >= 1.0 / std::abs(a)))
    fail(ErrorKind::Domain, "barrier_energy: b must be at least 1/|a| = " + std::to_string(1.0 / std::abs(a)));
  std::vector<double> rs = opt.schedule;
  std::sort(rs.begin(), rs.end());
  if (rs.size() < 2) fail(ErrorKind::Input, "barrier_energy: schedule needs at least two widths");

  std::vector<StripGround> runs(rs.size());
  parallel_for(rs.size(), [&](std::size_t k) { runs[k] = strip_ground_state(a, b, rs[k], curve, opt.strip); });
  for (std::size_t k = 0; k < rs.size(); ++k) {
    SchedulePoint p;
    p.R = rs[k];
    p.g = runs[k].g;
    p.g_over_R = p.g / p.R;
    p.m = runs[k].m_values.back();
    est.schedule.push_back(p);
  }
  for (std::size_t k = 1; k < est.schedule.size(); ++k)
    if (est.schedule[k].g_over_R > est.schedule[k - 1].g_over_R + opt.monotone_tol)
      fail(ErrorKind::Solver, "barrier_energy: g/R rises from R=" + std::to_string(est.schedule[k - 1].R) +
                                  " to R=" + std::to_string(est.schedule[k].R) +
                                  "; resolution too coarse, refine hx, hy");

  const std::size_t first = est.schedule.size() > 3 ? est.schedule.size() - 3 : 0;
  std::vector<double> x, xw, y;
  for (std::size_t k = first; k < est.schedule.size(); ++k) {
    x.push_back(std::cbrt(1.0 / est.schedule[k].R));
    xw.push_back(1.0 / est.schedule[k].R);
    y.push_back(est.schedule[k].g_over_R);
  }
  const LineFit f = least_squares(x, y);
  est.fit_e = f.intercept;
  est.fit_c = f.slope;
  est.fit_c_over_b2 = f.slope / (b * b);
  const LineFit w = least_squares(xw, y);
  est.wall_e = w.intercept;
  est.wall_w = w.slope;

  est.e_upper = 0.0;
  est.e_lower = -1e300;
  for (const SchedulePoint& p : est.schedule) {
    est.e_upper = std::min(est.e_upper, p.g_over_R);
    est.e_lower = std::max(est.e_lower, p.g_over_R - est.fit_c * std::cbrt(1.0 / p.R));
  }
  est.e_best = std::clamp(est.fit_e, std::min(est.e_lower, est.e_upper), est.e_upper);
  return est;
}

BarrierEnergyEstimate barrier_energy(double a, double b, const BarrierOptions& opt) {
  if (a > 0.0) {
    BarrierEnergyEstimate est;
    est.a = a;
    est.b = b;
    est.analytic_zero = true;
    return est;
  }
  return barrier_energy(a, b, beta(a), opt);
}

EnergyBounds analytic_bounds(double a, double b, const DispersionCurve& curve, double mass_constant) {
  if (!(a >= -1.0 && a < 0.0)) fail(ErrorKind::Domain, "analytic_bounds: a must lie in [-1, 0)");
  EnergyBounds e;
  const double gap = 1.0 - b * curve.beta;
  if (threshold_reached(b, curve.beta)) return e;
  if (!(b >= 1.0 / std::abs(a)))
    fail(ErrorKind::Domain, "analytic_bounds: b must be at least 1/|a| = " + std::to_string(1.0 / std::abs(a)));
  e.upper = -gap * gap / (2.0 * curve.nu);
  e.lower = -b * gap * mass_constant;
  return e;
}

CutoffIntegrals cutoff_integrals() {
  using boost::math::quadrature::gauss_kronrod;
  auto integrate = [](auto f) {
    // theta is smooth on each piece; integrate the ramp and double it.
    return 2.0 * gauss_kronrod<double, 31>::integrate(f, 0.25, 0.5, 10, 1e-14);
  };
  CutoffIntegrals c;
  c.square = 0.5 + integrate([](double s) { return std::pow(strip_cutoff(s), 2); });
  c.quartic = 0.5 + integrate([](double s) { return std::pow(strip_cutoff(s), 4); });
  c.slope = integrate([](double s) { return std::pow(strip_cutoff_derivative(s), 2); });
  return c;
}

StripSandwich strip_sandwich(double a, double b, double R, const DispersionCurve& curve, double state_mass) {
  if (!(a >= -1.0 && a < 0.0)) fail(ErrorKind::Domain, "strip_sandwich: a must lie in [-1, 0)");
  StripSandwich s;
  const double gap = 1.0 - b * curve.beta;
  if (threshold_reached(b, curve.beta)) return s;
  const CutoffIntegrals c = cutoff_integrals();
  s.c2 = gap * c.square * c.square / (2.0 * c.quartic * curve.nu);
  s.c3 = b * c.square * c.slope / (c.quartic * curve.nu);
  s.upper = gap * (-s.c2 * R + s.c3 / R);
  s.lower = -gap * state_mass;
  return s;
}

ConjectureGap conjecture_gap(double a, double b, const BarrierOptions& opt, const FiberDisc& disc) {
  if (!(a >= -1.0 && a < 0.0)) fail(ErrorKind::Domain, "conjecture_gap: a must lie in [-1, 0)");
  const DispersionCurve curve = beta(a, disc);
  ConjectureGap out;
  if (threshold_reached(b, curve.beta)) {
    out.estimate.a = a;
    out.estimate.b = b;
    out.estimate.analytic_zero = true;
    return out;
  }
  out.estimate = barrier_energy(a, b, curve, opt);
  out.e2d = out.estimate.e_best;
  out.e1d = optimal_xi(a, b, curve, disc).energy;
  out.gap = std::abs(out.e2d - out.e1d) / std::abs(out.e1d);
  return out;
}

}  // namespace glstep
