#pragma once

#include <vector>

#include "glstep/fiber.hpp"
#include "glstep/strip2d.hpp"

namespace glstep {

struct SchedulePoint {
  double R = 0.0;
  double g = 0.0;
  double g_over_R = 0.0;
  double m = 0.0;  // m at which the ground energy stabilised
};

struct BarrierEnergyEstimate {
  double a = 0.0;
  double b = 0.0;
  std::vector<SchedulePoint> schedule;  // sorted by R
  double e_lower = 0.0;
  double e_upper = 0.0;
  double e_best = 0.0;
  bool analytic_zero = false;  // a > 0 or b >= 1/beta_a, no 2D solve
  // Least-squares fit g/R = fit_e + fit_c R^{-1/3} over the last three points.
  double fit_e = 0.0;
  double fit_c = 0.0;
  double fit_c_over_b2 = 0.0;
  // Diagnostic fit g/R = wall_e + wall_w / R over the same points.
  double wall_e = 0.0;
  double wall_w = 0.0;
};

struct BarrierOptions {
  std::vector<double> schedule{4, 6, 9, 13.5, 20};
  StripGroundOptions strip{};
  double monotone_tol = 1e-6;  // allowed rise of g/R between schedule points
};

BarrierEnergyEstimate barrier_energy(double a, double b, const DispersionCurve& curve,
                                     const BarrierOptions& opt = {});
BarrierEnergyEstimate barrier_energy(double a, double b, const BarrierOptions& opt = {});

struct EnergyBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Per-unit-length bounds: upper = -(1 - b beta)^2 / (2 nu); lower =
// b (b beta - 1) C with C = plain_mass / (b R) measured on a strip state.
EnergyBounds analytic_bounds(double a, double b, const DispersionCurve& curve, double mass_constant);

// Integrals of the strip cutoff theta on (-1/2, 1/2).
struct CutoffIntegrals {
  double square = 0.0;   // int theta^2
  double quartic = 0.0;  // int theta^4
  double slope = 0.0;    // int theta'^2
};
CutoffIntegrals cutoff_integrals();

// Finite-R sandwich for g_a(b, R):
//   (b beta - 1) int |phi|^2 <= g <= (1 - b beta)(-C2 R + C3 / R),
// C2 = (1 - b beta) A^2 / (2 Q nu), C3 = b A B / (Q nu) from the cutoff
// integrals A, Q, B. The lower side uses the mass of the computed state.
struct StripSandwich {
  double lower = 0.0;
  double upper = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};
StripSandwich strip_sandwich(double a, double b, double R, const DispersionCurve& curve, double state_mass);

struct ConjectureGap {
  double e2d = 0.0;
  double e1d = 0.0;
  double gap = 0.0;  // |e2d - e1d| / |e1d|
  BarrierEnergyEstimate estimate;
};

ConjectureGap conjecture_gap(double a, double b, const BarrierOptions& opt = {},
                             const FiberDisc& disc = {});

}  // namespace glstep
