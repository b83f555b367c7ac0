#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "glstep/halfline.hpp"
#include "glstep/numerics.hpp"

namespace glstep {

// Whole-line fiber operator -d^2/dt^2 + V_a(xi, t), with
// V_a = (xi + a t)^2 for t < 0 and (xi + t)^2 for t > 0.
struct FiberDisc {
  double h = 0.005;
  // Truncation rule: V_a >= mu_estimate + level_margin at both ends, and at
  // least decay_lengths decay lengths beyond each potential well.
  double level_margin = 25.0;
  double decay_lengths = 8.0;
  // Explicit truncations (positive lengths); 0 means use the rule.
  double truncation_neg = 0.0;
  double truncation_pos = 0.0;
  // Coarse window for the argmin of the band function.
  double scan_lo = -6.0;
  double scan_hi = 1.0;
  double scan_step = 0.05;
  double eigen_tol = Tolerances{}.eigen_residual;
  double scalar_tol = Tolerances{}.scalar_min;
};

struct FiberOperator {
  double a = -1.0;
  double xi = 0.0;
  double truncation_neg = 8.0;  // grid covers [-truncation_neg, truncation_pos]
  double truncation_pos = 8.0;
  double h = 0.005;
  std::size_t n_neg = 0;  // cells on each side; node n_neg sits at t = 0
  std::size_t n_pos = 0;

  std::size_t size() const noexcept { return n_neg + n_pos + 1; }
  Grid1D grid() const;
  double potential(double t) const noexcept;
};

FiberOperator fiber_operator(double a, double xi, const FiberDisc& disc = {});

struct FiberGround {
  FiberOperator op;
  double value = 0.0;
  std::vector<double> f;  // trapezoid-normalised, positive, zero at both ends
  double residual = 0.0;

  double at_zero() const { return f[op.n_neg]; }
};

FiberGround fiber_ground(const FiberOperator& op, double tol = Tolerances{}.eigen_residual);
FiberGround fiber_ground(double a, double xi, const FiberDisc& disc = {});

double mu_fiber(double a, double xi, const FiberDisc& disc = {});

// Band function on a list of xi values; OpenMP-parallel over xi when available.
std::vector<double> dispersion(double a, const std::vector<double>& xi,
                               const FiberDisc& disc = {});

struct DispersionCurve {
  double a = 0.0;
  std::vector<double> xi_samples;
  std::vector<double> mu_samples;
  double beta = 0.0;
  std::optional<double> zeta;  // argmin; absent on the decreasing branch a > 0
  double f0 = 0.0;             // f_{a,zeta}(0)
  double nu = 0.0;             // int phi_a^4
  bool near_tie = false;       // two coarse local minima within 1e-6
};

// Infimum of the band function. For a in (0,1) the infimum a is not attained
// and is returned without a scan.
DispersionCurve beta(double a, const FiberDisc& disc = {});

struct DeGennesParamSample {
  double xi = 0.0;
  double gamma_a = 0.0;  // mean of the one-sided estimates
  double gamma_left = 0.0;
  double gamma_right = 0.0;
};

DeGennesParamSample degennes_param(const FiberGround& g);
DeGennesParamSample degennes_param(double a, double xi, const FiberDisc& disc = {});

// Closed-form d mu_a / d xi from f(0) and gamma_a, a in [-1, 0).
double mu_fiber_derivative(double a, double xi, const FiberDisc& disc = {});

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Neumann lower and Dirichlet upper envelopes built from the half-line bands.
Bounds sandwich_bounds(double a, double xi, const HalflineDisc& disc = {});

struct TrialBound {
  double gamma = 0.0;
  double m = 0.0;
  double theta_gamma = 0.0;
  double phi0 = 0.0;
  double quotient = 0.0;     // sqrt|a| Theta(gamma) / (1/sqrt|a| + phi0^2 / (2m))
  double abs_a_theta = 0.0;  // |a| Theta(gamma)
};

// Explicit trial-state upper bound on the band minimum, a in (-1, 0).
TrialBound trial_upper_bound(double a, const HalflineDisc& disc = {});

// Roots xi1 < zeta < xi2 of mu_a(xi) = 1/b for 1/|a| < b < 1/beta_a.
std::pair<double, double> xi_bracket(double a, double b, const DispersionCurve& curve,
                                     const FiberDisc& disc = {});
std::pair<double, double> xi_bracket(double a, double b, const FiberDisc& disc = {});

}  // namespace glstep
