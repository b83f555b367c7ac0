#pragma once

#include <cstddef>

#include "glstep/numerics.hpp"

namespace glstep {

// Discretisation knobs for the half-line family -d^2/dt^2 + (t - xi)^2.
struct HalflineDisc {
  double h = 0.005;
  double min_truncation = 12.0;
  double margin = 8.0;  // truncation >= xi + margin
  double eigen_tol = Tolerances{}.eigen_residual;
  double scalar_tol = Tolerances{}.scalar_min;
};

struct RobinParams {
  double gamma = 0.0;  // u'(0) = gamma u(0)
  double xi = 0.0;
  double truncation = 12.0;
  std::size_t n = 2401;  // nodes on [0, truncation], Dirichlet at the far end
};

// Parameters following the default truncation rule
// T = max(min_truncation, xi + margin) at spacing disc.h.
RobinParams robin_params(double gamma, double xi, const HalflineDisc& disc = {});

struct DeGennesPoint {
  double gamma = 0.0;
  double theta = 0.0;
  double xi_star = 0.0;
  double phi0 = 0.0;
};

double mu_robin(const RobinParams& p, double tol = Tolerances{}.eigen_residual);
double mu_neumann(double xi, const HalflineDisc& disc = {});
double mu_dirichlet(double xi, const HalflineDisc& disc = {});

// Ground state on the grid t_i = i*h, i = 0..n-1 (value 0 at the far end).
// The vector is normalised so that the trapezoid rule gives int phi^2 = 1.
EigenResult ground_eigenfunction(const RobinParams& p,
                                 double tol = Tolerances{}.eigen_residual);
EigenResult dirichlet_eigenfunction(double xi, const HalflineDisc& disc = {});

// Theta(gamma) = min over xi of mu(gamma, xi), with the minimiser and phi(0).
DeGennesPoint theta(double gamma, const HalflineDisc& disc = {});

}  // namespace glstep
