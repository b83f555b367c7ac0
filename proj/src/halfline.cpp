#include "glstep/halfline.hpp"

#include <algorithm>
#include <cmath>

#include "glstep/error.hpp"

namespace glstep {

namespace {

void check_params(const RobinParams& p) {
  if (!std::isfinite(p.gamma) || !std::isfinite(p.xi) || !std::isfinite(p.truncation))
    fail(ErrorKind::Input, "halfline: non-finite parameter");
  if (p.n < 4) fail(ErrorKind::Input, "halfline: need at least 4 nodes");
  if (!(p.truncation > 0.0)) fail(ErrorKind::Input, "halfline: truncation must be positive");
}

void check_tail(const std::vector<double>& u, double h, double truncation) {
  double tail = 0.0;
  for (std::size_t i = u.size() - 4; i < u.size(); ++i) tail += h * u[i] * u[i];
  if (tail > 1e-8)
    fail(ErrorKind::Truncation, "halfline: ground state mass near T=" +
                                    std::to_string(truncation) +
                                    " exceeds 1e-8; increase the truncation");
}

// Robin row 0 uses the ghost node u_{-1} = u_1 - 2 h gamma u_0. The resulting
// matrix is symmetrised by the trapezoid weights W = diag(1/2, 1, ...).
EigenResult solve_robin(const RobinParams& p, double tol) {
  check_params(p);
  const double h = p.truncation / static_cast<double>(p.n - 1);
  const std::size_t m = p.n - 1;  // unknowns 0..n-2
  std::vector<double> d(m), e(m - 1, -1.0 / (h * h));
  for (std::size_t i = 0; i < m; ++i) {
    const double t = static_cast<double>(i) * h - p.xi;
    d[i] = 2.0 / (h * h) + t * t;
  }
  d[0] += 2.0 * p.gamma / h;
  e[0] = -std::sqrt(2.0) / (h * h);

  EigenResult r = smallest_eigenpair(d, e, tol);
  std::vector<double> u(p.n, 0.0);
  const double s = 1.0 / std::sqrt(h);
  u[0] = r.vector[0] * std::sqrt(2.0) * s;
  for (std::size_t i = 1; i < m; ++i) u[i] = r.vector[i] * s;
  check_tail(u, h, p.truncation);
  r.vector = std::move(u);
  return r;
}

EigenResult solve_dirichlet(const RobinParams& p, double tol) {
  check_params(p);
  const double h = p.truncation / static_cast<double>(p.n - 1);
  const std::size_t m = p.n - 2;  // unknowns 1..n-2
  std::vector<double> d(m), e(m - 1, -1.0 / (h * h));
  for (std::size_t i = 0; i < m; ++i) {
    const double t = static_cast<double>(i + 1) * h - p.xi;
    d[i] = 2.0 / (h * h) + t * t;
  }
  EigenResult r = smallest_eigenpair(d, e, tol);
  std::vector<double> u(p.n, 0.0);
  const double s = 1.0 / std::sqrt(h);
  for (std::size_t i = 0; i < m; ++i) u[i + 1] = r.vector[i] * s;
  check_tail(u, h, p.truncation);
  r.vector = std::move(u);
  return r;
}

}  // namespace

RobinParams robin_params(double gamma, double xi, const HalflineDisc& disc) {
  if (!(disc.h > 0.0)) fail(ErrorKind::Input, "halfline: spacing must be positive");
  RobinParams p;
  p.gamma = gamma;
  p.xi = xi;
  const double want = std::max(disc.min_truncation, xi + disc.margin);
  const auto cells = static_cast<std::size_t>(std::ceil(want / disc.h - 1e-9));
  p.truncation = static_cast<double>(cells) * disc.h;
  p.n = cells + 1;
  return p;
}

double mu_robin(const RobinParams& p, double tol) { return solve_robin(p, tol).value; }

EigenResult ground_eigenfunction(const RobinParams& p, double tol) {
  return solve_robin(p, tol);
}

double mu_neumann(double xi, const HalflineDisc& disc) {
  return mu_robin(robin_params(0.0, xi, disc), disc.eigen_tol);
}

double mu_dirichlet(double xi, const HalflineDisc& disc) {
  return solve_dirichlet(robin_params(0.0, xi, disc), disc.eigen_tol).value;
}

EigenResult dirichlet_eigenfunction(double xi, const HalflineDisc& disc) {
  return solve_dirichlet(robin_params(0.0, xi, disc), disc.eigen_tol);
}

DeGennesPoint theta(double gamma, const HalflineDisc& disc) {
  if (!std::isfinite(gamma)) fail(ErrorKind::Input, "theta: gamma must be finite");
  // Theta < 1 puts the minimiser below sqrt(1 + gamma^2); for gamma > 0 it
  // also exceeds gamma since Theta > 0.
  double lo = std::max(gamma, 0.0) - 0.5;
  double hi = std::sqrt(1.0 + gamma * gamma) + 0.5;
  auto f = [&](double xi) { return mu_robin(robin_params(gamma, xi, disc), disc.eigen_tol); };
  for (int attempt = 0; attempt < 3; ++attempt) {
    ScalarMinimum r = minimize_scalar(f, lo, hi, disc.scalar_tol);
    if (!r.boundary_minimum) {
      DeGennesPoint out;
      out.gamma = gamma;
      out.theta = r.f;
      out.xi_star = r.x;
      out.phi0 = ground_eigenfunction(robin_params(gamma, r.x, disc), disc.eigen_tol).vector[0];
      return out;
    }
    const double w = hi - lo;
    if (r.at_lower)
      lo -= w;
    else
      hi += w;
  }
  fail(ErrorKind::Solver, "theta: minimiser stays on the bracket boundary after widening");
}

}  // namespace glstep
