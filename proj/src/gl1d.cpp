#include "glstep/gl1d.hpp"

#include <algorithm>
#include <cmath>

#include "glstep/error.hpp"

namespace glstep {

GL1DProblem GL1DProblem::whole_line(double a, double b, double xi, const FiberOperator& grid) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(xi))
    fail(ErrorKind::Input, "gl1d: non-finite parameter");
  GL1DProblem p;
  p.half_ = false;
  p.a_ = a;
  p.b_ = b;
  p.xi_ = xi;
  p.h_ = grid.h;
  p.n_neg_ = grid.n_neg;
  p.n_pos_ = grid.n_pos;
  return p;
}

GL1DProblem GL1DProblem::half_line(double b, double xi, double truncation, double h) {
  if (!std::isfinite(b) || !std::isfinite(xi) || !(truncation > 0.0) || !(h > 0.0))
    fail(ErrorKind::Input, "gl1d: invalid half-line problem");
  GL1DProblem p;
  p.half_ = true;
  p.a_ = 1.0;
  p.b_ = b;
  p.xi_ = xi;
  p.h_ = h;
  p.n_neg_ = 0;
  p.n_pos_ = static_cast<std::size_t>(std::ceil(truncation / h - 1e-9));
  return p;
}

Grid1D GL1DProblem::grid() const {
  return Grid1D(-static_cast<double>(n_neg_) * h_, static_cast<double>(n_pos_) * h_, size());
}

double GL1DProblem::node(std::size_t i) const noexcept {
  return (static_cast<double>(i) - static_cast<double>(n_neg_)) * h_;
}

double GL1DProblem::potential(double t) const noexcept {
  const double s = moment_weight(t);
  return s * s;
}

double GL1DProblem::moment_weight(double t) const noexcept {
  return t < 0.0 ? a_ * t + xi_ : t + xi_;
}

std::vector<double> GL1DProblem::expand(std::span<const double> u) const {
  std::vector<double> f(size(), 0.0);
  std::copy(u.begin(), u.end(), f.begin() + static_cast<std::ptrdiff_t>(first_unknown()));
  return f;
}

double GL1DProblem::energy(std::span<const double> f) const {
  if (f.size() != size()) fail(ErrorKind::Input, "energy_1d: profile size does not match grid");
  double grad = 0.0, node_sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!std::isfinite(f[i])) fail(ErrorKind::Input, "energy_1d: NaN in profile");
    if (i + 1 < f.size()) grad += (f[i + 1] - f[i]) * (f[i + 1] - f[i]);
    const double w = (i == 0 || i + 1 == f.size()) ? 0.5 : 1.0;
    const double sq = f[i] * f[i];
    node_sum += w * ((b_ * potential(node(i)) - 1.0) * sq + 0.5 * sq * sq);
  }
  return b_ * grad / h_ + h_ * node_sum;
}

double GL1DProblem::energy_magnitude(std::span<const double> f) const {
  double grad = 0.0, node_sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i + 1 < f.size()) grad += (f[i + 1] - f[i]) * (f[i + 1] - f[i]);
    const double w = (i == 0 || i + 1 == f.size()) ? 0.5 : 1.0;
    const double sq = f[i] * f[i];
    node_sum += w * (std::abs(b_ * potential(node(i)) - 1.0) * sq + 0.5 * sq * sq);
  }
  return b_ * grad / h_ + h_ * node_sum;
}

double GL1DProblem::energy_and_gradient(std::span<const double> u, std::span<double> g) const {
  // Unknowns map to nodes first_unknown() .. first_unknown() + size - 1; the
  // remaining far-end node(s) are zero.
  const std::size_t off = first_unknown();
  const std::size_t m = u.size();
  const double c = b_ / h_;
  double e = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t i = k + off;
    const double fi = u[k];
    const double left = k > 0 ? u[k - 1] : 0.0;
    const double right = k + 1 < m ? u[k + 1] : 0.0;
    const bool neumann_end = half_ && k == 0;
    const double w = neumann_end ? 0.5 : 1.0;
    const double q = b_ * potential(node(i)) - 1.0;
    const double sq = fi * fi;
    e += c * (right - fi) * (right - fi);
    if (!neumann_end && k == 0) e += c * fi * fi;  // edge to the Dirichlet node
    e += h_ * w * (q * sq + 0.5 * sq * sq);
    const double lap = neumann_end ? (fi - right) : (2.0 * fi - left - right);
    g[k] = 2.0 * c * lap + 2.0 * h_ * w * (q * fi + sq * fi);
  }
  return e;
}

double GL1DProblem::moment(std::span<const double> f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double w = (i == 0 || i + 1 == f.size()) ? 0.5 : 1.0;
    s += w * moment_weight(node(i)) * f[i] * f[i];
  }
  return h_ * s;
}

double GL1DProblem::mass(std::span<const double> f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double w = (i == 0 || i + 1 == f.size()) ? 0.5 : 1.0;
    s += w * f[i] * f[i];
  }
  return h_ * s;
}

EigenResult GL1DProblem::linear_ground(double tol) const {
  const std::size_t m = unknown_count();
  const std::size_t off = first_unknown();
  const double h2 = h_ * h_;
  std::vector<double> d(m), e(m - 1, -1.0 / h2);
  for (std::size_t k = 0; k < m; ++k) d[k] = 2.0 / h2 + potential(node(k + off));
  if (half_) e[0] = -std::sqrt(2.0) / h2;
  EigenResult r = smallest_eigenpair(d, e, tol);
  std::vector<double> f(size(), 0.0);
  const double s = 1.0 / std::sqrt(h_);
  for (std::size_t k = 0; k < m; ++k) f[k + off] = r.vector[k] * s;
  if (half_) f[0] *= std::sqrt(2.0);
  r.vector = std::move(f);
  return r;
}

double energy_1d(const GL1DProblem& p, std::span<const double> values) {
  return p.energy(values);
}

namespace {

GLProfile1D make_profile(const GL1DProblem& p, std::vector<double> values) {
  GLProfile1D out;
  out.grid = p.grid();
  out.energy = p.energy(values);
  out.values = std::move(values);
  if (!p.half()) out.a = p.a();
  out.b = p.b();
  out.xi = p.xi();
  return out;
}

void check_whole_line(double a, double b) {
  if (!(a >= -1.0 && a < 0.0)) fail(ErrorKind::Domain, "gl1d: a must lie in [-1, 0)");
  if (!(b >= 1.0 / std::abs(a)))
    fail(ErrorKind::Domain, "gl1d: b must be at least 1/|a| = " + std::to_string(1.0 / std::abs(a)));
}

}  // namespace

GLProfile1D minimize_profile(const GL1DProblem& p, const Profile1DOptions& opt,
                             const std::vector<double>* warm_start) {
  const EigenResult lin = p.linear_ground();
  if (opt.shortcut_trivial && threshold_reached(p.b(), lin.value)) {
    GLProfile1D z = make_profile(p, std::vector<double>(p.size(), 0.0));
    z.trivial = true;
    z.converged = true;
    return z;
  }

  std::vector<double> full;
  if (opt.init == Profile1DOptions::Init::Constant) {
    full.assign(p.size(), opt.constant_amplitude);
    full.back() = 0.0;
    if (!p.half()) full.front() = 0.0;
  } else {
    double f4 = 0.0;
    for (std::size_t i = 0; i < lin.vector.size(); ++i) f4 += std::pow(lin.vector[i], 4);
    f4 *= p.spacing();
    const double t = std::sqrt(std::max(0.0, 1.0 - p.b() * lin.value) / f4);
    full = lin.vector;
    for (double& v : full) v = std::max(0.0, t * v);
  }
  // A warm start is used only if it beats the fresh init: a nearly vanishing
  // profile sits next to the stationary point 0 and would stall the descent.
  if (warm_start && warm_start->size() == p.size() && p.energy(*warm_start) < p.energy(full))
    full = *warm_start;

  std::vector<double> u(full.begin() + static_cast<std::ptrdiff_t>(p.first_unknown()),
                        full.begin() + static_cast<std::ptrdiff_t>(p.first_unknown() + p.unknown_count()));
  DescentOptions d = opt.descent;
  d.grad_norm_scale = 1.0 / std::sqrt(p.spacing());
  d.energy_scale = std::max(d.energy_scale, p.energy_magnitude(full));
  d.project = [](std::span<double> x) {
    for (double& v : x) v = std::max(v, 0.0);
  };
  // Hessian proxy 2 (b/h) L + 2 h w (b V + 1): the linear part shifted to be
  // positive definite.
  std::vector<double> pd(u.size()), pe(u.size() > 1 ? u.size() - 1 : 0, -2.0 * p.b() / p.spacing());
  for (std::size_t k = 0; k < u.size(); ++k) {
    const bool neumann_end = p.half() && k == 0;
    const double w = neumann_end ? 0.5 : 1.0;
    const double t = p.node(k + p.first_unknown());
    pd[k] = 2.0 * p.b() / p.spacing() * (neumann_end ? 1.0 : 2.0) +
            2.0 * p.spacing() * w * (p.b() * p.potential(t) + 1.0);
  }
  d.precondition = [&pd, &pe](std::span<const double> in, std::span<double> out) {
    solve_tridiagonal(pd, pe, in, out);
  };
  const DescentReport rep = minimize_energy(
      [&p](std::span<const double> x, std::span<double> g) { return p.energy_and_gradient(x, g); }, u, d);
  if (!rep.converged)
    throw SolverError("minimize_profile: descent stopped (" +
                          std::string(rep.status == DescentStatus::LineSearchFailed ? "line search" : "iteration cap") +
                          ") after " + std::to_string(rep.iterations) + " steps with gradient norm " +
                          sci(rep.grad_norm),
                      p.expand(u));
  GLProfile1D out = make_profile(p, p.expand(u));
  out.iterations = rep.iterations;
  out.grad_norm = rep.grad_norm;
  out.converged = true;
  return out;
}

GLProfile1D minimize_profile(double a, double b, double xi, const FiberDisc& disc,
                             const Profile1DOptions& opt) {
  check_whole_line(a, b);
  const FiberOperator op = fiber_operator(a, xi, disc);
  return minimize_profile(GL1DProblem::whole_line(a, b, xi, op), opt);
}

GL1DProblem problem_of(const GLProfile1D& f) {
  const double h = f.grid.spacing();
  if (!f.a) return GL1DProblem::half_line(f.b, f.xi, f.grid.right(), h);
  FiberOperator op;
  op.a = *f.a;
  op.xi = f.xi;
  op.h = h;
  op.n_neg = static_cast<std::size_t>(std::llround(-f.grid.left() / h));
  op.n_pos = f.grid.size() - 1 - op.n_neg;
  return GL1DProblem::whole_line(*f.a, f.b, f.xi, op);
}

double moment_identity_residual(const GL1DProblem& p, const GLProfile1D& f) {
  return p.moment(f.values);
}

double moment_identity_residual(const GLProfile1D& f) {
  return problem_of(f).moment(f.values);
}

namespace {

// Minimises xi -> E(xi) on [lo, hi] with warm-started profiles, then polishes
// xi by a secant step on the moment (dE/dxi = 2 b moment).
template <class MakeProblem>
OptimalXi optimise_xi(const MakeProblem& make, double lo, double hi, const Profile1DOptions& opt,
                      double scalar_tol) {
  OptimalXi out;
  out.bracket = {lo, hi};
  std::vector<double> warm;
  auto solve = [&](double xi) {
    const GL1DProblem p = make(xi);
    GLProfile1D prof;
    try {
      prof = minimize_profile(p, opt, warm.empty() ? nullptr : &warm);
    } catch (const SolverError& e) {
      throw SolverError(std::string(e.what()) + " at xi=" + std::to_string(xi), e.best_iterate());
    }
    if (!prof.trivial) warm = prof.values;
    ++out.evaluations;
    return prof;
  };
  const ScalarMinimum r = minimize_scalar([&](double xi) { return solve(xi).energy; }, lo, hi, scalar_tol);
  double xi = r.x;
  GLProfile1D best = solve(xi);
  for (int it = 0; it < 4 && !best.trivial; ++it) {
    const double m0 = make(xi).moment(best.values);
    const double dxi = 1e-4;
    GLProfile1D probe = solve(xi + dxi);
    const double m1 = make(xi + dxi).moment(probe.values);
    if (m1 == m0) break;
    const double next = xi - m0 * dxi / (m1 - m0);
    if (!(next > lo && next < hi) || std::abs(next - xi) > 1e-2) break;
    GLProfile1D cand = solve(next);
    if (cand.energy > best.energy + 1e-13 * std::abs(best.energy)) break;
    xi = next;
    best = std::move(cand);
    if (std::abs(make(xi).moment(best.values)) < 1e-12) break;
  }
  out.xi0 = xi;
  out.energy = best.energy;
  out.profile = std::move(best);
  return out;
}

}  // namespace

OptimalXi optimal_xi(double a, double b, const DispersionCurve& curve, const FiberDisc& disc,
                     const Profile1DOptions& opt) {
  check_whole_line(a, b);
  const auto [xi1, xi2] = xi_bracket(a, b, curve, disc);
  // One grid for the whole bracket so warm starts carry over.
  FiberOperator op = fiber_operator(a, xi1, disc);
  const FiberOperator op2 = fiber_operator(a, xi2, disc);
  op.n_neg = std::max(op.n_neg, op2.n_neg);
  op.n_pos = std::max(op.n_pos, op2.n_pos);
  auto make = [&](double xi) { return GL1DProblem::whole_line(a, b, xi, op); };
  OptimalXi out = optimise_xi(make, xi1, xi2, opt, disc.scalar_tol);
  out.bracket = {xi1, xi2};
  return out;
}

OptimalXi optimal_xi(double a, double b, const FiberDisc& disc, const Profile1DOptions& opt) {
  return optimal_xi(a, b, beta(a, disc), disc, opt);
}

SurfaceEnergySample surface_energy(double b, const HalflineDisc& disc, const Profile1DOptions& opt) {
  if (!std::isfinite(b) || b < 1.0) fail(ErrorKind::Domain, "surface_energy: b must be at least 1");
  SurfaceEnergySample s;
  s.b = b;
  const DeGennesPoint t0 = theta(0.0, disc);
  if (threshold_reached(b, t0.theta)) {
    s.value = 0.0;
    return s;
  }
  // The half-line potential (t + xi)^2 is the Neumann band at -xi, so the
  // nontrivial window in eta = -xi is mu^N(eta) < 1/b around xi(0).
  const double target = 1.0 / b;
  auto g = [&](double eta) { return mu_neumann(eta, disc) - target; };
  double step = 0.25;
  while (g(t0.xi_star - step) <= 0.0) step *= 2.0;
  const double eta1 = bisect_root(g, t0.xi_star - step, t0.xi_star, 1e-10);
  double eta2 = t0.xi_star + 6.0;  // for b = 1 the window is unbounded
  if (g(eta2) > 0.0) eta2 = bisect_root(g, t0.xi_star, eta2, 1e-10);

  const double truncation = std::max(disc.min_truncation, eta2 + disc.margin);
  auto make = [&](double xi) { return GL1DProblem::half_line(b, xi, truncation, disc.h); };
  const OptimalXi r = optimise_xi(make, -eta2, -eta1, opt, disc.scalar_tol);
  s.value = r.energy;
  s.xi0 = r.xi0;
  s.profile = r.profile;
  return s;
}

}  // namespace glstep
