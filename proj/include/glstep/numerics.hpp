#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace glstep {

// Central tolerance defaults. Every module takes these by value so a
// config file can override them per run.
struct Tolerances {
  double eigen_residual = 1e-10;
  double scalar_min = 1e-8;
  double descent_grad = 1e-7;
};

// b*lambda = 1 counts as reached within the relative accuracy of the
// computed spectral constants (Theta0 and beta_a agree to ~1e-12 at a = -1).
inline constexpr double kThresholdRelTol = 1e-9;
inline bool threshold_reached(double b, double lambda) { return b * lambda >= 1.0 - kThresholdRelTol; }

// Uniform grid on [left, right] with n nodes; node i sits at left + i*spacing.
class Grid1D {
 public:
  Grid1D(double left, double right, std::size_t n);

  // Grid with prescribed spacing; right is moved outward so that
  // (right - left) is an integer multiple of h.
  static Grid1D with_spacing(double left, double right, double h);

  double left() const noexcept { return left_; }
  double right() const noexcept { return right_; }
  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return h_; }
  double node(std::size_t i) const noexcept {
    return left_ + static_cast<double>(i) * h_;
  }
  std::vector<double> nodes() const;
  // Composite trapezoid weights (h/2 at both ends, h inside).
  std::vector<double> trapezoid_weights() const;

 private:
  double left_;
  double right_;
  std::size_t n_;
  double h_;
};

// Trapezoid quadrature of samples on g.
double trapezoid(const Grid1D& g, std::span<const double> values);

struct EigenResult {
  double value = 0.0;
  std::vector<double> vector;  // unit Euclidean norm, positive mean
  double residual = 0.0;       // ||(A - value I) vector||_2
};

// Number of eigenvalues of the symmetric tridiagonal matrix strictly below x
// (Sturm sequence / LDL^T inertia).
std::size_t count_eigenvalues_below(std::span<const double> diag,
                                    std::span<const double> offdiag, double x);

// Smallest eigenpair of a symmetric tridiagonal matrix: the eigenvalue is
// located by Sturm bisection, the vector by shifted inverse iteration with a
// tridiagonal LU factorisation started from the all-ones vector.
// The residual check is relative: residual <= tol * max(1, ||A||_inf).
EigenResult smallest_eigenpair(std::span<const double> diag,
                               std::span<const double> offdiag,
                               double tol = Tolerances{}.eigen_residual);

// k-th eigenpair (k = 0 smallest). For k > 0 the iterate is kept orthogonal
// to the lower eigenvectors (deflation).
EigenResult eigenpair(std::span<const double> diag,
                      std::span<const double> offdiag, std::size_t k,
                      double tol = Tolerances{}.eigen_residual);

struct ScalarMinimum {
  double x = 0.0;
  double f = 0.0;
  bool boundary_minimum = false;  // minimum sits on lo or hi; widen and retry
  bool at_lower = false;          // which end, when boundary_minimum
  int evaluations = 0;
};

// Brent minimisation (golden section with parabolic steps) on [lo, hi].
// An endpoint whose value is within 1e-10 (relative) of the interior minimum
// is reported as a boundary minimum.
ScalarMinimum minimize_scalar(const std::function<double(double)>& f,
                              double lo, double hi,
                              double tol = Tolerances{}.scalar_min,
                              int max_iter = 200);

// x -> energy, writing dE/dx into grad (grad.size() == x.size()).
using EnergyFunction =
    std::function<double(std::span<const double> x, std::span<double> grad)>;

struct DescentOptions {
  double grad_tol = Tolerances{}.descent_grad;
  int max_iter = 20000;
  int memory = 12;  // L-BFGS history length
  // Scales the Euclidean gradient norm before comparing to grad_tol; lets
  // grid functionals test an L^2-density norm instead of the raw one.
  double grad_norm_scale = 1.0;
  // Optional projection applied to every trial point before the line-search
  // test, so accepted iterates are always feasible.
  std::function<void(std::span<double>)> project;
  // Optional approximate inverse Hessian out = M^{-1} in, used as the initial
  // L-BFGS matrix. M must be symmetric positive definite.
  std::function<void(std::span<const double> in, std::span<double> out)> precondition;
  // Magnitude of the terms summed into the energy; sets the round-off floor
  // together with |E| and the starting energy.
  double energy_scale = 0.0;
};

enum class DescentStatus { Converged, MaxIterations, LineSearchFailed };

struct DescentReport {
  double energy = 0.0;
  int iterations = 0;
  double grad_norm = 0.0;  // scaled by grad_norm_scale
  bool converged = false;
  DescentStatus status = DescentStatus::MaxIterations;
  std::vector<double> history;  // energy after every accepted step
};

// Limited-memory BFGS with Armijo backtracking. `state` is updated in place
// and always holds the last accepted iterate. Once the decrease falls below
// round-off, steps within 16 eps max(|E|, |E_0|, energy_scale) of the current energy are accepted when
// the directional derivative shrinks, so the energy history is
// non-increasing up to that round-off margin.
DescentReport minimize_energy(const EnergyFunction& energy,
                              std::vector<double>& state,
                              const DescentOptions& options = {});

// Central-difference gradient, used to test analytic gradients.
std::vector<double> finite_difference_gradient(const EnergyFunction& energy,
                                               std::span<const double> x,
                                               double step);

// Solves T x = rhs for a symmetric tridiagonal T (Thomas algorithm, no
// pivoting; T should be diagonally dominant or positive definite).
void solve_tridiagonal(std::span<const double> diag, std::span<const double> offdiag,
                       std::span<const double> rhs, std::span<double> x);

// Bisection root of f on [lo, hi]; f(lo) and f(hi) must differ in sign.
double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double xtol, int max_iter = 200);

}  // namespace glstep
