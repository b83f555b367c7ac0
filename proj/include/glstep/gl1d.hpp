#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "glstep/fiber.hpp"
#include "glstep/halfline.hpp"
#include "glstep/numerics.hpp"

namespace glstep {

// Discrete 1D Ginzburg-Landau functional
//   int b|f'|^2 + b V f^2 - f^2 + f^4/2
// on either the whole line (V = V_a(xi, t), node at t = 0, Dirichlet far
// ends) or the half-line (V = (t + xi)^2, natural Neumann at 0). The
// gradient term is summed over grid edges, so the quadratic part is exactly
// h f^T (b A - I) f for the matrix A of the linear eigenproblem.
class GL1DProblem {
 public:
  static GL1DProblem whole_line(double a, double b, double xi, const FiberOperator& grid);
  static GL1DProblem half_line(double b, double xi, double truncation, double h);

  bool half() const noexcept { return half_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double xi() const noexcept { return xi_; }
  double spacing() const noexcept { return h_; }
  Grid1D grid() const;
  std::size_t size() const noexcept { return n_neg_ + n_pos_ + 1; }
  std::size_t zero_index() const noexcept { return n_neg_; }
  double node(std::size_t i) const noexcept;
  double potential(double t) const noexcept;
  // First moment weight: (a t + xi) on t < 0, (t + xi) on t > 0.
  double moment_weight(double t) const noexcept;

  // Unknowns are the non-Dirichlet nodes.
  std::size_t first_unknown() const noexcept { return half_ ? 0 : 1; }
  std::size_t unknown_count() const noexcept { return size() - 1 - first_unknown(); }
  std::vector<double> expand(std::span<const double> unknowns) const;

  double energy(std::span<const double> values) const;
  // Sum of the absolute values of the energy terms.
  double energy_magnitude(std::span<const double> values) const;
  double energy_and_gradient(std::span<const double> unknowns, std::span<double> grad) const;
  double moment(std::span<const double> values) const;
  double mass(std::span<const double> values) const;

  // Smallest eigenpair of -d^2/dt^2 + V on this grid; trapezoid-normalised
  // vector over all nodes.
  EigenResult linear_ground(double tol = Tolerances{}.eigen_residual) const;

 private:
  bool half_ = false;
  double a_ = -1.0, b_ = 1.0, xi_ = 0.0, h_ = 0.005;
  std::size_t n_neg_ = 0, n_pos_ = 0;
};

struct GLProfile1D {
  Grid1D grid{0.0, 1.0, 3};
  std::vector<double> values;
  double energy = 0.0;
  std::optional<double> a;  // absent for the half-line
  double b = 0.0;
  double xi = 0.0;
  bool trivial = false;  // b mu(xi) >= 1 on this grid: zero is the minimiser
  int iterations = 0;
  double grad_norm = 0.0;
  bool converged = false;
};

struct Profile1DOptions {
  enum class Init { ScaledEigenfunction, Constant };
  Init init = Init::ScaledEigenfunction;
  double constant_amplitude = 0.05;
  // Return the zero profile without descent when b mu(xi) >= 1.
  bool shortcut_trivial = true;
  DescentOptions descent{};
};

// Quadrature of the integrand at stored values.
double energy_1d(const GL1DProblem& p, std::span<const double> values);

GLProfile1D minimize_profile(const GL1DProblem& p, const Profile1DOptions& opt = {},
                             const std::vector<double>* warm_start = nullptr);
// Whole-line minimiser at fixed (a, b, xi); a in [-1, 0), b >= 1/|a|.
GLProfile1D minimize_profile(double a, double b, double xi, const FiberDisc& disc = {},
                             const Profile1DOptions& opt = {});

struct OptimalXi {
  double xi0 = 0.0;
  double energy = 0.0;  // E1D_{a,b} (or E1D_b on the half-line)
  GLProfile1D profile;
  std::pair<double, double> bracket;
  int evaluations = 0;
};

// Minimises xi -> E1D_{a,b}(xi) over the fiber bracket (xi1, xi2).
OptimalXi optimal_xi(double a, double b, const DispersionCurve& curve, const FiberDisc& disc = {},
                     const Profile1DOptions& opt = {});
OptimalXi optimal_xi(double a, double b, const FiberDisc& disc = {}, const Profile1DOptions& opt = {});

// Problem whose grid and parameters a stored profile was computed on.
GL1DProblem problem_of(const GLProfile1D& f);

// Signed first moment of f^2; zero at the optimal xi.
double moment_identity_residual(const GL1DProblem& p, const GLProfile1D& f);
double moment_identity_residual(const GLProfile1D& f);

struct SurfaceEnergySample {
  double b = 0.0;
  double value = 0.0;
  std::optional<double> xi0;  // absent on the extension branch
  GLProfile1D profile;
};

// E_surf(b) = inf over xi of the half-line ground energy, extended by 0 for
// b >= 1/Theta0.
SurfaceEnergySample surface_energy(double b, const HalflineDisc& disc = {},
                                   const Profile1DOptions& opt = {});

}  // namespace glstep
