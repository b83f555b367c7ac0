#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glstep/fiber.hpp"
#include "glstep/numerics.hpp"

namespace glstep {

// Truncated strip (-R/2, R/2) x (-m, m) with Dirichlet sides. Nodes sit at
// x1 = -R/2 + i hx, x2 = -m + j hy; the unknowns are the interior nodes and
// row j = m/hy lies on x2 = 0.
struct StripDisc {
  double a = -1.0;
  double b = 1.2;
  double R = 8.0;
  double m = 6.0;
  double hx = 0.05;
  double hy = 0.05;

  static double default_spacing(double b);
  void validate() const;
  std::size_t nx() const;  // interior columns
  std::size_t ny() const;  // interior rows
  std::size_t zero_row() const { return ny() / 2; }
  double x1(std::size_t i) const { return -0.5 * R + static_cast<double>(i + 1) * hx; }
  double x2(std::size_t j) const { return -m + static_cast<double>(j + 1) * hy; }
  double sigma(double x2v) const { return x2v < 0.0 ? a : 1.0; }
};

struct StripState {
  StripDisc disc;
  std::vector<std::complex<double>> psi;  // row-major, x1 fastest
  double energy = 0.0;
  double sup_norm = 0.0;
  int iterations = 0;
  double grad_norm = 0.0;
  bool converged = false;
};

enum class Kernel { Serial, Parallel };

// Discrete functional
//   b hy/hx sum |e^{i s x2 hx} u_{i+1,j} - u_{i,j}|^2 + b hx/hy sum |u_{i,j+1} - u_{i,j}|^2
//   + hx hy sum (-|u|^2 + |u|^4 / 2)
// over all bonds including those to the zero boundary. The link phase
// carries the gauge field sigma A0 = (-sigma x2, 0).
class StripLattice {
 public:
  explicit StripLattice(const StripDisc& disc);
  ~StripLattice();
  StripLattice(const StripLattice&) = delete;
  StripLattice& operator=(const StripLattice&) = delete;

  const StripDisc& disc() const noexcept { return disc_; }
  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return ny_; }
  std::size_t unknowns() const noexcept { return 2 * nx_ * ny_; }

  // x holds interleaved (re, im) pairs in node order.
  double energy(std::span<const double> x, Kernel k = Kernel::Parallel) const;
  double energy_and_gradient(std::span<const double> x, std::span<double> grad,
                             Kernel k = Kernel::Parallel) const;
  // Sum of absolute values of the energy terms.
  double energy_magnitude(std::span<const double> x) const;
  // Approximate inverse of the Hessian at zero shifted to be positive
  // definite: sine transform in x1, tridiagonal solve in x2.
  void precondition(std::span<const double> in, std::span<double> out) const;
  // Max over interior nodes of |-b (nabla - i sigma A0)^2 u - (1 - |u|^2) u|.
  double euler_lagrange_residual(std::span<const double> x) const;

 private:
  double serial_energy(std::span<const double> x, double* grad) const;
  double parallel_energy(std::span<const double> x, double* grad) const;

  StripDisc disc_;
  std::size_t nx_, ny_;
  double cx_, cy_, w_;
  std::vector<double> cos_, sin_;  // link phase per row
  struct Transform;
  std::unique_ptr<Transform> dst_;
};

// Smooth cutoff supported in (-1/2, 1/2), equal to 1 on [-1/4, 1/4].
double strip_cutoff(double s);
double strip_cutoff_derivative(double s);

struct StripOptions {
  DescentOptions descent{};
  Kernel kernel = Kernel::Parallel;
  // Initial amplitude t; negative means the trial-state value
  // sqrt(max(0, 1 - b beta_a) / nu_a).
  double amplitude = -1.0;
};

// Energy of a stored state, recomputed from psi.
double strip_energy(const StripState& s);

// Trial state t theta(x1/R) e^{i zeta x1} phi(x2) with the band minimiser
// of the fiber operator (xi = 3 for a > 0, where the infimum is not attained).
StripState strip_trial_state(const StripDisc& disc, const DispersionCurve& curve, double amplitude = -1.0);

StripState minimize_strip(const StripDisc& disc, const DispersionCurve& curve,
                          const StripOptions& opt = {}, const StripState* warm_start = nullptr);
StripState minimize_strip(const StripDisc& disc, const StripOptions& opt = {});

// Zero-extension of a state onto a disc with equal spacings and a larger or
// equal (R, m); nodes must align.
StripState embed_state(const StripState& s, const StripDisc& target);

struct StripGroundOptions {
  std::vector<double> m_schedule{4, 6, 9, 13, 19};
  double gap_tol = 1e-6;  // relative to |g|
  double hx = 0.0;        // 0 selects StripDisc::default_spacing
  double hy = 0.0;
  StripOptions strip{};
};

struct StripGround {
  double g = 0.0;
  StripState state;
  std::vector<double> m_values;
  std::vector<double> energies;  // energy per m
};

// Runs minimize_strip over the m-schedule, each solve warm-started from the
// previous one, until successive energies differ by less than gap_tol |g|.
StripGround strip_ground_state(double a, double b, double R, const DispersionCurve& curve,
                               const StripGroundOptions& opt = {});
StripGround strip_ground_state(double a, double b, double R, const StripGroundOptions& opt = {});

struct DecayReport {
  double weighted_l2 = 0.0;  // int_{|x2|>=4} |x2| / ln(|x2|)^2 (|grad_s psi|^2 + |psi|^2)
  double weighted_l4 = 0.0;  // int_{|x2|>=4} |x2|^3 / ln(|x2|)^2 |psi|^4
  double plain_mass = 0.0;   // int b |grad_s psi|^2 + |psi|^2
  double mass = 0.0;         // int |psi|^2
  double quartic = 0.0;      // int |psi|^4
  double l2_constant = 0.0;  // weighted_l2 / (b R)
  double l4_constant = 0.0;  // weighted_l4 / (b^2 R)
  double mass_constant = 0.0;  // plain_mass / (b R)
};

DecayReport decay_diagnostics(const StripState& s);

// Little-endian binary dump: a, b, R, m, hx, hy as float64, then psi row by
// row as interleaved (re, im) float64.
void write_strip_dump(const StripState& s, const std::string& path);
StripState read_strip_dump(const std::string& path);

}  // namespace glstep
