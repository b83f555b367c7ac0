#pragma once

#include <optional>
#include <string>

#include "glstep/barrier.hpp"
#include "glstep/fiber.hpp"
#include "glstep/halfline.hpp"

namespace glstep {

struct Thresholds {
  double a = 0.0;
  double inv_abs_a = 0.0;    // 1/|a|
  double inv_beta = 0.0;     // 1/beta_a
  double inv_theta = 0.0;    // 1/Theta0
  double inv_a_theta = 0.0;  // 1/(|a| Theta0)
};

Thresholds thresholds(double a, double beta_a, double theta0);
Thresholds thresholds(double a, const FiberDisc& disc = {}, const HalflineDisc& hdisc = {});

struct DomainGeometry {
  double len_gamma = 0.0;  // length of the barrier
  double len_bnd1 = 0.0;   // boundary length inside Omega1 (field 1)
  double len_bnd2 = 0.0;   // boundary length inside Omega2 (field a)
};

// e_barrier = barrier energy e_a(b); e_surf_b = E_surf(b); e_surf_ba = E_surf(b|a|).
struct PhaseEnergies {
  double e_barrier = 0.0;
  double e_surf_b = 0.0;
  double e_surf_ba = 0.0;
};

struct PhaseVerdict {
  bool barrier_super = false;
  bool bnd1_super = false;
  bool bnd2_super = false;
  std::string regime_label;
  double EL = 0.0;
  double l4_coefficient = 0.0;  // -2 EL
};

// Label for a flag pattern: "barrier+full-surface", "barrier+surface-Ω₂",
// "full-surface", "surface-Ω₂-only", "normal", or "barrier-only".
std::string regime_label(bool barrier, bool bnd1, bool bnd2);

// Sign-only mode: flags from the vanishing thresholds alone, EL = 0 unless
// energies are given. b <= 1/|a| is the bulk regime and raises a domain error.
PhaseVerdict classify(double a, double b, const Thresholds& t,
                      const std::optional<PhaseEnergies>& energies = std::nullopt,
                      const DomainGeometry& geom = {});

// Energies from the solvers: E_surf from the half-line functional; the
// barrier energy from the strip schedule or, with one_dimensional set, from
// the whole-line 1D functional.
struct PhaseEnergyOptions {
  bool one_dimensional = true;
  BarrierOptions barrier{};
  HalflineDisc halfline{};
  FiberDisc fiber{};
};
PhaseEnergies phase_energies(double a, double b, const PhaseEnergyOptions& opt = {});

double leading_energy(double a, double b, const DomainGeometry& geom, const PhaseEnergies& e);

// Line densities of the limiting |psi|^4 measure along the barrier and the
// two boundary parts.
struct L4Distribution {
  double gamma = 0.0;
  double bnd1 = 0.0;
  double bnd2 = 0.0;
  double total = 0.0;  // sum of density times length = -2 EL
};
L4Distribution l4_distribution(double a, double b, const DomainGeometry& geom, const PhaseEnergies& e);

}  // namespace glstep
