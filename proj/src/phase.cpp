#include "glstep/phase.hpp"

#include <cmath>

#include "glstep/error.hpp"
#include "glstep/gl1d.hpp"

namespace glstep {

namespace {

void check_a(double a) {
  if (!std::isfinite(a) || a == 0.0 || a < -1.0 || a >= 1.0)
    fail(ErrorKind::Domain, "phase: a must lie in [-1, 1) without 0");
}

void check_b(double a, double b) {
  if (!std::isfinite(b)) fail(ErrorKind::Input, "phase: b must be finite");
  if (!(b > 1.0 / std::abs(a)))
    fail(ErrorKind::Domain, "phase: b <= 1/|a| is the bulk regime (treated previously), outside this model");
}

void check_geometry(const DomainGeometry& g) {
  for (double v : {g.len_gamma, g.len_bnd1, g.len_bnd2})
    if (!std::isfinite(v) || v < 0.0) fail(ErrorKind::Input, "phase: lengths must be finite and non-negative");
}

}  // namespace

Thresholds thresholds(double a, double beta_a, double theta0) {
  check_a(a);
  Thresholds t;
  t.a = a;
  t.inv_abs_a = 1.0 / std::abs(a);
  t.inv_beta = 1.0 / beta_a;
  t.inv_theta = 1.0 / theta0;
  t.inv_a_theta = 1.0 / (std::abs(a) * theta0);
  return t;
}

Thresholds thresholds(double a, const FiberDisc& disc, const HalflineDisc& hdisc) {
  check_a(a);
  const double b = a > 0.0 ? a : beta(a, disc).beta;
  return thresholds(a, b, theta(0.0, hdisc).theta);
}

std::string regime_label(bool barrier, bool bnd1, bool bnd2) {
  if (barrier && bnd1 && bnd2) return "barrier+full-surface";
  if (barrier && bnd2) return "barrier+surface-Ω₂";
  if (barrier) return "barrier-only";
  if (bnd1 && bnd2) return "full-surface";
  if (bnd2) return "surface-Ω₂-only";
  if (bnd1) return "surface-Ω₁-only";
  return "normal";
}

PhaseVerdict classify(double a, double b, const Thresholds& t, const std::optional<PhaseEnergies>& energies,
                      const DomainGeometry& geom) {
  check_a(a);
  check_b(a, b);
  check_geometry(geom);
  PhaseVerdict v;
  if (energies) {
    v.barrier_super = energies->e_barrier < 0.0;
    v.bnd1_super = energies->e_surf_b < 0.0;
    v.bnd2_super = energies->e_surf_ba < 0.0;
    v.EL = leading_energy(a, b, geom, *energies);
  } else {
    v.barrier_super = a < 0.0 && !threshold_reached(b, 1.0 / t.inv_beta);
    v.bnd1_super = !threshold_reached(b, 1.0 / t.inv_theta);
    v.bnd2_super = !threshold_reached(b, 1.0 / t.inv_a_theta);
  }
  v.regime_label = regime_label(v.barrier_super, v.bnd1_super, v.bnd2_super);
  v.l4_coefficient = -2.0 * v.EL;
  return v;
}

PhaseEnergies phase_energies(double a, double b, const PhaseEnergyOptions& opt) {
  check_a(a);
  check_b(a, b);
  PhaseEnergies e;
  e.e_surf_b = surface_energy(b, opt.halfline).value;
  e.e_surf_ba = surface_energy(b * std::abs(a), opt.halfline).value;
  if (a < 0.0) {
    const DispersionCurve c = beta(a, opt.fiber);
    if (!threshold_reached(b, c.beta))
      e.e_barrier = opt.one_dimensional ? optimal_xi(a, b, c, opt.fiber).energy
                                        : barrier_energy(a, b, c, opt.barrier).e_best;
  }
  return e;
}

double leading_energy(double a, double b, const DomainGeometry& geom, const PhaseEnergies& e) {
  check_a(a);
  check_geometry(geom);
  if (!(b > 0.0)) fail(ErrorKind::Input, "leading_energy: b must be positive");
  return (geom.len_gamma * e.e_barrier + geom.len_bnd1 * e.e_surf_b +
          geom.len_bnd2 * e.e_surf_ba / std::sqrt(std::abs(a))) /
         std::sqrt(b);
}

L4Distribution l4_distribution(double a, double b, const DomainGeometry& geom, const PhaseEnergies& e) {
  check_a(a);
  check_geometry(geom);
  if (!(b > 0.0)) fail(ErrorKind::Input, "l4_distribution: b must be positive");
  const double s = -2.0 / std::sqrt(b);
  L4Distribution d;
  d.gamma = s * e.e_barrier;
  d.bnd1 = s * e.e_surf_b;
  d.bnd2 = s * e.e_surf_ba / std::sqrt(std::abs(a));
  d.total = d.gamma * geom.len_gamma + d.bnd1 * geom.len_bnd1 + d.bnd2 * geom.len_bnd2;
  return d;
}

}  // namespace glstep
