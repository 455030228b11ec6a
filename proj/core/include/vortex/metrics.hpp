#pragma once

#include <vector>

#include "vortex/moduli.hpp"

namespace vortex {

struct KahlerClassReport {
  // Coefficient of eta_a; equals pi * sigma_a.
  std::vector<PiPoly> eta_coefficients;
  // -(2 pi^2 / e^2) F([omega^(m-1)]/(m-1)!) on each Pic^0 factor, in
  // dual_torus_ring(m). Empty for simply connected bases.
  std::vector<RingElement> base_correction;
};

bool operator==(const KahlerClassReport& a, const KahlerClassReport& b);

// Line-bundle energy 2 pi tau/(m-1)! int c1 omega^(m-1) - 2 pi^2/(e^2 (m-2)!) int c1^2 omega^(m-2).
PiPoly vortex_energy(const GlsmModel& model);

KahlerClassReport kahler_class(const GlsmModel& model);
// The same class assembled by integrating the universal curvature over M in
// H*(M x moduli). Supports simply connected bases with a ring model and the
// U(1) model over abelian varieties.
KahlerClassReport kahler_class_pipeline(const GlsmModel& model);

// ProjectiveSpace: (pi sigma)^D / D!. ProjectiveBundle: Segre push-forward.
PiPoly volume_moduli(const GlsmModel& model);
// ProjectiveBundle volume integrated in the relation ring of the bundle.
PiPoly volume_moduli_relation_ring(const GlsmModel& model);
// The Segre sum for an abelian U(1) model with R = copies * r.
PiPoly projective_bundle_volume(const AbelianVarietyData& av, int copies, const PiPoly& sigma, const Rational& inv_e2);

PiPoly total_scalar_curvature(const GlsmModel& model);
// 2 pi r (r-1) / ((r-1)!)^(1/(r-1)) * vol^((r-2)/(r-1)), the fractional-power form.
double scalar_curvature_power_form(int r, double vol);

PiPoly constrained_volume(long n, long r, long l, long r_l, const PiPoly& sigma);

// Sets 1/e^2 = 0.
GlsmModel strong_coupling(const GlsmModel& model);
PiPoly limit_volume(const GlsmModel& model);
KahlerClassReport limit_kahler_class(const GlsmModel& model);
PiPoly limit_energy(const GlsmModel& model);

}  // namespace vortex
