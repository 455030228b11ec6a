#include "vortex/metrics.hpp"

#include <cmath>

#include "vortex/errors.hpp"
#include "vortex/fourier_mukai.hpp"

namespace vortex {

namespace {

PiPoly pi() { return PiPoly::pi(); }

Rational inv_factorial(long n) { return Rational(Integer(1), factorial(static_cast<unsigned long>(n))); }

ModuliDescription require_stable(const GlsmModel& model) {
  auto desc = build_moduli(model);
  if (desc.verdict != Verdict::Stable) {
    throw NotStable(std::string("moduli space is not stable (") + verdict_name(desc.verdict) + ")");
  }
  return desc;
}

// Coefficient of eta^top in Q[eta]/eta^(top+1).
PiPoly top_coefficient(const RingElement& x, int top) {
  Monomial mono;
  mono.even = {top};
  return x.coefficient(mono);
}

AbelianVarietyData unit_deltas(const AbelianVariety& a) {
  AbelianVarietyData av;
  av.m = a.m;
  av.deltas.assign(a.m, 1);
  av.lambdas = a.lambdas;
  return av;
}

std::string eta_name(int k, int a) { return k == 1 ? std::string("eta") : "eta" + std::to_string(a + 1); }

}  // namespace

bool operator==(const KahlerClassReport& a, const KahlerClassReport& b) {
  return a.eta_coefficients == b.eta_coefficients && a.base_correction == b.base_correction;
}

PiPoly vortex_energy(const GlsmModel& model) {
  validate(model);
  if (model.weights.k() != 1) throw PreconditionError("the vortex energy is defined here for a single line bundle");
  const int m = complex_dimension(model.manifold);
  const auto in = intersection_numbers(model.manifold, model.principal[0]);
  PiPoly e = pi() * Rational(2 * model.tau[0] * in.c1_omega * inv_factorial(m - 1));
  if (m >= 2) e -= PiPoly::monomial(2 * model.inv_e2 * in.c1_squared * inv_factorial(m - 2), 2);
  return e;
}

KahlerClassReport kahler_class(const GlsmModel& model) {
  const auto desc = require_stable(model);
  KahlerClassReport out;
  for (const auto& s : desc.sigma) out.eta_coefficients.push_back(pi() * s);
  if (const auto* a = std::get_if<AbelianVariety>(&model.manifold)) {
    const RingElement f = fm_kahler_power(unit_deltas(*a));
    for (int i = 0; i < model.weights.k(); ++i) {
      out.base_correction.push_back(f * PiPoly::monomial(-2 * model.inv_e2, 2));
    }
  }
  return out;
}

KahlerClassReport kahler_class_pipeline(const GlsmModel& model) {
  require_stable(model);
  const int k = model.weights.k();
  const int m = complex_dimension(model.manifold);
  const BaseCohomology base = base_cohomology(model.manifold);
  const auto* abelian = std::get_if<AbelianVariety>(&model.manifold);
  if (abelian && k != 1) throw UnsupportedError("the integration pipeline over abelian bases handles k = 1 only");

  PresentationPtr fibre = abelian ? dual_torus_ring(m) : trivial_ring();
  for (int a = 0; a < k; ++a) fibre = tensor_presentation(fibre, truncated_polynomial_ring(eta_name(k, a), 3));
  const PresentationPtr ring = tensor_presentation(base.ring, fibre);

  const RingElement omega = embed(base.omega, ring);
  const RingElement omega_m = omega.pow(m);
  const RingElement omega_m1 = omega.pow(m - 1);
  const PiPoly first = pi() * inv_factorial(m);
  const PiPoly second = PiPoly::monomial(-model.inv_e2 * inv_factorial(m - 1), 2);

  RingElement integrand(ring);
  for (int a = 0; a < k; ++a) {
    RingElement u = embed(c1_class(model.manifold, base, model.principal[a]), ring) +
                    RingElement::generator(ring, eta_name(k, a));
    if (abelian) {
      for (int i = 1; i <= 2 * m; ++i) u += RingElement::product(ring, {torus_generator(i), dual_generator(i)});
    }
    integrand += u * omega_m * first * PiPoly(model.tau[a]) + u * u * omega_m1 * second;
  }
  const RingElement cls = integrate_over_base(integrand, base, fibre);

  KahlerClassReport out;
  RingElement rest = cls;
  for (int a = 0; a < k; ++a) {
    const RingElement eta = RingElement::generator(fibre, eta_name(k, a));
    Monomial mono = eta.terms().begin()->first;
    const PiPoly c = cls.coefficient(mono);
    out.eta_coefficients.push_back(c);
    rest -= eta * c;
  }
  if (abelian) {
    out.base_correction.push_back(embed(rest, dual_torus_ring(m)));
  } else if (!rest.is_zero()) {
    throw InconsistentModel("Kähler class has components beyond the eta classes: " + rest.to_string());
  }
  return out;
}

PiPoly projective_bundle_volume(const AbelianVarietyData& av, int copies, const PiPoly& sigma, const Rational& inv_e2) {
  const int m = av.m;
  const long rank = r_sections_abelian(av) * copies;
  const RingElement s = segre(transform_chern_class(av, copies));
  const RingElement b = fm_kahler_power(av) * PiPoly::monomial(-2 * inv_e2, 2);
  const PiPoly ps = pi() * sigma;
  PiPoly vol;
  for (int l = 0; l <= m; ++l) {
    const long j = l + rank - 1;  // power of eta
    RingElement integrand = segre_pushforward(static_cast<int>(j), s, static_cast<int>(rank)) * b.pow(m - l);
    const PiPoly integral = fibre_integrate(integrand, dual_orientation(m), trivial_ring()).scalar_term();
    if (integral.is_zero()) continue;
    vol += ps.pow(static_cast<unsigned>(j)) * integral * (inv_factorial(j) * inv_factorial(m - l));
  }
  return vol;
}

PiPoly volume_moduli(const GlsmModel& model) {
  const auto desc = require_stable(model);
  if (desc.kind == ModuliKind::ProjectiveSpace) {
    const int d = desc.complex_dimension;
    auto ring = truncated_polynomial_ring("eta", d + 1);
    const RingElement omega = RingElement::generator(ring, "eta") * (pi() * desc.sigma[0]);
    return top_coefficient(omega.pow(d) * PiPoly(inv_factorial(d)), d);
  }
  if (desc.kind == ModuliKind::ProjectiveBundle) {
    const auto av = abelian_data(model.manifold, line_bundles(model)[0]);
    return projective_bundle_volume(av, model.weights.n(), desc.sigma[0], model.inv_e2);
  }
  throw UnsupportedKind(std::string("no volume formula for moduli of kind ") + kind_name(desc.kind));
}

PiPoly volume_moduli_relation_ring(const GlsmModel& model) {
  const auto desc = require_stable(model);
  if (desc.kind != ModuliKind::ProjectiveBundle) {
    throw UnsupportedKind(std::string("relation-ring volume needs a projective bundle, not ") + kind_name(desc.kind));
  }
  const auto av = abelian_data(model.manifold, line_bundles(model)[0]);
  const auto& ring = desc.cohomology;
  const int d = desc.complex_dimension;
  RingElement omega = RingElement::generator(ring, "eta") * (pi() * desc.sigma[0]) +
                      embed(fm_kahler_power(av), ring) * PiPoly::monomial(-2 * model.inv_e2, 2);
  FibreClass top;
  top.odd = dual_orientation(av.m);
  top.even = {{"eta", desc.fibre_rank - 1}};
  return fibre_integrate(omega.pow(d) * PiPoly(inv_factorial(d)), top, trivial_ring()).scalar_term();
}

PiPoly total_scalar_curvature(const GlsmModel& model) {
  const auto desc = require_stable(model);
  if (desc.kind != ModuliKind::ProjectiveSpace || desc.complex_dimension < 1) {
    throw UnsupportedKind("total scalar curvature needs a projective space of positive dimension");
  }
  const int d = desc.complex_dimension;
  auto ring = truncated_polynomial_ring("eta", d + 1);
  const RingElement eta = RingElement::generator(ring, "eta");
  const RingElement c1 = eta * PiPoly(d + 1);
  const RingElement omega = eta * (pi() * desc.sigma[0]);
  return top_coefficient(c1 * omega.pow(d - 1), d) * pi() * (2 * inv_factorial(d - 1));
}

double scalar_curvature_power_form(int r, double vol) {
  if (r < 2) throw PreconditionError("the fractional-power form needs r >= 2");
  const double rm1 = r - 1;
  const double fact = std::tgamma(static_cast<double>(r));  // (r-1)!
  return 2 * M_PI * r * rm1 / std::pow(fact, 1 / rm1) * std::pow(vol, (r - 2) / rm1);
}

PiPoly constrained_volume(long n, long r, long l, long r_l, const PiPoly& sigma) {
  if (n < 1 || r < 1 || l < 1 || r_l < 1) throw PreconditionError("constrained volume needs positive n, r, l, r_l");
  const long dim = n * r - 1 - r_l;
  if (dim < 0) throw PreconditionError("constraint leaves a negative-dimensional locus");
  const int top = static_cast<int>(n * r - 1);
  auto ring = truncated_polynomial_ring("eta", top + 1);
  const RingElement eta = RingElement::generator(ring, "eta");
  const RingElement dual = (eta * PiPoly(l)).pow(static_cast<unsigned>(r_l));
  const RingElement omega = eta * (pi() * sigma);
  return top_coefficient(omega.pow(static_cast<unsigned>(dim)) * dual, top) * inv_factorial(dim);
}

GlsmModel strong_coupling(const GlsmModel& model) {
  GlsmModel out = model;
  out.inv_e2 = 0;
  return out;
}

PiPoly limit_volume(const GlsmModel& model) { return volume_moduli(strong_coupling(model)); }
KahlerClassReport limit_kahler_class(const GlsmModel& model) { return kahler_class(strong_coupling(model)); }
PiPoly limit_energy(const GlsmModel& model) { return vortex_energy(strong_coupling(model)); }

}  // namespace vortex
