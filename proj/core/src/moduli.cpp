#include "vortex/moduli.hpp"

#include "vortex/errors.hpp"
#include "vortex/fourier_mukai.hpp"

namespace vortex {

Rational GlsmModel::e2() const {
  if (inv_e2 == 0) throw PreconditionError("e^2 is infinite in the strong-coupling limit");
  return 1 / inv_e2;
}

GlsmModel line_bundle_model(ManifoldDescriptor man, BundleDescriptor bundle, Rational tau, Rational e2, int copies) {
  if (copies < 1) throw PreconditionError("need at least one section");
  if (e2 <= 0) throw PreconditionError("e^2 must be positive");
  GlsmModel model{std::move(man), WeightSystem({std::vector<long>(copies, 1)}), {std::move(tau)}, 1 / e2, {bundle}, {}};
  model.bundles.assign(copies, bundle);
  return model;
}

void validate(const GlsmModel& model) {
  validate(model.manifold);
  const int k = model.weights.k();
  const int n = model.weights.n();
  if (static_cast<int>(model.tau.size()) != k) throw InconsistentModel("tau needs one entry per circle factor");
  if (static_cast<int>(model.principal.size()) != k) {
    throw InconsistentModel("need one principal bundle per circle factor");
  }
  if (model.inv_e2 < 0) throw InconsistentModel("e^2 must be positive");
  if (model.bundles.empty()) return;
  if (static_cast<int>(model.bundles.size()) != n) throw InconsistentModel("need one line bundle per weight column");
  const bool table = std::holds_alternative<GenericSimplyConnected>(model.manifold);
  for (int j = 0; j < n; ++j) {
    const auto col = model.weights.column(j);
    if (table) {
      Rational want = 0;
      for (int a = 0; a < k; ++a) want += Rational(col[a]) * volume_and_slope(model.manifold, model.principal[a]).slope_vol;
      if (volume_and_slope(model.manifold, model.bundles[j]).slope_vol != want) {
        throw InconsistentModel("slope of L_" + std::to_string(j + 1) + " is not sum_a Q_j^a times the principal slopes");
      }
      continue;
    }
    if (!same_bundle(model.bundles[j], combine_bundles(col, model.principal))) {
      throw InconsistentModel("L_" + std::to_string(j + 1) + " is not sum_a Q_j^a P^a");
    }
  }
}

std::vector<BundleDescriptor> line_bundles(const GlsmModel& model) {
  if (!model.bundles.empty()) return model.bundles;
  std::vector<BundleDescriptor> out;
  for (int j = 0; j < model.weights.n(); ++j) out.push_back(combine_bundles(model.weights.column(j), model.principal));
  return out;
}

std::vector<long> section_counts(const GlsmModel& model) {
  std::vector<long> r;
  for (const auto& b : line_bundles(model)) r.push_back(r_sections(model.manifold, b));
  return r;
}

SigmaVector model_sigma(const GlsmModel& model) {
  validate(model);
  std::vector<Rational> slopes;
  for (const auto& p : model.principal) slopes.push_back(volume_and_slope(model.manifold, p).slope_vol);
  return sigma_vector_inv(model.tau, model.inv_e2, volume(model.manifold), complex_dimension(model.manifold), slopes);
}

bool is_u1_unit_weights(const GlsmModel& model) { return model.weights.k() == 1 && model.weights.all_weights_one(); }

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Empty:
      return "Empty";
    case Verdict::Stable:
      return "Stable";
    case Verdict::BoundaryUnstable:
      return "BoundaryUnstable";
  }
  return "?";
}

const char* kind_name(ModuliKind k) {
  switch (k) {
    case ModuliKind::None:
      return "None";
    case ModuliKind::Point:
      return "Point";
    case ModuliKind::ProjectiveSpace:
      return "ProjectiveSpace";
    case ModuliKind::ProjectiveBundle:
      return "ProjectiveBundle";
    case ModuliKind::ToricOrbifold:
      return "ToricOrbifold";
    case ModuliKind::ToricFibration:
      return "ToricFibration";
    case ModuliKind::PicardProduct:
      return "PicardProduct";
  }
  return "?";
}

std::optional<int> moduli_dimension_glsm(const WeightSystem& ws, const SigmaVector& sigma, const std::vector<long>& r) {
  const int n = ws.n();
  if (static_cast<int>(r.size()) != n) throw PreconditionError("need one section count per weight column");
  require_enumerable(n);
  std::uint32_t realizable = 0;
  for (int j = 0; j < n; ++j) {
    if (r[j] > 0) realizable |= 1U << j;
  }
  std::optional<int> best;
  // Iterate over nonempty subsets of the realizable mask.
  for (std::uint32_t s = realizable; s != 0; s = (s - 1) & realizable) {
    IndexSet i(s);
    if (!in_cone_interior(ws, i, sigma)) continue;
    long d = 0;
    for (int j : i.members()) d += r[j];
    const int dim = static_cast<int>(d) - subset_rank(ws, i);
    if (!best || dim > *best) best = dim;
  }
  return best;
}

RingElement transform_chern_class(const AbelianVarietyData& av, int copies) {
  if (copies < 1) throw PreconditionError("need at least one copy");
  return chern_from_character(ch_transform(av)).pow(static_cast<unsigned>(copies));
}

PresentationPtr projective_bundle_presentation(const AbelianVarietyData& av, int copies) {
  const RingElement c = transform_chern_class(av, copies);
  const int rank = static_cast<int>(r_sections_abelian(av)) * copies;
  const int top = 2 * (rank - 1 + av.m);
  auto base = dual_torus_ring(av.m);
  auto free = make_presentation(base->odd_names(), {EvenGenerator{"eta", 2, EvenRule::Free, 0, {}}}, top);
  std::vector<RingElement> coeffs;
  for (int k = 1; k <= rank; ++k) coeffs.push_back(embed(c.graded(2 * k), free));
  return with_relation(free, "eta", coeffs);
}

namespace {

PresentationPtr eta_ring(int k, int dim) {
  if (k == 1) return truncated_polynomial_ring("eta", dim + 1);
  std::vector<EvenGenerator> gens;
  for (int a = 1; a <= k; ++a) gens.push_back(EvenGenerator{"eta" + std::to_string(a), 2, EvenRule::Free, 0, {}});
  return make_presentation({}, std::move(gens), 2 * dim);
}

bool all_zero(const SigmaVector& s) {
  for (const auto& x : s) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace

ModuliDescription build_moduli(const GlsmModel& model) {
  validate(model);
  ModuliDescription out;
  const auto& ws = model.weights;
  const int k = ws.k();
  const int n = ws.n();
  const int m = complex_dimension(model.manifold);
  const bool abelian = is_abelian(model.manifold);
  require_enumerable(n);

  out.sigma = model_sigma(model);
  const auto r = section_counts(model);
  const IndexSet everything = IndexSet::all(n);
  out.closed_cone = in_cone_closed(ws, everything, out.sigma);
  out.interior = in_cone_interior(ws, everything, out.sigma);
  out.c1 = check_c1(ws, out.sigma);
  out.c2 = check_c2(ws);
  out.smooth = out.c1 && out.c2;
  if (n == k && subset_rank(ws, everything) == k) out.decomposition = sigma_decomposition_square(ws, out.sigma);

  if (!out.closed_cone) {
    out.verdict = Verdict::Empty;
    out.notes.push_back("sigma lies outside the closed cone of weights; no solutions exist");
    return out;
  }

  const auto dim = moduli_dimension_glsm(ws, out.sigma, r);
  if (!dim) {
    if (all_zero(out.sigma)) {
      // Only phi = 0 survives: flat T^k connections.
      out.verdict = Verdict::Stable;
      out.kind = abelian ? ModuliKind::PicardProduct : ModuliKind::Point;
      out.base_dimension = abelian ? k * m : 0;
      out.complex_dimension = out.base_dimension;
      out.cohomology = trivial_ring();
      out.notes.push_back(abelian ? "sigma = 0 with zero-dimensional fibre: product of k copies of Pic^0"
                                  : "sigma = 0 with zero-dimensional fibre: a single point");
      return out;
    }
    out.verdict = Verdict::BoundaryUnstable;
    out.notes.push_back("sigma lies on the boundary of the cone; no support set has sigma in its interior");
    return out;
  }

  out.verdict = Verdict::Stable;
  if (!abelian) {
    out.complex_dimension = *dim;
    if (k == 1 && ws.all_weights_one()) {
      out.kind = ModuliKind::ProjectiveSpace;
      out.notes.push_back("U(1) model with unit weights: projective space of sections");
    } else {
      out.kind = *dim == 0 ? ModuliKind::Point : ModuliKind::ToricOrbifold;
      out.notes.push_back("toric quotient of the space of sections by the complexified torus");
    }
    out.cohomology = eta_ring(k, *dim);
    if (out.c1) out.notes.push_back("generic sigma: dimension equals dim V - k");
    return out;
  }

  out.base_dimension = k * m;
  if (k == 1 && ws.all_weights_one()) {
    const auto av = abelian_data(model.manifold, line_bundles(model)[0]);
    out.kind = ModuliKind::ProjectiveBundle;
    out.fibre_rank = static_cast<int>(r_sections_abelian(av)) * n;
    out.fibre_dimension = out.fibre_rank - 1;
    out.complex_dimension = out.fibre_dimension + m;
    out.cohomology = projective_bundle_presentation(av, n);
    out.notes.push_back("projectivization of the Fourier-Mukai transform over Pic^0");
    return out;
  }
  out.kind = ModuliKind::ToricFibration;
  out.fibre_dimension = *dim;
  out.complex_dimension = *dim + k * m;
  out.notes.push_back("toric fibration over k copies of Pic^0");
  return out;
}

}  // namespace vortex
