#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vortex/cohomring.hpp"
#include "vortex/cones.hpp"
#include "vortex/geometry.hpp"

namespace vortex {

struct GlsmModel {
  ManifoldDescriptor manifold;
  WeightSystem weights = WeightSystem(std::vector<std::vector<long>>{{1}});
  std::vector<Rational> tau;
  // 1/e^2; zero is the strong-coupling limit.
  Rational inv_e2 = 1;
  // Topology of the circle bundles P^a (k entries).
  std::vector<BundleDescriptor> principal;
  // L_j for each weight column (n entries). Derived from `principal` when empty.
  std::vector<BundleDescriptor> bundles;

  // Throws PreconditionError in the strong-coupling limit.
  Rational e2() const;
};

// Convenience constructor for the U(1) model with n sections of one line bundle.
GlsmModel line_bundle_model(ManifoldDescriptor man, BundleDescriptor bundle, Rational tau, Rational e2, int copies = 1);

// Throws InconsistentModel when lengths disagree or some L_j differs from
// sum_a Q_j^a P^a.
void validate(const GlsmModel& model);
std::vector<BundleDescriptor> line_bundles(const GlsmModel& model);
std::vector<long> section_counts(const GlsmModel& model);
SigmaVector model_sigma(const GlsmModel& model);
// True for the U(1) model whose weights are all 1.
bool is_u1_unit_weights(const GlsmModel& model);

enum class Verdict { Empty, Stable, BoundaryUnstable };
enum class ModuliKind { None, Point, ProjectiveSpace, ProjectiveBundle, ToricOrbifold, ToricFibration, PicardProduct };

const char* verdict_name(Verdict v);
const char* kind_name(ModuliKind k);

struct ModuliDescription {
  Verdict verdict = Verdict::Empty;
  ModuliKind kind = ModuliKind::None;
  int complex_dimension = -1;
  bool smooth = false;
  // ProjectiveBundle: fibre is P^(fibre_rank - 1). ToricFibration: fibre
  // dimension. Both: base dimension (k m for the Picard torus factor).
  int fibre_rank = 0;
  int fibre_dimension = 0;
  int base_dimension = 0;
  SigmaVector sigma;
  bool closed_cone = false;
  bool interior = false;
  bool c1 = false;
  bool c2 = false;
  std::optional<SquareDecomposition> decomposition;
  PresentationPtr cohomology;
  std::vector<std::string> notes;
};

ModuliDescription build_moduli(const GlsmModel& model);

// max over nonempty realizable I (all r_j > 0) with sigma interior to Delta_I of
// sum_{j in I} r_j - rank(Q_I); nullopt when no subset qualifies.
std::optional<int> moduli_dimension_glsm(const WeightSystem& ws, const SigmaVector& sigma, const std::vector<long>& r);

// H*(P(L^ ⊕ ... ⊕ L^)) over the dual variety: dx*1..dx*{2m} and eta with
// eta^R = -sum_k c_k eta^(R-k), R = copies * r(L).
PresentationPtr projective_bundle_presentation(const AbelianVarietyData& av, int copies = 1);
// Total Chern class of `copies` copies of the transform.
RingElement transform_chern_class(const AbelianVarietyData& av, int copies = 1);

}  // namespace vortex
