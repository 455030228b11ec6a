#pragma once

#include <optional>
#include <vector>

#include "vortex/cones.hpp"
#include "vortex/geometry.hpp"

namespace vortex {

// Toric target X = C^n // T^k at level tau. Construction checks (H1), i.e.
// check_c1 with sigma = tau, and (H2) = check_c2.
class ToricTarget {
 public:
  ToricTarget(WeightSystem weights, std::vector<Rational> tau);
  // k = 1, n unit weights, tau > 0.
  static ToricTarget projective_space(int n, const Rational& tau = 1);
  // Skips (H1) and (H2); orbifold targets such as a weighted projective line.
  static ToricTarget unchecked(WeightSystem weights, std::vector<Rational> tau);

  const WeightSystem& weights() const { return weights_; }
  const std::vector<Rational>& tau() const { return tau_; }
  SigmaVector tau_vector() const;
  bool is_projective_space() const;

 private:
  struct Unchecked {};
  ToricTarget(WeightSystem weights, std::vector<Rational> tau, Unchecked);
  WeightSystem weights_;
  std::vector<Rational> tau_;
};

// {z : z_j = 0 for j not in allowed}
struct UnstablePlane {
  IndexSet allowed;
  int dim = 0;
};

// Maximal index sets I with tau not interior to Delta_I, by dimension
// descending, then lexicographic.
std::vector<UnstablePlane> unstable_planes(const ToricTarget& t);

struct SectionData {
  long r = 0;
  bool trivial = false;
};

// Section data of L_j = sum_a Q_j^a xi_a on the given base.
std::vector<SectionData> section_data(const ToricTarget& t, const ManifoldDescriptor& man,
                                      const std::vector<BundleDescriptor>& xi);

// nullopt stands for -infinity.
std::optional<int> s_invariant(const ToricTarget& t, const std::vector<SectionData>& data);
std::optional<int> s_invariant(const ToricTarget& t, const ManifoldDescriptor& man,
                               const std::vector<SectionData>& data);

// n - s > dim M; the base must be a projective space.
bool embedding_open_dense(const ToricTarget& t, const ManifoldDescriptor& man, const std::vector<SectionData>& data);

// (pi tau Vol M)^(n r - 1) / (n r - 1)! for degree-d maps CP^m -> CP^(n-1).
// Throws NotOpenDense when the embedding criterion fails.
PiPoly maps_volume_conjectural(const ToricTarget& t, const ManifoldDescriptor& man, long d, const Rational& tau);

}  // namespace vortex
