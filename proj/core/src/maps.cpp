#include "vortex/maps.hpp"

#include <algorithm>

#include "vortex/errors.hpp"

namespace vortex {

ToricTarget::ToricTarget(WeightSystem weights, std::vector<Rational> tau)
    : weights_(std::move(weights)), tau_(std::move(tau)) {
  if (static_cast<int>(tau_.size()) != weights_.k()) throw PreconditionError("tau needs one entry per circle factor");
  if (!check_c1(weights_, tau_vector())) throw PreconditionError("tau violates (H1)");
  if (!check_c2(weights_)) throw PreconditionError("weights violate (H2)");
}

ToricTarget::ToricTarget(WeightSystem weights, std::vector<Rational> tau, Unchecked)
    : weights_(std::move(weights)), tau_(std::move(tau)) {
  if (static_cast<int>(tau_.size()) != weights_.k()) throw PreconditionError("tau needs one entry per circle factor");
}

ToricTarget ToricTarget::unchecked(WeightSystem weights, std::vector<Rational> tau) {
  return ToricTarget(std::move(weights), std::move(tau), Unchecked{});
}

ToricTarget ToricTarget::projective_space(int n, const Rational& tau) {
  if (n < 1) throw PreconditionError("target needs n >= 1");
  return ToricTarget(WeightSystem({std::vector<long>(n, 1)}), {tau});
}

SigmaVector ToricTarget::tau_vector() const {
  SigmaVector v;
  for (const auto& t : tau_) v.emplace_back(t);
  return v;
}

bool ToricTarget::is_projective_space() const { return weights_.k() == 1 && weights_.all_weights_one(); }

std::vector<UnstablePlane> unstable_planes(const ToricTarget& t) {
  const int n = t.weights().n();
  require_enumerable(n);
  const auto tau = t.tau_vector();
  const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
  std::vector<bool> unstable(std::size_t{1} << n, false);
  unstable[0] = true;  // the empty support carries no positive combination of a nonzero tau
  for (std::uint32_t s = 1; s <= full; ++s) unstable[s] = !in_cone_interior(t.weights(), IndexSet(s), tau);

  std::vector<UnstablePlane> out;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (!unstable[s]) continue;
    bool maximal = true;
    for (int j = 0; j < n && maximal; ++j) {
      const std::uint32_t bigger = s | (1U << j);
      if (bigger != s && unstable[bigger]) maximal = false;
    }
    if (maximal) out.push_back({IndexSet(s), IndexSet(s).size()});
    if (s == full) break;
  }
  std::sort(out.begin(), out.end(), [](const UnstablePlane& a, const UnstablePlane& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return lex_less(a.allowed, b.allowed);
  });
  return out;
}

std::vector<SectionData> section_data(const ToricTarget& t, const ManifoldDescriptor& man,
                                      const std::vector<BundleDescriptor>& xi) {
  std::vector<SectionData> out;
  for (int j = 0; j < t.weights().n(); ++j) {
    const auto bundle = combine_bundles(t.weights().column(j), xi);
    out.push_back({r_sections(man, bundle), is_trivial(man, bundle)});
  }
  return out;
}

std::optional<int> s_invariant(const ToricTarget& t, const std::vector<SectionData>& data) {
  const int n = t.weights().n();
  if (static_cast<int>(data.size()) != n) throw PreconditionError("need section data for every coordinate");
  std::optional<int> best;
  for (const auto& plane : unstable_planes(t)) {
    bool minus_infinity = false;
    int s = plane.dim;
    for (int j = 0; j < n; ++j) {
      if (plane.allowed.contains(j)) continue;
      if (data[j].trivial) minus_infinity = true;
      if (data[j].r == 0) ++s;
    }
    if (minus_infinity) continue;
    if (!best || s > *best) best = s;
  }
  return best;
}

std::optional<int> s_invariant(const ToricTarget& t, const ManifoldDescriptor& man,
                               const std::vector<SectionData>& data) {
  validate(man);
  return s_invariant(t, data);
}

bool embedding_open_dense(const ToricTarget& t, const ManifoldDescriptor& man, const std::vector<SectionData>& data) {
  if (!std::holds_alternative<ProjectiveSpace>(man)) {
    throw UnsupportedError("the open-dense embedding criterion is proved for projective-space bases only");
  }
  const auto s = s_invariant(t, man, data);
  if (!s) return true;
  return t.weights().n() - *s > complex_dimension(man);
}

PiPoly maps_volume_conjectural(const ToricTarget& t, const ManifoldDescriptor& man, long d, const Rational& tau) {
  if (!t.is_projective_space()) throw PreconditionError("conjectural map volumes need a projective-space target");
  if (d < 0) throw PreconditionError("map degree must be nonnegative");
  if (tau <= 0) throw PreconditionError("tau must be positive");
  const auto data = section_data(t, man, {Degree{d}});
  if (!embedding_open_dense(t, man, data)) throw NotOpenDense("maps do not embed as an open dense subset");
  const long n = t.weights().n();
  const long r = r_sections(man, Degree{d});
  const long dim = n * r - 1;
  const PiPoly base = PiPoly::pi() * (tau * volume(man));
  return base.pow(static_cast<unsigned>(dim)) * Rational(Integer(1), factorial(static_cast<unsigned long>(dim)));
}

}  // namespace vortex
