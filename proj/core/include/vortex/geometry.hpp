#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vortex/cohomring.hpp"
#include "vortex/fourier_mukai.hpp"

namespace vortex {

// Kähler class lambda * c1(E) throughout the Picard-rank-one family.
struct ProjectiveSpace {
  int m = 1;
  Rational lambda = 1;
};

// Gr(n, k): k-planes in C^n, complex dimension k(n-k).
struct Grassmannian {
  int n = 2;
  int k = 1;
  Rational lambda = 1;
};

// F_k with [omega] = lambda [F] + delta [C], C^2 = -k, C.F = 1, F^2 = 0.
struct Hirzebruch {
  long k = 0;
  Rational lambda = 1;
  Rational delta = 1;
};

// [omega] = sum_j lambda_j dx^j ∧ dx^(m+j).
struct AbelianVariety {
  int m = 1;
  std::vector<Rational> lambdas;
};

// Pic = Z manifold with t = int c1(E)^m. Section counts are not computable in
// general and may be supplied per degree.
struct GenericPicZ {
  int m = 1;
  long t = 1;
  Rational lambda = 1;
  std::map<long, long> sections;
};

struct BundleTableEntry {
  long r = 0;
  Rational slope_vol;
  // int c1^2 ∧ omega^(m-2); needed only by the energy for m >= 2.
  std::optional<Rational> c1_squared;
  bool trivial = false;
};

struct GenericSimplyConnected {
  int m = 1;
  Rational vol = 1;
  std::vector<BundleTableEntry> entries;
};

using ManifoldDescriptor =
    std::variant<ProjectiveSpace, Grassmannian, Hirzebruch, AbelianVariety, GenericPicZ, GenericSimplyConnected>;

struct Degree {
  long d = 0;
};
struct Bidegree {
  long a = 0;
  long b = 0;
};
struct Deltas {
  std::vector<long> deltas;
};
struct TableIndex {
  int index = 0;
};

using BundleDescriptor = std::variant<Degree, Bidegree, Deltas, TableIndex>;

void validate(const ManifoldDescriptor& man);
int complex_dimension(const ManifoldDescriptor& man);
// b1 = 0; every catalog entry except abelian varieties.
bool simply_connected(const ManifoldDescriptor& man);
bool is_abelian(const ManifoldDescriptor& man);
std::string manifold_label(const ManifoldDescriptor& man);
std::string bundle_label(const BundleDescriptor& bun);

long r_sections(const ManifoldDescriptor& man, const BundleDescriptor& bun);
long t_number(const ManifoldDescriptor& man);

struct VolumeSlope {
  Rational vol;
  Rational slope_vol;
};
Rational volume(const ManifoldDescriptor& man);
VolumeSlope volume_and_slope(const ManifoldDescriptor& man, const BundleDescriptor& bun);

// c1_omega = int c1(L) ∧ omega^(m-1), c1_squared = int c1(L)^2 ∧ omega^(m-2)
// (zero for curves).
struct IntersectionNumbers {
  Rational c1_omega;
  Rational c1_squared;
};
IntersectionNumbers intersection_numbers(const ManifoldDescriptor& man, const BundleDescriptor& bun);

// Degree data equal to zero; for table entries the stored flag.
bool is_trivial(const ManifoldDescriptor& man, const BundleDescriptor& bun);

// sum_a coeffs[a] * principal[a]; table bundles cannot be combined.
BundleDescriptor combine_bundles(const std::vector<long>& coeffs, const std::vector<BundleDescriptor>& principal);
bool same_bundle(const BundleDescriptor& a, const BundleDescriptor& b);

AbelianVarietyData abelian_data(const ManifoldDescriptor& man, const BundleDescriptor& bun);

// Cohomology ring of M with the Kähler class and the fundamental class.
struct BaseCohomology {
  PresentationPtr ring;
  RingElement omega;
  FibreClass fundamental;
};
BaseCohomology base_cohomology(const ManifoldDescriptor& man);
RingElement c1_class(const ManifoldDescriptor& man, const BaseCohomology& base, const BundleDescriptor& bun);
// int_M a, as an element of `target` (the trivial ring when null).
RingElement integrate_over_base(const RingElement& a, const BaseCohomology& base,
                                const PresentationPtr& target = nullptr);

}  // namespace vortex
