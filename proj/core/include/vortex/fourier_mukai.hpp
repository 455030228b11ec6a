#pragma once

#include <string>
#include <vector>

#include "vortex/cohomring.hpp"

namespace vortex {

// Abelian variety of complex dimension m with c1(L) = sum_j delta_j dx^j∧dx^(m+j)
// and Kähler form sum_j lambda_j dx^j∧dx^(m+j).
struct AbelianVarietyData {
  int m = 1;
  std::vector<long> deltas;
  std::vector<Rational> lambdas;

  void validate() const;
};

// Generator names: "dx1".."dx{2m}" on M, "dx*1".."dx*{2m}" on the dual variety.
std::string torus_generator(int index);  // 1-based
std::string dual_generator(int index);   // 1-based

// H*(M) and H*(M^) as exterior algebras on 2m generators.
PresentationPtr torus_ring(int m);
PresentationPtr dual_torus_ring(int m);

// Orientation of M: dx1, dx{m+1}, dx2, dx{m+2}, ... (and the same for M^).
std::vector<std::string> torus_orientation(int m);
std::vector<std::string> dual_orientation(int m);

long r_sections_abelian(const AbelianVarietyData& av);

// Product over k of (delta_k - dx*_k ∧ dx*_(m+k)).
RingElement ch_transform(const AbelianVarietyData& av);
// Same class obtained by pushing exp(c1(P)) ∧ exp(c1(L)) forward along M.
RingElement ch_transform_pushforward(const AbelianVarietyData& av);

// c = exp(sum_j (-1)^(j-1) (j-1)! ch_j); needs a positive integer rank.
RingElement chern_from_character(const RingElement& ch);
// First Chern class of the transform, read off the product formula.
RingElement c1_transform(const AbelianVarietyData& av);
// c = exp(sum_k (-1)^(k-1) (r/k) (c1/r)^k) = (1 + c1/r)^r.
RingElement chern_closed_form(const AbelianVarietyData& av);
// Variant with the sign pattern (-1)^(k(k-1)/2); it agrees with the one above
// for m <= 2 only.
RingElement chern_closed_form_printed(const AbelianVarietyData& av);
RingElement segre(const RingElement& c);
// ch_j = ch_1 ch_(j-1) / (j r); vacuously true for m = 1.
bool recursion_check(const AbelianVarietyData& av, int j);
// Same identity with the extra factor (-1)^j; holds for j = 2 only.
bool recursion_check_printed(const AbelianVarietyData& av, int j);
// ch_j = ch_1^j / (j! r^(j-1)).
bool power_formula_check(const AbelianVarietyData& av, int j);

// F([omega^(m-1)]/(m-1)!) computed as p2*(ch(P) ∧ omega^(m-1)/(m-1)!).
RingElement fm_kahler_power(const AbelianVarietyData& av);
// Same class from -sum_j (prod_{i != j} lambda_i) dx*_j ∧ dx*_(m+j).
RingElement fm_kahler_power_closed(const AbelianVarietyData& av);

// s_(l-r+1), zero when the index is negative.
RingElement segre_pushforward(int l, const RingElement& segre_class, int r);

}  // namespace vortex
