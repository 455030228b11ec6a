#pragma once

// Independent reference implementations used to cross-check the library.
// They share nothing with the production code paths beyond PiPoly.

#include <cstdint>
#include <vector>

#include "vortex/pipoly.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<long>>;  // k rows, n columns
using Vec = std::vector<vortex::PiPoly>;

int rank_of(const Matrix& q, std::uint32_t subset);

// Caratheodory: v is in the cone iff it is a nonnegative combination of some
// linearly independent subset of the columns.
bool in_cone_closed(const Matrix& q, std::uint32_t subset, const Vec& v);

// v is interior iff v - eps*S stays in the cone for small eps > 0, where S is
// the sum of the columns. Checked basis by basis with a first-order test.
bool in_cone_interior(const Matrix& q, std::uint32_t subset, const Vec& v);

// max over realizable nonempty subsets (all r_j > 0) with v interior of
// sum r_j - rank; -1 when nothing qualifies.
int brute_dimension(const Matrix& q, const Vec& sigma, const std::vector<long>& r);

// Monomials of degree d in n variables, counted one by one.
long count_monomials(int variables, int degree);
// Semistandard tableaux of the k x d rectangle with entries in 1..n.
long count_rectangular_ssyt(int n, int k, int d);
// Lattice points 0 <= y <= a, 0 <= x <= b - k*y.
long count_hirzebruch_points(int k, long a, long b);

}  // namespace oracle
