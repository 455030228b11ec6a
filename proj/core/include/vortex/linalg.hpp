#pragma once

#include <optional>
#include <vector>

#include "vortex/pipoly.hpp"
#include "vortex/rational.hpp"

namespace vortex {

using RatMatrix = std::vector<std::vector<Rational>>;  // row-major
using IntMatrix = std::vector<std::vector<Integer>>;

int rank(RatMatrix m);

// One solution of A x = b with free variables set to zero, or nullopt when
// the system is inconsistent. A is rational, b lives in Q[pi].
std::optional<std::vector<PiPoly>> solve_linear(RatMatrix a, std::vector<PiPoly> b);

// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix, positive.
std::vector<Integer> smith_invariants(IntMatrix m);

}  // namespace vortex
