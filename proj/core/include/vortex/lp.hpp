#pragma once

#include <vector>

#include "vortex/pipoly.hpp"

namespace vortex {

// maximize c·x subject to A x = b, x >= 0, with rational A and c and a
// right-hand side in Q[pi]. Pivoting only ever divides by entries of A, so the
// tableau stays inside Q[pi] and every comparison goes through pp_sign.
struct LpProblem {
  std::vector<std::vector<Rational>> a;
  std::vector<PiPoly> b;
  std::vector<Rational> c;
};

enum class LpStatus { Infeasible, Optimal, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  PiPoly value;            // optimum when status == Optimal
  std::vector<PiPoly> x;   // an optimal basic solution
};

// Two-phase primal simplex with Bland's rule.
LpResult solve_lp(const LpProblem& problem);

// Phase one only.
bool lp_feasible(const std::vector<std::vector<Rational>>& a, const std::vector<PiPoly>& b);

}  // namespace vortex
