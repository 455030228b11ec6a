#include "vortex/lp.hpp"

#include <optional>

#include "vortex/errors.hpp"

namespace vortex {

namespace {

struct Tableau {
  std::vector<std::vector<Rational>> a;  // rows x columns (structural + artificial)
  std::vector<PiPoly> b;
  std::vector<std::size_t> basis;
  std::size_t structural = 0;
};

void pivot(Tableau& t, std::size_t row, std::size_t col) {
  Rational inv = 1 / t.a[row][col];
  for (auto& v : t.a[row]) v *= inv;
  t.b[row] *= inv;
  for (std::size_t i = 0; i < t.a.size(); ++i) {
    if (i == row || t.a[i][col] == 0) continue;
    Rational f = t.a[i][col];
    for (std::size_t j = 0; j < t.a[i].size(); ++j) {
      if (t.a[row][j] != 0) t.a[i][j] -= f * t.a[row][j];
    }
    t.b[i] -= t.b[row] * f;
  }
  t.basis[row] = col;
}

// Runs simplex iterations for objective `cost` over columns [0, ncols).
// Returns false when the objective is unbounded.
bool iterate(Tableau& t, const std::vector<Rational>& cost, std::size_t ncols) {
  for (;;) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < ncols && !entering; ++j) {
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < t.a.size(); ++i) reduced -= cost[t.basis[i]] * t.a[i][j];
      if (reduced > 0) entering = j;
    }
    if (!entering) return true;
    const std::size_t col = *entering;

    std::optional<std::size_t> leave;
    PiPoly best;
    for (std::size_t i = 0; i < t.a.size(); ++i) {
      if (t.a[i][col] <= 0) continue;
      PiPoly ratio = t.b[i] / t.a[i][col];
      if (!leave) {
        leave = i;
        best = ratio;
        continue;
      }
      int c = compare(ratio, best);
      if (c < 0 || (c == 0 && t.basis[i] < t.basis[*leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (!leave) return false;
    pivot(t, *leave, col);
  }
}

PiPoly objective(const Tableau& t, const std::vector<Rational>& cost) {
  PiPoly v;
  for (std::size_t i = 0; i < t.a.size(); ++i) v += t.b[i] * cost[t.basis[i]];
  return v;
}

// Phase one. On success the tableau holds a feasible basis over structural
// columns only, with redundant rows dropped.
bool phase_one(Tableau& t, const std::vector<std::vector<Rational>>& a, const std::vector<PiPoly>& b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  for (const auto& row : a) {
    if (row.size() != n) throw PreconditionError("ragged LP matrix");
  }
  if (b.size() != m) throw PreconditionError("LP right-hand side has the wrong length");
  t.structural = n;
  t.a.assign(m, std::vector<Rational>(n + m, Rational(0)));
  t.b.resize(m);
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = b[i].sign() == Sign::Negative;
    for (std::size_t j = 0; j < n; ++j) t.a[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t.b[i] = flip ? -b[i] : b[i];
    t.a[i][n + i] = 1;
    t.basis[i] = n + i;
  }
  std::vector<Rational> cost(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) cost[n + i] = -1;
  iterate(t, cost, n + m);
  if (objective(t, cost).sign() != Sign::Zero) return false;

  // Drive artificial variables out of the basis; rows where that is
  // impossible are linearly dependent and can go.
  for (std::size_t i = 0; i < t.a.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j) {
      if (t.a[i][j] != 0) col = j;
    }
    if (col) {
      pivot(t, i, *col);
      ++i;
    } else {
      t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
      t.b.erase(t.b.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return true;
}

}  // namespace

bool lp_feasible(const std::vector<std::vector<Rational>>& a, const std::vector<PiPoly>& b) {
  Tableau t;
  return phase_one(t, a, b);
}

LpResult solve_lp(const LpProblem& problem) {
  Tableau t;
  LpResult result;
  if (!phase_one(t, problem.a, problem.b)) return result;
  const std::size_t n = t.structural;
  if (problem.c.size() != n) throw PreconditionError("LP objective has the wrong length");
  std::vector<Rational> cost(t.a.empty() ? n : t.a[0].size(), Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = problem.c[j];
  if (!iterate(t, cost, n)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.value = objective(t, cost);
  result.x.assign(n, PiPoly());
  for (std::size_t i = 0; i < t.a.size(); ++i) result.x[t.basis[i]] = t.b[i];
  return result;
}

}  // namespace vortex
