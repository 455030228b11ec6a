#include <gtest/gtest.h>

#include "support/printers.hpp"
#include "vortex/linalg.hpp"
#include "vortex/lp.hpp"

using namespace vortex;

TEST(Linalg, Rank) {
  EXPECT_EQ(rank({{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(rank({{1, 0, 1}, {0, 1, 1}}), 2);
  EXPECT_EQ(rank({{0, 0}}), 0);
}

TEST(Linalg, SolveLinearWithPiRhs) {
  auto x = solve_linear({{1, 1}, {1, -1}}, {PiPoly::pi() * Rational(2), PiPoly(0)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], PiPoly::pi());
  EXPECT_EQ((*x)[1], PiPoly::pi());
  EXPECT_FALSE(solve_linear({{1, 1}, {2, 2}}, {PiPoly(1), PiPoly(3)}).has_value());
}

TEST(Linalg, SmithInvariants) {
  auto d = smith_invariants({{2, 0}, {0, 1}});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], 1);
  EXPECT_EQ(d[1], 2);
  auto e = smith_invariants({{1, 1, 1}, {1, -1, 0}});
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[1], 1);
  auto f = smith_invariants({{2, 4}, {6, 8}});
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], 2);
  EXPECT_EQ(f[1], 4);
}

TEST(Lp, SimpleOptimum) {
  // maximize x + y with x + s1 = 2, y + s2 = pi.
  LpProblem p{{{1, 0, 1, 0}, {0, 1, 0, 1}}, {PiPoly(2), PiPoly::pi()}, {1, 1, 0, 0}};
  auto r = solve_lp(p);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, PiPoly(2) + PiPoly::pi());
}

TEST(Lp, InfeasibleAndUnbounded) {
  LpProblem inf{{{1, 1}}, {PiPoly(2) - PiPoly::pi()}, {1, 0}};
  EXPECT_EQ(solve_lp(inf).status, LpStatus::Infeasible);
  LpProblem unb{{{1, -1}}, {PiPoly(1)}, {1, 0}};
  EXPECT_EQ(solve_lp(unb).status, LpStatus::Unbounded);
}

TEST(Lp, RedundantRowsAndDegeneracy) {
  LpProblem p{{{1, 1, 0}, {2, 2, 0}, {1, 0, 1}}, {PiPoly(1), PiPoly(2), PiPoly(1)}, {0, 1, 0}};
  auto r = solve_lp(p);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, PiPoly(1));
  EXPECT_TRUE(lp_feasible({{1, 1}}, {PiPoly(0)}));
  EXPECT_FALSE(lp_feasible({{1, 1}}, {PiPoly(-1)}));
}

TEST(Lp, SolutionSatisfiesConstraints) {
  LpProblem p{{{1, 2, 1, 0}, {3, 1, 0, 1}}, {PiPoly::pi() * Rational(4), PiPoly(9)}, {2, 3, 0, 0}};
  auto r = solve_lp(p);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    PiPoly lhs;
    for (std::size_t j = 0; j < r.x.size(); ++j) lhs += PiPoly(p.a[i][j]) * r.x[j];
    EXPECT_EQ(lhs, p.b[i]);
  }
  for (const auto& xi : r.x) EXPECT_NE(xi.sign(), Sign::Negative);
}
