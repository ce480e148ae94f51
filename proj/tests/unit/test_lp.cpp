#include <gtest/gtest.h>

#include "oracles.hpp"
#include "splitcut/lp.hpp"

namespace splitcut {
namespace {

using testing::Sampler;

TEST(Lp, SingleConstraintOptimum) {
  LpProblem p(2);
  p.set_objective({Rational(1), Rational(1)});
  p.add_row({Rational(9, 10), Rational(4, 5)}, RowSense::greater_equal, Rational(1));
  const LpOutcome out = solve(p);
  ASSERT_EQ(out.status, LpStatus::optimal);
  EXPECT_EQ(out.optimum, Rational(10, 9));
  EXPECT_EQ(out.primal, (std::vector<Rational>{Rational(10, 9), Rational(0)}));
  ASSERT_EQ(out.duals.size(), 1u);
  EXPECT_EQ(out.duals[0], Rational(10, 9));
  EXPECT_TRUE(verify(p, out));
}

TEST(Lp, InfeasibleWithFarkas) {
  LpProblem p(1);
  p.set_objective({Rational(0)});
  p.add_row({Rational(0)}, RowSense::equal, Rational(1));
  const LpOutcome out = solve(p);
  ASSERT_EQ(out.status, LpStatus::infeasible);
  ASSERT_EQ(out.farkas.size(), 1u);
  EXPECT_GT(out.farkas[0] * Rational(1), Rational(0));
  EXPECT_TRUE(verify(p, out));
}

TEST(Lp, Unbounded) {
  LpProblem p(1);
  p.set_objective({Rational(-1)});
  const LpOutcome out = solve(p);
  ASSERT_EQ(out.status, LpStatus::unbounded);
  EXPECT_TRUE(verify(p, out));
  ASSERT_EQ(out.ray.size(), 1u);
  EXPECT_GT(out.ray[0], Rational(0));
}

TEST(Lp, MalformedInput) {
  LpProblem p(2);
  EXPECT_THROW(p.set_objective({Rational(1)}), InputError);
  EXPECT_THROW(p.add_row({Rational(1)}, RowSense::equal, Rational(0)), InputError);
}

TEST(Lp, TamperedCertificatesAreRejected) {
  LpProblem p(2);
  p.set_objective({Rational(1), Rational(2)});
  p.add_row({Rational(1), Rational(1)}, RowSense::greater_equal, Rational(3));
  LpOutcome out = solve(p);
  ASSERT_EQ(out.status, LpStatus::optimal);
  EXPECT_TRUE(verify(p, out));
  out.optimum += Rational(1, 100);
  EXPECT_FALSE(verify(p, out));
}

TEST(Lp, DegenerateCyclingCandidate) {
  // Beale's example, which cycles under the textbook largest-coefficient rule.
  LpProblem p(4);
  p.set_objective({Rational(-3, 4), Rational(150), Rational(-1, 50), Rational(6)});
  p.add_row({Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)}, RowSense::less_equal, Rational(0));
  p.add_row({Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)}, RowSense::less_equal, Rational(0));
  p.add_row({Rational(0), Rational(0), Rational(1), Rational(0)}, RowSense::less_equal, Rational(1));
  const LpOutcome out = solve(p);
  ASSERT_EQ(out.status, LpStatus::optimal);
  EXPECT_EQ(out.optimum, Rational(-1, 20));
}

TEST(Lp, AgreesWithVertexEnumeration) {
  Sampler rnd(41);
  int optimal = 0;
  int infeasible = 0;
  for (int t = 0; t < 250; ++t) {
    const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 4));
    const std::size_t m = static_cast<std::size_t>(rnd.integer(1, 3));
    LpProblem p(n);
    p.set_objective(rnd.nonneg(n, 3, 4));
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j) row.push_back(rnd.rational(3, 4));
      const int kind = rnd.integer(0, 2);
      const RowSense sense = kind == 0 ? RowSense::equal : kind == 1 ? RowSense::greater_equal : RowSense::less_equal;
      p.add_row(row, sense, rnd.rational(3, 4));
    }
    const LpOutcome out = solve(p);
    EXPECT_TRUE(verify(p, out));
    const auto ref = testing::vertex_minimum(p);
    ASSERT_NE(out.status, LpStatus::unbounded);  // c >= 0 and x >= 0
    if (ref) {
      ASSERT_EQ(out.status, LpStatus::optimal);
      EXPECT_EQ(out.optimum, *ref);
      ++optimal;
    } else {
      EXPECT_EQ(out.status, LpStatus::infeasible);
      ++infeasible;
    }
  }
  EXPECT_GT(optimal, 50);
  EXPECT_GT(infeasible, 10);
}

TEST(Lp, RedundantEqualities) {
  LpProblem p(2);
  p.set_objective({Rational(1), Rational(1)});
  p.add_row({Rational(1), Rational(2)}, RowSense::equal, Rational(2));
  p.add_row({Rational(2), Rational(4)}, RowSense::equal, Rational(4));
  const LpOutcome out = solve(p);
  ASSERT_EQ(out.status, LpStatus::optimal);
  EXPECT_EQ(out.optimum, Rational(1));
  EXPECT_TRUE(verify(p, out));
}

}  // namespace
}  // namespace splitcut
