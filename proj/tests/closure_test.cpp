#include <gtest/gtest.h>

#include "eil/closure.hpp"
#include "eil/fixtures.hpp"
#include "eil/lp.hpp"

using namespace eil;
namespace fx = eil::fixtures;

namespace {
const Monomial kWitness{1, 1, 1, 0, 1, 1, 1, 1, 1};  // x1x2x3x5x6x7x8x9
}

TEST(Lp, SmallMaximization) {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6
  const auto s = lp::maximize({{1, 2}, {3, 1}}, {4, 6}, {1, 1});
  EXPECT_EQ(s.value, (lp::Fraction{14, 5}));
  EXPECT_EQ(s.x[0], (lp::Fraction{8, 5}));
  EXPECT_EQ(s.x[1], (lp::Fraction{6, 5}));
}

TEST(Lp, TargetStopsEarly) {
  const auto s = lp::maximize({{1, 2}, {3, 1}}, {4, 6}, {1, 1}, lp::Fraction{1, 1});
  EXPECT_FALSE(s.value < (lp::Fraction{1, 1}));
}

TEST(Lp, RejectsUnboundedAndNegativeRhs) {
  EXPECT_THROW(lp::maximize({{1, -1}}, {1}, {0, 1}), std::exception);
  EXPECT_THROW(lp::maximize({{1}}, {-1}, {1}), std::exception);
}

TEST(NewtonPolyhedron, Membership) {
  const auto I = edge_ideal(fx::c3());
  EXPECT_TRUE(NewtonPolyhedron(I, 1).contains(Monomial{1, 1, 1}));
  EXPECT_FALSE(NewtonPolyhedron(I, 2).contains(Monomial{1, 1, 1}));
  EXPECT_EQ(NewtonPolyhedron(I, 1).max_scale(Monomial{1, 1, 1}), (lp::Fraction{3, 2}));
  const auto I3 = ideal_power(I, 3);
  for (const auto& g : I3.generators()) EXPECT_TRUE(NewtonPolyhedron(I, 3).contains(g));
  EXPECT_TRUE(NewtonPolyhedron(edge_ideal(fx::fig9()), 4).contains(kWitness));
  EXPECT_FALSE(NewtonPolyhedron(edge_ideal(fx::fig9()), 5).contains(kWitness));
}

TEST(Closure, TriangleIsNormalUpTo3) {
  const auto r = is_normal_up_to(edge_ideal(fx::c3()), 3);
  EXPECT_TRUE(r.normal_up_to_bound());
}

TEST(Closure, Fig9FirstFailureAt4) {
  const auto I = edge_ideal(fx::fig9());
  const auto r = is_normal_up_to(I, 4);
  EXPECT_EQ(r.first_failure, 4u);
  const auto cl = integral_closure_power(I, 4);
  EXPECT_EQ(added_generators(cl, ideal_power(I, 4)), std::vector<Monomial>{kWitness});
  EXPECT_EQ(cl, ideal_sum(ideal_power(I, 4), MonomialIdeal(I.variables(), {kWitness})));
}

TEST(Closure, Fig9FifthPower) {
  const auto I = edge_ideal(fx::fig9());
  const auto cl = integral_closure_power(I, 5);
  const auto want = ideal_sum(ideal_power(I, 5), ideal_product(I, MonomialIdeal(I.variables(), {kWitness})));
  EXPECT_EQ(cl, want);
  EXPECT_EQ(added_generators(cl, ideal_power(I, 5)).size(), 8u);
}

TEST(Closure, ThreadedSweepMatches) {
  ClosureOptions o;
  o.threads = 3;
  const auto I = edge_ideal(fx::fig9());
  EXPECT_EQ(integral_closure_power(I, 5, o), integral_closure_power(I, 5));
}

TEST(Closure, Preconditions) {
  const MonomialIdeal mixed(VariableSet::indexed(2), {{1, 0}, {0, 2}});
  EXPECT_THROW(integral_closure_power(mixed, 2), UsageError);
  EXPECT_THROW(integral_closure_power(edge_ideal(fx::c3()), 0), UsageError);
  ClosureOptions tiny;
  tiny.cap = 10;
  EXPECT_THROW(integral_closure_power(edge_ideal(fx::fig9()), 3, tiny), BudgetExceeded);
}

TEST(Closure, AsscePowersNotAllClosed) {
  EXPECT_TRUE(is_normal_up_to(fx::assce(), 4).first_failure.has_value());
}

TEST(MatchingOracle, Certificates) {
  const Graph g = fx::fig9();
  const auto I = edge_ideal(g);
  const auto r = closure_member_matching_oracle(g, kWitness, 4);
  ASSERT_EQ(r.verdict, OracleVerdict::Member);
  EXPECT_GE(r.multiplier, 2u);
  EXPECT_TRUE(NewtonPolyhedron(I, 4).contains(kWitness));
  const auto I2 = ideal_power(I, 2);
  for (const auto& m : I2.generators()) {
    const auto o = closure_member_matching_oracle(g, m, 2);
    EXPECT_EQ(o.verdict, OracleVerdict::Member);
    EXPECT_EQ(o.multiplier, 1u);
  }
  EXPECT_EQ(closure_member_matching_oracle(fx::c3(), Monomial{1, 1, 1}, 2).verdict, OracleVerdict::Unknown);
}

TEST(Closure, GeneratorBounds) {
  const auto I = edge_ideal(fx::c5());
  for (unsigned k = 1; k <= 4; ++k) {
    const auto cl = integral_closure_power(I, k);
    const auto u = pow(I.lcm_of_generators(), k);
    EXPECT_TRUE(ideal_subset(ideal_power(I, k), cl));
    for (const auto& a : cl.generators()) {
      EXPECT_GE(a.degree(), 2ULL * k);
      for (std::size_t i = 0; i < 5; ++i) EXPECT_LE(a[i], u[i]);
    }
  }
}
