#include <gtest/gtest.h>

#include "eil/fixtures.hpp"
#include "eil/properties.hpp"
#include "eil/stability.hpp"

using namespace eil;
namespace fx = eil::fixtures;

TEST(FirstConstantIndex, Basics) {
  const PrimeSet a{MonomialPrime({0})}, b{MonomialPrime({0}), MonomialPrime({0, 1})};
  EXPECT_EQ(first_constant_index({a, b, b}), 2u);
  EXPECT_EQ(first_constant_index({a, a}), 1u);
  EXPECT_EQ(first_constant_index({a}), 1u);
  EXPECT_FALSE(first_constant_index({}).has_value());
}

TEST(StabilityBound, Values) {
  EXPECT_EQ(stability_bound(fx::c3()), 2u);
  EXPECT_EQ(stability_bound(fx::c4()), 1u);
  EXPECT_EQ(stability_bound(fx::c5()), 3u);
  EXPECT_EQ(stability_bound(fx::fig9()), 8u);
  EXPECT_EQ(stability_bound(fx::c3_c3()), 3u);
  EXPECT_EQ(stability_bound(fx::c3_c4()), 2u);
  EXPECT_EQ(stability_bound(fx::fig7()), 1u);
}

TEST(Chain, Fig9AssSizes) {
  const auto r = ass_chain(edge_ideal(fx::fig9()), 4);
  std::vector<std::size_t> sizes;
  for (const auto& s : r.ass_chain) sizes.push_back(s.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{15, 20, 23, 26}));
  EXPECT_TRUE(r.all_ascending());
  EXPECT_TRUE(r.closure_ass_chain.empty());
}

TEST(Chain, TriangleStabilizesAtTwo) {
  const auto r = analyze_chain(edge_ideal(fx::c3()), 3, {}, stability_bound(fx::c3()));
  EXPECT_EQ(r.n1_observed, 2u);
  EXPECT_EQ(r.n2_observed, 2u);
  EXPECT_TRUE(r.n1_certified);
  EXPECT_EQ(r.stable_sets_equal, true);
  EXPECT_EQ(r.strict, (std::vector<bool>{true, false}));
}

TEST(Chain, BipartiteIsConstant) {
  const auto r = analyze_chain(edge_ideal(fx::c4()), 3);
  EXPECT_EQ(r.n1_observed, 1u);
  EXPECT_EQ(r.n2_observed, 1u);
  for (const auto& add : r.closure_added) EXPECT_TRUE(add.empty());
}

TEST(Chain, ClosureModeOnly) {
  const auto r = closure_ass_chain(edge_ideal(fx::c5()), 3);
  EXPECT_TRUE(r.ass_chain.empty());
  EXPECT_EQ(r.closure_ass_chain.size(), 3u);
  EXPECT_TRUE(r.closure_all_ascending());
  EXPECT_FALSE(r.stable_sets_equal.has_value());
}

TEST(Chain, BudgetStopsEarly) {
  ChainOptions o;
  o.budget_seconds = 0.0;
  const auto r = analyze_chain(edge_ideal(fx::fig9()), 5, o);
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.ass_chain.size(), 1u);
}

TEST(Chain, RejectsZeroPower) { EXPECT_THROW(ass_chain(edge_ideal(fx::c3()), 0), UsageError); }

TEST(Chain, AssceStabilizesAtThree) {
  const auto r = ass_chain(fx::assce(), 4);
  std::vector<std::size_t> sizes;
  for (const auto& s : r.ass_chain) sizes.push_back(s.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{10, 11, 17, 17}));
  EXPECT_TRUE(r.all_ascending());
  EXPECT_EQ(r.n1_observed, 3u);
}

TEST(Spread, Examples) {
  EXPECT_EQ(analytic_spread(edge_ideal(fx::c3())), 3u);
  EXPECT_EQ(analytic_spread(edge_ideal(fx::c4())), 3u);
  EXPECT_EQ(analytic_spread(edge_ideal(fx::c3_c3())), 6u);
  EXPECT_EQ(analytic_spread(edge_ideal(fx::p4())), 3u);
}

TEST(Spread, SumOfDisjointParts) {
  const auto I = edge_ideal(fx::c3_c4());
  std::vector<Monomial> a, b;
  for (const auto& m : I.generators()) (m.support().front() < 3 ? a : b).push_back(m);
  const MonomialIdeal L1(I.variables(), a), L2(I.variables(), b);
  EXPECT_EQ(analytic_spread_of_sum(L1, L2), analytic_spread(L1) + analytic_spread(L2));
  EXPECT_EQ(analytic_spread_of_sum(L1, L2), 6u);
}

TEST(Spread, MixedDegreeSum) {
  // the sum need not be equigenerated; x^2 plus y^3 in disjoint variables
  const VariableSet v = VariableSet::indexed(2);
  const MonomialIdeal L1(v, {{2, 0}}), L2(v, {{0, 3}});
  EXPECT_EQ(analytic_spread_of_sum(L1, L2), 2u);
  EXPECT_THROW(analytic_spread(MonomialIdeal(v, {{2, 0}, {0, 3}})), UsageError);
}

TEST(MaximalIdeal, OddCycles) {
  for (const Graph& g : {fx::c3(), fx::c5()}) {
    const auto r = maximal_ideal_criteria(g, 3);
    EXPECT_TRUE(r.b_components_non_bipartite);
    EXPECT_TRUE(r.d_full_incidence_rank);
    EXPECT_TRUE(r.a_first_power.has_value());
    EXPECT_TRUE(r.c_first_power.has_value());
    EXPECT_TRUE(r.consistent());
  }
}

TEST(MaximalIdeal, MixedUnionFailsAll) {
  const auto r = maximal_ideal_criteria(fx::c3_c4(), 3);
  EXPECT_FALSE(r.b_components_non_bipartite);
  EXPECT_FALSE(r.d_full_incidence_rank);
  EXPECT_FALSE(r.a_first_power.has_value());
  EXPECT_FALSE(r.c_first_power.has_value());
  EXPECT_EQ(r.incidence_rank, 6u);
}

TEST(Ntf, BipartiteStaysTorsionFree) {
  for (const Graph& g : {fx::c4(), fx::p4(), fx::k23()}) {
    const auto r = ntf_check(g, 3);
    EXPECT_TRUE(r.bipartite);
    EXPECT_TRUE(r.torsion_free_within_bound());
  }
  const auto t = ntf_check(fx::c3(), 3);
  EXPECT_EQ(t.first_failure, 2u);
  EXPECT_TRUE(t.consistent());
}
