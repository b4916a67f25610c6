#include <gtest/gtest.h>

#include "eil/fixtures.hpp"
#include "eil/graph.hpp"
#include "eil/io.hpp"
#include "eil/properties.hpp"

using namespace eil;
namespace fx = eil::fixtures;

TEST(Graph, RejectsLoopsAndRepeats) {
  EXPECT_THROW(Graph::indexed(2, {{0, 0}}), UsageError);
  EXPECT_THROW(Graph::indexed(2, {{0, 1}, {1, 0}}), UsageError);
}

TEST(Matching, SmallCases) {
  EXPECT_EQ(matching_number(fx::e1()), 1u);
  EXPECT_EQ(matching_number(fx::fig7()), 2u);
  EXPECT_EQ(matching_number(fx::k33()), 3u);
  EXPECT_EQ(matching_number(Graph::indexed(3, {})), 0u);
}

TEST(Matching, Deficiency) {
  EXPECT_EQ(deficiency(fx::fig7()), 2u);
  EXPECT_EQ(deficiency(fx::c3()), 1u);
  EXPECT_EQ(deficiency(parallelize(fx::fig7(), fx::fig8_multiplicity()).graph()), 0u);
}

TEST(Matching, PerfectMatching) {
  EXPECT_TRUE(has_perfect_matching(fx::k33()));
  EXPECT_FALSE(has_perfect_matching(fx::c3()));
  EXPECT_FALSE(has_perfect_matching(fx::fig7()));
}

// branch-and-bound is the independent check on the blossom search
TEST(Matching, BlossomAgreesWithBranchAndBound) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Graph g = properties::sample_graph(rng, 4 + rng() % 9, 150 + rng() % 500);
    const auto a = maximum_matching(g);
    const auto b = maximum_matching_branch_and_bound(g);
    ASSERT_EQ(a.size, b.size) << properties::describe(g);
    EXPECT_TRUE(a.valid_for(g));
    EXPECT_TRUE(b.valid_for(g));
  }
}

TEST(Matching, BlossomOnParallelizations) {
  // odd cycles duplicated several times force blossom contractions
  for (Exponent m = 1; m <= 3; ++m) {
    const Graph g = parallelize(fx::fig9(), std::vector<Exponent>(9, m)).graph();
    EXPECT_EQ(maximum_matching(g).size, maximum_matching_branch_and_bound(g).size) << m;
  }
}

TEST(Berge, MatchesDeficiency) {
  EXPECT_EQ(berge_deficiency(fx::e1()).value, 0u);
  const auto c3 = berge_deficiency(fx::c3());
  EXPECT_EQ(c3.value, 1u);
  EXPECT_TRUE(c3.witness.empty());
  for (const auto& [name, g] : fx::catalog_graphs()) EXPECT_EQ(berge_deficiency(g).value, deficiency(g)) << name;
}

TEST(Berge, CapRefuses) {
  const Graph big = parallelize(fx::fig9(), std::vector<Exponent>(9, 2)).graph();
  EXPECT_THROW(berge_deficiency(big), BudgetExceeded);
  EXPECT_NO_THROW(berge_deficiency(fx::fig7(), 6));
}

TEST(Tutte, EquivalentToPerfectMatching) {
  for (const auto& [name, g] : fx::catalog_graphs()) EXPECT_EQ(tutte_condition(g), has_perfect_matching(g)) << name;
}

TEST(Parallelize, CompleteBipartite) {
  const ParallelGraph p = parallelize(fx::e1(), std::vector<Exponent>{3, 3});
  const Graph& g = p.graph();
  EXPECT_EQ(g.num_vertices(), 6u);
  EXPECT_EQ(g.num_edges(), 9u);
  for (const auto& e : g.edges()) EXPECT_NE(p.origin(e.u), p.origin(e.v));
  EXPECT_EQ(g.label(p.vertex_of(0, 3)), "x1^3");
}

TEST(Parallelize, StarAndDeletion) {
  const Graph star = parallelize(fx::e1(), std::vector<Exponent>{3, 1}).graph();
  EXPECT_EQ(star.num_edges(), 3u);
  EXPECT_EQ(leaf_count(star), 3u);
  const Graph del = parallelize(fx::c3(), std::vector<Exponent>{1, 0, 1}).graph();
  EXPECT_EQ(del.num_vertices(), 2u);
  EXPECT_EQ(del.num_edges(), 1u);
  EXPECT_EQ(parallelize(fx::c3(), std::vector<Exponent>{0, 0, 0}).graph().num_vertices(), 0u);
}

TEST(DuplicateEdge, Shapes) {
  // duplicating the central edge of the tree is the (1,1,2,2,1,1) parallelization
  const Graph g = duplicate_edge(fx::fig7(), 2, 3).graph();
  EXPECT_EQ(g.num_vertices(), 8u);
  EXPECT_EQ(deficiency(g), 0u);
  EXPECT_EQ(deficiency(duplicate_edge(fx::fig7(), 0, 2).graph()), 2u);
  const Graph c4 = duplicate_edge(fx::e1(), 0, 1).graph();
  EXPECT_EQ(c4.num_vertices(), 4u);
  EXPECT_EQ(c4.num_edges(), 4u);
  EXPECT_TRUE(is_bipartite(c4));
  EXPECT_THROW(duplicate_edge(fx::fig7(), 0, 1), UsageError);
}

TEST(DuplicateEdge, CommutesWithParallelization) {
  const ParallelGraph ga = parallelize(fx::fig7(), fx::fig8_multiplicity());
  for (const auto& e : ga.graph().edges()) EXPECT_TRUE(duplication_commutes(ga, e.u, e.v));
}

TEST(Structure, ComponentsBipartiteGirthLeaves) {
  EXPECT_EQ(components(fx::c3_c4()).size(), 2u);
  EXPECT_FALSE(is_bipartite(fx::c3()));
  EXPECT_TRUE(is_bipartite(fx::c4()));
  EXPECT_EQ(odd_girth(fx::fig9()), 3u);
  EXPECT_EQ(odd_girth(fx::c5()), 5u);
  EXPECT_FALSE(odd_girth(fx::k23()).has_value());
  EXPECT_EQ(leaf_count(fx::fig7()), 4u);
}

TEST(Structure, IncidenceRank) {
  EXPECT_EQ(incidence_rank(fx::c3()), 3u);
  EXPECT_EQ(incidence_rank(fx::c4()), 3u);
  EXPECT_EQ(incidence_rank(fx::c3_c4()), 6u);
}

TEST(EdgeIdeal, Generators) {
  EXPECT_EQ(edge_ideal(fx::e1()).generators(), std::vector<Monomial>{(Monomial{1, 1})});
  EXPECT_EQ(edge_ideal(fx::c3()).size(), 3u);
  const auto I = edge_ideal(fx::fig9());
  EXPECT_EQ(I.size(), 10u);
  EXPECT_TRUE(I.is_squarefree());
  EXPECT_THROW(edge_ideal(Graph::indexed(3, {{0, 1}})), UsageError);
}

TEST(PowerIndex, Examples) {
  EXPECT_EQ(power_index(fx::e1(), Monomial{3, 3}), 3u);
  EXPECT_EQ(power_index(fx::c3(), Monomial{1, 1, 1}), 1u);
  EXPECT_EQ(power_index(fx::fig9(), Monomial{1, 1, 1, 0, 1, 1, 1, 1, 1}), 3u);
}

TEST(PowerIndex, AgreesWithIdealMembership) {
  const Graph g = fx::c5();
  const auto I = edge_ideal(g);
  std::vector<MonomialIdeal> powers;
  for (unsigned k = 1; k <= 4; ++k) powers.push_back(ideal_power(I, k));
  for (const auto& a : properties::all_vectors(5, 2)) {
    const auto nu = power_index(g, a);
    for (unsigned k = 1; k <= 4; ++k) EXPECT_EQ(powers[k - 1].contains(a), nu >= k);
  }
}

TEST(Factorization, Examples) {
  const auto c3 = factor_by_matching(fx::c3(), Monomial{1, 1, 1});
  EXPECT_EQ(c3.edge_count(), 1u);
  EXPECT_EQ(c3.delta.degree(), 1u);
  const auto e = factor_by_matching(fx::e1(), Monomial{3, 3});
  EXPECT_EQ(e.edge_count(), 3u);
  EXPECT_TRUE(e.delta.is_one());
  const auto f7 = factor_by_matching(fx::fig7(), Monomial::ones(6));
  EXPECT_EQ(f7.edge_count(), 2u);
  EXPECT_EQ(f7.delta.degree(), 2u);
  EXPECT_TRUE(f7.reproduces(fx::fig7(), Monomial::ones(6)));
}

TEST(EdgeSubring, MembershipAgainstBruteForce) {
  EXPECT_TRUE(edge_subring_member(fx::e1(), Monomial{3, 3}));
  EXPECT_FALSE(edge_subring_member(fx::c3(), Monomial{1, 1, 1}));
  EXPECT_TRUE(edge_subring_member(fx::c3(), Monomial{2, 2, 2}));
  for (const Graph& g : {fx::c3(), fx::c4(), fx::p4()})
    for (const auto& a : properties::all_vectors(g.num_vertices(), 3))
      EXPECT_EQ(edge_subring_member(g, a), properties::brute_force_edge_factorization(g, a.vec()));
}

TEST(GraphText, HeaderOptionalAndNamesKept) {
  const Graph g = io::parse_graph("# c\nu v\nv w\n");
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"u", "v", "w"}));
  const Graph h = io::parse_graph(io::format_graph(fx::fig9()));
  EXPECT_EQ(h.edges(), fx::fig9().edges());
}

TEST(GraphText, Errors) {
  EXPECT_THROW(io::parse_graph("x1 x2 x3\n"), ParseError);
  EXPECT_THROW(io::parse_graph("x1 x1\n"), ParseError);
  EXPECT_THROW(io::parse_graph("vars: a b\na c\n"), ParseError);
  try {
    io::parse_graph("a b\nb c\na b\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}
