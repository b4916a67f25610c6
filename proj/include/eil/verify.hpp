#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eil/closure.hpp"
#include "eil/decomposition.hpp"
#include "eil/fixtures.hpp"
#include "eil/graph.hpp"
#include "eil/monomial.hpp"
#include "eil/stability.hpp"

namespace eil::verify {

struct ClaimResult {
  std::string group;
  std::string id;
  std::string statement;
  bool pass = false;
  std::string detail;  // observed value on failure
};

class Collector {
 public:
  explicit Collector(std::string group) : group_(std::move(group)) {}

  void check(std::string id, std::string statement, bool pass, std::string detail = {}) {
    out_.push_back({group_, std::move(id), std::move(statement), pass, pass ? std::string{} : std::move(detail)});
  }

  // Runs f, recording an exception as a failure of this claim.
  void guarded(std::string id, std::string statement, const std::function<bool(std::string&)>& f) {
    std::string detail;
    bool ok = false;
    try {
      ok = f(detail);
    } catch (const std::exception& e) {
      detail = std::string("threw: ") + e.what();
    }
    check(std::move(id), std::move(statement), ok, std::move(detail));
  }

  std::vector<ClaimResult> take() { return std::move(out_); }

 private:
  std::string group_;
  std::vector<ClaimResult> out_;
};

inline std::string num(std::size_t v) { return "got " + std::to_string(v); }

inline std::vector<ClaimResult> fixture_claims() {
  Collector c("fixtures");
  const auto r = fixtures::integrity();
  c.check("fig9-bytes", "embedded FIG9 edge list equals the quoted generator list", r.fig9, fixtures::fig9_rendered());
  c.check("assce-bytes", "embedded ASSCE ideal equals the quoted cubic list", r.assce, fixtures::assce_rendered());
  return c.take();
}

// Single edge parallelized to (3,3) and (3,1).
inline std::vector<ClaimResult> april9_claims() {
  Collector c("april9");
  const Graph e = fixtures::e1();
  const Graph k33 = parallelize(e, std::vector<Exponent>{3, 3}).graph();
  c.check("k33-shape", "(single edge)^(3,3) is complete bipartite on 3+3 vertices",
          k33.num_vertices() == 6 && k33.num_edges() == 9 && is_bipartite(k33), num(k33.num_edges()));
  const Graph star = parallelize(e, std::vector<Exponent>{3, 1}).graph();
  c.check("star-shape", "(single edge)^(3,1) is a star with 3 leaves",
          star.num_vertices() == 4 && star.num_edges() == 3 && leaf_count(star) == 3, num(leaf_count(star)));
  c.check("k33-matching", "matching number of K33 is 3", matching_number(k33) == 3, num(matching_number(k33)));
  c.check("k33-perfect", "K33 has a perfect matching", has_perfect_matching(k33));
  const Monomial a{3, 3};
  c.check("power-index", "x1^3 x2^3 lies in I^3 but not I^4", power_index(e, a) == 3 && edge_ideal(e).contains(a),
          num(power_index(e, a)));
  const auto f = factor_by_matching(e, a);
  c.check("factorization", "x1^3 x2^3 factors as three copies of the edge with trivial remainder",
          f.edge_count() == 3 && f.delta.is_one() && f.reproduces(e, a), num(f.edge_count()));
  c.check("edge-subring", "x1^3 x2^3 lies in the edge subring", edge_subring_member(e, a));
  return c.take();
}

inline std::vector<ClaimResult> fig7_claims() {
  Collector c("fig7");
  const Graph g = fixtures::fig7();
  c.check("deficiency", "def(FIG7) = 2", deficiency(g) == 2, num(deficiency(g)));
  c.check("matching", "matching number of FIG7 is 2", matching_number(g) == 2, num(matching_number(g)));
  c.check("no-perfect", "FIG7 has no perfect matching", !has_perfect_matching(g));
  const Graph g8 = parallelize(g, fixtures::fig8_multiplicity()).graph();
  c.check("fig8-deficiency", "def(FIG7^(1,1,2,2,1,1)) = 0", deficiency(g8) == 0, num(deficiency(g8)));
  const auto f = factor_by_matching(g, Monomial::ones(6));
  c.check("factorization", "x1...x6 = x^delta f^c with |c| = 2 and |delta| = 2",
          f.edge_count() == 2 && f.delta.degree() == 2 && f.reproduces(g, Monomial::ones(6)), num(f.delta.degree()));
  const auto berge = berge_deficiency(g);
  c.check("berge", "Berge formula gives 2 on FIG7", berge.value == 2, num(berge.value));
  return c.take();
}

inline std::vector<ClaimResult> cover_claims() {
  Collector c("covers");
  const auto ass = associated_primes(edge_ideal(fixtures::c3()));
  const PrimeSet want{MonomialPrime({0, 1}), MonomialPrime({0, 2}), MonomialPrime({1, 2})};
  c.check("c3-ass", "Ass(R/I(C3)) are the three minimal vertex covers", ass == want, num(ass.size()));
  for (const auto& [name, g] : fixtures::catalog_graphs()) {
    const auto I = edge_ideal(g);
    c.check("min-eq-ass-" + name, "Min(R/I) = Ass(R/I) for " + name, minimal_primes(I) == associated_primes(I));
  }
  return c.take();
}

inline std::vector<ClaimResult> rank_claims() {
  Collector c("rank");
  const auto r3 = incidence_rank(fixtures::c3());
  const auto r4 = incidence_rank(fixtures::c4());
  c.check("c3-incidence", "incidence rank of C3 is |V| = 3 (connected non-bipartite)", r3 == 3, num(r3));
  c.check("c4-incidence", "incidence rank of C4 is |V| - 1 = 3 (connected bipartite)", r4 == 3, num(r4));
  const auto l3 = analytic_spread(edge_ideal(fixtures::c3()));
  const auto l4 = analytic_spread(edge_ideal(fixtures::c4()));
  const auto l33 = analytic_spread(edge_ideal(fixtures::c3_c3()));
  c.check("c3-spread", "analytic spread of I(C3) is 3", l3 == 3, num(l3));
  c.check("c4-spread", "analytic spread of I(C4) is 3", l4 == 3, num(l4));
  c.check("c3c3-spread", "analytic spread of I(C3 + C3) is 3 + 3", l33 == 6, num(l33));
  return c.take();
}

inline std::vector<ClaimResult> bound_claims() {
  Collector c("stability-bound");
  const auto b9 = stability_bound(fixtures::fig9());
  const auto b4 = stability_bound(fixtures::c4());
  const auto b33 = stability_bound(fixtures::c3_c3());
  c.check("fig9", "index of stability of I(FIG9) is at most 8", b9 == 8u, num(b9.value_or(0)));
  c.check("c4", "bipartite C4 has stability bound 1", b4 == 1u, num(b4.value_or(0)));
  c.check("c3c3", "C3 + C3 has combined bound 3", b33 == 3u, num(b33.value_or(0)));
  return c.take();
}

// The 9-vertex worked example. Takes the graph so a tampered copy can be
// checked as a negative control.
inline std::vector<ClaimResult> intcl1_claims(const Graph& g, const ClosureOptions& copt = {}) {
  Collector c("intcl1");
  const MonomialIdeal I = edge_ideal(g);
  ChainOptions opt;
  opt.closure = copt;
  ChainReport r;
  try {
    r = analyze_chain(I, 5, opt, stability_bound(g), "FIG9");
  } catch (const std::exception& e) {
    c.check("chain", "compute Ass and closure chains up to k = 5", false, e.what());
    return c.take();
  }
  if (g.num_vertices() != 9) {
    c.check("shape", "graph has 9 vertices", false, num(g.num_vertices()));
    return c.take();
  }
  const Monomial xa{1, 1, 1, 0, 1, 1, 1, 1, 1};
  for (unsigned k = 1; k <= 3; ++k)
    c.check("closed-" + std::to_string(k), "closure(I^" + std::to_string(k) + ") = I^" + std::to_string(k),
            r.closure_added[k - 1].empty(), num(r.closure_added[k - 1].size()));
  const MonomialIdeal I4 = ideal_power(I, 4), I5 = ideal_power(I, 5);
  const MonomialIdeal xa_ideal(I.variables(), {xa});
  const MonomialIdeal cl4 = ideal_sum(I4, MonomialIdeal(I.variables(), r.closure_added[3]));
  const MonomialIdeal cl5 = ideal_sum(I5, MonomialIdeal(I.variables(), r.closure_added[4]));
  c.check("closure-4", "closure(I^4) = I^4 + (x1x2x3x5x6x7x8x9)", cl4 == ideal_sum(I4, xa_ideal),
          num(r.closure_added[3].size()));
  c.check("closure-5", "closure(I^5) = I^5 + I(x1x2x3x5x6x7x8x9)", cl5 == ideal_sum(I5, ideal_product(I, xa_ideal)),
          num(r.closure_added[4].size()));
  c.check("witness-np", "x1x2x3x5x6x7x8x9 lies in NP(I^4)", NewtonPolyhedron(I, 4).contains(xa));
  c.check("witness-index", "x1x2x3x5x6x7x8x9 lies in I^3 but not I^4", power_index(g, xa) == 3,
          num(power_index(g, xa)));
  const auto& A = r.ass_chain;
  const auto& C = r.closure_ass_chain;
  bool strict = true;
  for (int k = 0; k < 3; ++k) strict = strict && r.ascending[k] && r.strict[k];
  c.check("ass-strict", "Ass(I^1) < Ass(I^2) < Ass(I^3) < Ass(I^4) strictly", strict);
  c.check("ass-3-in-4", "Ass(R/I^3) is contained in Ass(R/I^4) and differs from it",
          is_subset(A[2], A[3]) && A[2] != A[3]);
  c.check("ass-4-eq-5", "Ass(R/I^4) = Ass(R/I^5)", A[3] == A[4]);
  c.check("closure-strict", "Ass(closure I^3) < Ass(closure I^4) < Ass(closure I^5)",
          is_subset(C[2], C[3]) && C[2] != C[3] && is_subset(C[3], C[4]) && C[3] != C[4]);
  c.check("closure-4-in-power-4", "Ass(closure I^4) is strictly inside Ass(I^4)",
          is_subset(C[3], A[3]) && C[3] != A[3]);
  c.check("stable-equal", "Ass(R/I^5) = Ass(R/closure I^5)", A[4] == C[4]);
  c.check("sizes", "Ass chain sizes 15,20,23,26,26", A[0].size() == 15 && A[1].size() == 20 && A[2].size() == 23 &&
                                                            A[3].size() == 26 && A[4].size() == 26);
  return c.take();
}

inline std::vector<ClaimResult> assce_claims(const MonomialIdeal& I = fixtures::assce()) {
  Collector c("ass-powers-ce");
  c.guarded("colon-2", "(I^2 : I) = I", [&](std::string&) { return colon(ideal_power(I, 2), I) == I; });
  c.guarded("colon-3", "(I^3 : I) differs from I^2",
            [&](std::string&) { return colon(ideal_power(I, 3), I) != ideal_power(I, 2); });
  c.guarded("non-normal", "closure(I^k) differs from I^k for some k <= 4", [&](std::string& d) {
    const auto n = is_normal_up_to(I, 4);
    d = "normal through 4";
    return n.first_failure.has_value();
  });
  c.guarded("chain", "Ass chain ascending with index of stability 3", [&](std::string& d) {
    const auto r = ass_chain(I, 4);
    d = "n1 " + std::to_string(r.n1_observed.value_or(0));
    return r.all_ascending() && r.n1_observed == 3u;
  });
  return c.take();
}

inline std::vector<ClaimResult> maximal_ideal_claims() {
  Collector c("maximal-ideal");
  {
    const auto r = maximal_ideal_criteria(fixtures::c3(), 2);
    c.check("c3", "C3: (b),(d) hold; m enters Ass at k = 2 for powers and closures",
            r.b_components_non_bipartite && r.d_full_incidence_rank && r.a_first_power == 2u && r.c_first_power == 2u);
  }
  {
    const auto r = maximal_ideal_criteria(fixtures::c4(), 3);
    c.check("c4", "C4: none of (a)-(d) within K = 3",
            !r.b_components_non_bipartite && !r.d_full_incidence_rank && !r.a_first_power && !r.c_first_power);
  }
  {
    const auto r = maximal_ideal_criteria(fixtures::c3_c4(), 3);
    c.check("c3c4", "C3 + C4: (b),(d) fail with rank 6 < 7; (a),(c) absent",
            !r.b_components_non_bipartite && !r.d_full_incidence_rank && r.incidence_rank == 6 && !r.a_first_power &&
                !r.c_first_power,
            num(r.incidence_rank));
  }
  {
    const auto r = ntf_check(fixtures::c4(), 3);
    c.check("ntf-c4", "C4 is normally torsion-free through k = 3", r.torsion_free_within_bound());
  }
  {
    const auto r = ntf_check(fixtures::c3(), 2);
    c.check("ntf-c3", "C3 fails torsion-freeness at k = 2", r.first_failure == 2u);
  }
  return c.take();
}

struct Group {
  std::string name;
  std::function<std::vector<ClaimResult>()> run;
};

inline std::vector<Group> groups() {
  return {{"fixtures", fixture_claims},
          {"april9", april9_claims},
          {"fig7", fig7_claims},
          {"covers", cover_claims},
          {"rank", rank_claims},
          {"stability-bound", bound_claims},
          {"intcl1", [] { return intcl1_claims(fixtures::fig9()); }},
          {"ass-powers-ce", [] { return assce_claims(); }},
          {"maximal-ideal", maximal_ideal_claims}};
}

inline std::vector<std::string> group_names() {
  std::vector<std::string> out;
  for (const auto& g : groups()) out.push_back(g.name);
  return out;
}

inline std::vector<ClaimResult> run(const std::optional<std::string>& only = std::nullopt) {
  std::vector<ClaimResult> out;
  bool matched = false;
  for (const auto& g : groups()) {
    if (only && *only != g.name) continue;
    matched = true;
    for (auto& r : g.run()) out.push_back(std::move(r));
  }
  if (!matched) throw UsageError("unknown claim group '" + only.value_or("") + "'");
  return out;
}

}  // namespace eil::verify
