#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "eil/closure.hpp"
#include "eil/decomposition.hpp"
#include "eil/fixtures.hpp"
#include "eil/graph.hpp"
#include "eil/monomial.hpp"
#include "eil/report.hpp"
#include "eil/stability.hpp"

namespace eil::properties {

// ---------------------------------------------------------------------------
// Corpus

namespace detail {

inline std::vector<std::pair<Vertex, Vertex>> all_pairs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) p.emplace_back(i, j);
  return p;
}

inline bool connected(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  for (Vertex v = 1; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

}  // namespace detail

// Every graph on 2..max_vertices vertices without isolated vertices, one per
// isomorphism class (smallest edge mask over all relabelings).
inline std::vector<Graph> exhaustive_graphs(std::size_t max_vertices, bool connected_only = false) {
  if (max_vertices > 6) throw BudgetExceeded("exhaustive enumeration is limited to 6 vertices");
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    const auto pairs = detail::all_pairs(n);
    std::map<std::pair<Vertex, Vertex>, std::size_t> pos;
    for (std::size_t i = 0; i < pairs.size(); ++i) pos[pairs[i]] = i;
    std::vector<std::vector<std::size_t>> perm_maps;  // pair index -> pair index under each permutation
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::size_t> m(pairs.size());
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto a = perm[pairs[i].first], b = perm[pairs[i].second];
        m[i] = pos[{std::min(a, b), std::max(a, b)}];
      }
      perm_maps.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<int> deg(n, 0);
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1U) {
          ++deg[pairs[i].first];
          ++deg[pairs[i].second];
          edges.push_back(pairs[i]);
        }
      if (std::count(deg.begin(), deg.end(), 0) != 0) continue;
      bool canonical = true;
      for (const auto& m : perm_maps) {
        std::uint64_t image = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i)
          if (mask >> i & 1U) image |= std::uint64_t{1} << m[i];
        if (image < mask) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      if (connected_only && !detail::connected(n, edges)) continue;
      out.push_back(Graph::indexed(n, edges));
    }
  }
  return out;
}

// Erdos-Renyi style sample; an isolated vertex gets a pendant edge to a
// random other vertex. Only the engine's raw output is used, so the result
// depends on the seed alone.
inline Graph sample_graph(std::mt19937_64& rng, std::size_t n, unsigned edge_permille = 400) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<int> deg(n, 0);
  for (auto [a, b] : detail::all_pairs(n))
    if (rng() % 1000 < edge_permille) {
      edges.emplace_back(a, b);
      ++deg[a];
      ++deg[b];
    }
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] != 0) continue;
    Vertex w = static_cast<Vertex>(rng() % (n - 1));
    if (w >= v) ++w;
    edges.emplace_back(std::min(v, w), std::max(v, w));
    ++deg[v];
    ++deg[w];
  }
  return Graph::indexed(n, edges);
}

inline std::vector<Graph> sampled_graphs(std::uint64_t seed, std::size_t count, std::size_t min_vertices = 6,
                                         std::size_t max_vertices = 7) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = min_vertices + rng() % (max_vertices - min_vertices + 1);
    out.push_back(sample_graph(rng, n));
  }
  return out;
}

// Disjoint unions of two small sampled graphs; the first pair is forced to
// have only non-bipartite components (a triangle plus a 4-vertex graph with
// an odd cycle).
inline std::vector<Graph> sampled_unions(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Graph> out;
  out.push_back(disjoint_union(fixtures::c3(), Graph::indexed(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}, "y")));
  while (out.size() < count) {
    const Graph a = sample_graph(rng, 2 + rng() % 3);
    const Graph b = sample_graph(rng, 2 + rng() % 3);
    out.push_back(disjoint_union(a, Graph(VariableSet::indexed(b.num_vertices(), "y").names(), [&] {
      std::vector<std::pair<Vertex, Vertex>> e;
      for (const auto& x : b.edges()) e.emplace_back(x.u, x.v);
      return e;
    }())));
  }
  return out;
}

// Random ideal generated in one degree on the variables `vars` (indices into
// an n-variable ring).
inline MonomialIdeal sample_equigenerated(std::mt19937_64& rng, std::size_t n, const std::vector<std::size_t>& vars,
                                          const VariableSet& names) {
  const Exponent d = 1 + static_cast<Exponent>(rng() % 3);
  const std::size_t count = 1 + rng() % 5;
  std::vector<Monomial> gens;
  for (std::size_t c = 0; c < count; ++c) {
    Monomial m = Monomial::one(n);
    for (Exponent t = 0; t < d; ++t) ++m[vars[rng() % vars.size()]];
    gens.push_back(m);
  }
  return MonomialIdeal(names, std::move(gens));
}

// Square-free ideal on n variables, every variable used, generators of
// degree 2 or 3.
inline MonomialIdeal sample_squarefree(std::mt19937_64& rng, std::size_t n) {
  std::vector<Monomial> gens;
  std::vector<bool> used(n, false);
  const std::size_t count = 3 + rng() % 4;
  for (std::size_t c = 0; c < count; ++c) {
    Monomial m = Monomial::one(n);
    const std::size_t d = 2 + rng() % 2;
    while (m.degree() < d) m[rng() % n] = 1;
    for (auto i : m.support()) used[i] = true;
    gens.push_back(m);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) {
      Monomial m = Monomial::unit(n, i);
      m[(i + 1) % n] = 1;
      gens.push_back(m);
    }
  return MonomialIdeal(VariableSet::indexed(n), std::move(gens));
}

// ---------------------------------------------------------------------------
// Independent oracles

// Minimal vertex covers by subset enumeration.
inline PrimeSet brute_force_covers(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint64_t> covers;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (const auto& e : g.edges())
      if (!(s >> e.u & 1U) && !(s >> e.v & 1U)) {
        ok = false;
        break;
      }
    if (ok) covers.push_back(s);
  }
  PrimeSet out;
  for (auto s : covers) {
    bool minimal = true;
    for (auto t : covers)
      if (t != s && (t & s) == t) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    std::vector<std::size_t> sup;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1U) sup.push_back(v);
    out.emplace_back(std::move(sup));
  }
  return normalize(std::move(out));
}

// x^a as a product of edge monomials, by exhaustive search: the lowest
// remaining variable must pair with some neighbour.
inline bool brute_force_edge_factorization(const Graph& g, std::vector<Exponent> a) {
  std::size_t i = 0;
  while (i < a.size() && a[i] == 0) ++i;
  if (i == a.size()) return true;
  for (Vertex j : g.neighbors(i)) {
    if (a[j] == 0) continue;
    --a[i];
    --a[j];
    if (brute_force_edge_factorization(g, a)) return true;
    ++a[i];
    ++a[j];
  }
  return false;
}

// Every exponent vector with entries in [0, top].
inline std::vector<Monomial> all_vectors(std::size_t n, Exponent top) {
  std::vector<Monomial> out;
  Monomial a = Monomial::one(n);
  for (;;) {
    out.push_back(a);
    std::size_t i = 0;
    while (i < n && a[i] == top) a[i++] = 0;
    if (i == n) break;
    ++a[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Battery

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool pass() const { return failures == 0; }
};

class Tally {
 public:
  PropertyResult& operator[](const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, results_.size()).first;
      results_.push_back({name, 0, 0, {}});
    }
    return results_[it->second];
  }

  void record(const std::string& name, bool ok, const std::string& where) {
    auto& r = (*this)[name];
    ++r.cases;
    if (ok) return;
    if (r.failures++ == 0) r.first_failure = where;
  }

  const std::vector<PropertyResult>& results() const { return results_; }
  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<PropertyResult> results_;
};

struct BatteryOptions {
  std::size_t max_vertices = 5;
  unsigned max_power = 3;
  std::uint64_t seed = 20110129;
  std::size_t samples = 50;
  unsigned sample_power = 2;
  std::size_t unions = 6;
  std::size_t spread_pairs = 20;
  bool cross_check_splitting = true;
};

inline std::string describe(const Graph& g) {
  std::string s = std::to_string(g.num_vertices()) + "v:";
  for (const auto& e : g.edges()) s += " " + g.label(e.u) + "-" + g.label(e.v);
  return s;
}

namespace detail {

inline void matching_properties(const Graph& g, Tally& t) {
  const std::string where = describe(g);
  const auto blossom = maximum_matching(g);
  const auto bnb = maximum_matching_branch_and_bound(g);
  t.record("matching: blossom size equals branch-and-bound", blossom.size == bnb.size, where);
  t.record("matching: certificates validate", blossom.valid_for(g) && bnb.valid_for(g), where);
  const std::size_t def = g.num_vertices() - 2 * blossom.size;
  if (g.num_vertices() <= kDefaultBergeCap) {
    t.record("berge: formula equals deficiency", berge_deficiency(g).value == def, where);
    t.record("tutte: condition iff perfect matching", tutte_condition(g) == (def == 0), where);
  }
  std::vector<std::size_t> dup_def, dup_nu;
  for (const auto& e : g.edges()) {
    const Graph h = duplicate_edge(g, e.u, e.v).graph();
    dup_nu.push_back(matching_number(h));
    dup_def.push_back(h.num_vertices() - 2 * dup_nu.back());
  }
  bool all_pm = std::all_of(dup_def.begin(), dup_def.end(), [](std::size_t d) { return d == 0; });
  t.record("duplication: perfect matching iff every G^f has one", (def == 0) == all_pm, where);
  bool iff = true;
  for (std::size_t delta = 0; delta <= g.num_vertices(); ++delta) {
    const bool lhs = std::all_of(dup_def.begin(), dup_def.end(), [&](std::size_t d) { return d == delta; });
    const bool rhs = def == delta &&
                     std::all_of(dup_nu.begin(), dup_nu.end(), [&](std::size_t v) { return v == blossom.size + 1; });
    iff = iff && lhs == rhs;
  }
  t.record("duplication: def(G^f) constant iff def(G) and nu grows by one", iff, where);
}

}  // namespace detail

// Properties over one graph with powers up to K.
inline void graph_properties(const Graph& g, unsigned K, const BatteryOptions& opt, Tally& t) {
  const std::string where = describe(g);
  const MonomialIdeal I = edge_ideal(g);
  const std::size_t n = g.num_vertices();

  // monomial core
  std::vector<MonomialIdeal> powers{MonomialIdeal::unit(I.variables())};
  for (unsigned k = 1; k <= K + 1; ++k) powers.push_back(ideal_product(powers.back(), I));
  for (unsigned k = 1; k <= K; ++k) {
    t.record("colon: (I^{k+1} : I) = I^k", colon(powers[k + 1], I) == powers[k], where + " k=" + std::to_string(k));
    t.record("power: I^a I^b = I^{a+b}", ideal_product(powers[1], powers[k]) == powers[k + 1], where);
  }
  t.record("minimality: generators pairwise non-dividing", powers[K + 1].is_minimal(), where);
  t.record("serialization: deterministic", io::format_ideal(powers[K]) == io::format_ideal(ideal_power(I, K)), where);

  // associated primes
  std::vector<PrimeSet> ass{{}};
  for (unsigned k = 1; k <= K + 1; ++k) {
    const Decomposition d = irreducible_decomposition(powers[k]);
    ass.push_back(radicals(d));
    if (k <= K) {
      t.record("decomposition: intersection equals the ideal", intersect_components(d, I.variables()) == powers[k],
               where);
      bool irredundant = true;
      if (k <= 2)
        for (std::size_t drop = 0; drop < d.size(); ++drop) {
          Decomposition rest = d;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
          if (!rest.empty() && intersect_components(rest, I.variables()) == powers[k]) irredundant = false;
        }
      t.record("decomposition: irredundant", irredundant, where);
      if (opt.cross_check_splitting) {
        auto a = d, b = splitting_decomposition(powers[k]);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        const bool same = a == b;
        t.record("decomposition: splitting equals incremental", same, where + " k=" + std::to_string(k));
      }
      try {
        const auto oracle = primes_of(associated_primes_witness_oracle(powers[k], k));
        t.record("ass: witness oracle equals decomposition", oracle == ass[k], where + " k=" + std::to_string(k));
      } catch (const BudgetExceeded&) {
      }
    }
  }
  t.record("ass: Min = Ass for I", minimal_primes(I) == ass[1], where);
  t.record("covers: minimal primes equal brute-force covers", minimal_primes(I) == brute_force_covers(g), where);
  const MonomialPrime m = MonomialPrime::maximal(n);
  for (unsigned k = 1; k <= K; ++k) {
    t.record("persistence: Ass(I^k) in Ass(I^{k+1})", is_subset(ass[k], ass[k + 1]),
             where + " k=" + std::to_string(k));
    if (std::binary_search(ass[k].begin(), ass[k].end(), m))
      t.record("maximal ideal persists", std::binary_search(ass[k + 1].begin(), ass[k + 1].end(), m), where);
  }

  // closure
  std::vector<PrimeSet> cl_ass{{}};
  for (unsigned k = 1; k <= K; ++k) {
    const MonomialIdeal cl = integral_closure_power(I, k);
    cl_ass.push_back(associated_primes(cl));
    const NewtonPolyhedron np(I, k);
    t.record("closure: I^k inside closure", ideal_subset(powers[k], cl), where);
    const Monomial u = pow(I.lcm_of_generators(), k);
    bool floor = true, box = true, members = true, mono = true, sound = true;
    for (const auto& a : cl.generators()) {
      floor = floor && a.degree() >= 2ULL * k;
      for (std::size_t i = 0; i < n; ++i) box = box && a[i] <= u[i];
      members = members && np.contains(a);
      for (std::size_t i = 0; i < n; ++i) mono = mono && np.contains(a * Monomial::unit(n, i));
      const auto o = closure_member_matching_oracle(g, a, k);
      if (o.verdict == OracleVerdict::Member) sound = sound && np.contains(a);
    }
    t.record("closure: degree floor 2k", floor, where);
    t.record("closure: generators inside the box", box, where);
    t.record("closure: generators are NP members", members, where);
    t.record("closure: NP upward closed", mono, where);
    t.record("closure: matching certificates confirmed by LP", sound, where);
    if (k > 1) t.record("closure: Ass chain ascending", is_subset(cl_ass[k - 1], cl_ass[k]), where);
  }

  // stability
  const auto bound = stability_bound(g);
  std::vector<PrimeSet> chain(ass.begin() + 1, ass.begin() + 1 + K);
  const auto n1 = first_constant_index(chain);
  if (bound && n1) t.record("stability: observed N1 within bound", *n1 <= *bound, where);
  std::vector<PrimeSet> cl_chain(cl_ass.begin() + 1, cl_ass.end());
  const auto n2 = first_constant_index(cl_chain);
  if (n1 && n2 && *n1 < K && *n2 < K)
    t.record("ratliff: Ass(closure I^K) in Ass(I^K)", is_subset(cl_chain.back(), chain.back()), where);
  if (bound && *bound <= K && n2 && *n2 < K)
    t.record("stable sets equal once both chains settle", cl_chain.back() == chain.back(), where);
  const auto comps = components(g);
  const bool b = std::all_of(comps.begin(), comps.end(), [](const Graph& c) { return !is_bipartite(c); });
  t.record("criteria: non-bipartite components iff full incidence rank", b == (incidence_rank(g) == n), where);
  if (is_bipartite(g)) {
    bool ntf = true;
    for (unsigned k = 1; k <= K; ++k) ntf = ntf && ass[k] == ass[1] && cl_ass[k] == ass[1];
    t.record("bipartite: normally torsion-free", ntf, where);
  }

  detail::matching_properties(g, t);
}

// Membership and factorization properties that enumerate exponent vectors.
inline void vector_properties(const Graph& g, unsigned K, Tally& t) {
  const std::string where = describe(g);
  const MonomialIdeal I = edge_ideal(g);
  const std::size_t n = g.num_vertices();
  std::vector<MonomialIdeal> powers;
  for (unsigned k = 1; k <= K; ++k) powers.push_back(ideal_power(I, k));
  for (const auto& a : all_vectors(n, 2)) {
    const std::size_t nu = power_index(g, a);
    bool ok = true;
    for (unsigned k = 1; k <= K; ++k) ok = ok && powers[k - 1].contains(a) == (nu >= k);
    t.record("membership: x^a in I^k iff nu(G^a) >= k", ok, where + " a=" + io::format_monomial(a, I.variables()));
    const auto f = factor_by_matching(g, a);
    t.record("factorization: certificate reproduces x^a", f.reproduces(g, a) && f.edge_count() == nu, where);
    const ParallelGraph ga = parallelize(g, a);
    bool commutes = true;
    for (const auto& e : ga.graph().edges()) commutes = commutes && duplication_commutes(ga, e.u, e.v);
    t.record("parallelization: edge duplication commutes", commutes, where);
  }
  if (n <= 4)
    for (const auto& a : all_vectors(n, 3))
      t.record("edge subring: perfect matching iff edge factorization",
               edge_subring_member(g, a) == brute_force_edge_factorization(g, a.vec()),
               where + " a=" + io::format_monomial(a, I.variables()));
}

inline void union_properties(const Graph& g, unsigned K, Tally& t) {
  const std::string where = describe(g);
  const MonomialIdeal I = edge_ideal(g);
  std::vector<MonomialIdeal> parts;
  for (const auto& vs : component_vertex_sets(g)) {
    std::vector<Monomial> gens;
    for (const auto& gen : I.generators())
      if (std::binary_search(vs.begin(), vs.end(), gen.support().front())) gens.push_back(gen);
    parts.emplace_back(I.variables(), std::move(gens));
  }
  for (unsigned k = 1; k <= K; ++k)
    t.record("disjoint union: Ass composes from the parts",
             disjoint_union_ass(parts, k) == associated_primes(ideal_power(I, k)), where + " k=" + std::to_string(k));
}

inline void spread_properties(std::uint64_t seed, std::size_t pairs, Tally& t) {
  std::mt19937_64 rng(seed ^ 0x51ed270b27a3f8c1ULL);
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t n1 = 2 + rng() % 3, n2 = 2 + rng() % 3, n = n1 + n2;
    const VariableSet vars = VariableSet::indexed(n);
    std::vector<std::size_t> v1(n1), v2(n2);
    std::iota(v1.begin(), v1.end(), 0);
    std::iota(v2.begin(), v2.end(), n1);
    const MonomialIdeal L1 = sample_equigenerated(rng, n, v1, vars);
    const MonomialIdeal L2 = sample_equigenerated(rng, n, v2, vars);
    const bool ok = analytic_spread_of_sum(L1, L2) == analytic_spread(L1) + analytic_spread(L2);
    t.record("analytic spread: additive on disjoint variables", ok,
             io::format_ideal(L1) + " | " + io::format_ideal(L2));
  }
}

inline void report_properties(const Graph& g, unsigned K, Tally& t) {
  const ChainReport r = analyze_chain(edge_ideal(g), K, {}, stability_bound(g), describe(g));
  t.record("json: report round-trips", report::from_json(nlohmann::json::parse(report::to_json(r).dump())) == r,
           describe(g));
}

// Square-free chain driver on non-graph ideals: where the colon identity
// holds through K-1, the Ass chain ascends through K.
inline void squarefree_chain_properties(const MonomialIdeal& I, unsigned K, const std::string& name, Tally& t) {
  bool colon_ok = true;
  for (unsigned k = 1; k < K; ++k) colon_ok = colon_ok && colon(ideal_power(I, k + 1), I) == ideal_power(I, k);
  if (!colon_ok) return;
  t.record("square-free: colon identity implies ascending chain", ass_chain(I, K).all_ascending(), name);
}

inline std::vector<PropertyResult> run_battery(const BatteryOptions& opt = {}) {
  Tally t;
  const auto corpus = exhaustive_graphs(opt.max_vertices);
  for (const auto& g : corpus) {
    graph_properties(g, opt.max_power, opt, t);
    vector_properties(g, std::max(opt.max_power, 4U), t);
    report_properties(g, opt.max_power, t);
  }
  for (const auto& g : sampled_graphs(opt.seed, opt.samples)) graph_properties(g, opt.sample_power, opt, t);
  for (const auto& g : sampled_unions(opt.seed, opt.unions)) {
    graph_properties(g, opt.sample_power, opt, t);
    union_properties(g, opt.sample_power + 1, t);
  }
  for (const auto& [name, g] : fixtures::catalog_graphs())
    if (g.num_vertices() <= 10) detail::matching_properties(g, t);
  spread_properties(opt.seed, opt.spread_pairs, t);
  squarefree_chain_properties(fixtures::assce(), 4, "ASSCE", t);
  std::mt19937_64 rng(opt.seed ^ 0x2545f4914f6cdd1dULL);
  for (std::size_t i = 0; i < opt.unions; ++i) {
    const MonomialIdeal J = sample_squarefree(rng, 5);
    squarefree_chain_properties(J, 3, io::format_ideal(J), t);
  }
  return t.take();
}

}  // namespace eil::properties
