#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eil/closure.hpp"
#include "eil/decomposition.hpp"
#include "eil/graph.hpp"
#include "eil/linalg.hpp"
#include "eil/monomial.hpp"

namespace eil {

enum class ChainMode { Ass, Closure, Both };

struct ChainOptions {
  ChainMode mode = ChainMode::Both;
  std::optional<double> budget_seconds;  // checked between powers
  ClosureOptions closure;
};

// Per-power record of Ass(R/I^k) and Ass(R/closure(I^k)) for k = 1..K.
// Vectors hold one entry per computed power; they are shorter than K only
// when the time budget ran out (complete == false).
struct ChainReport {
  std::string description;
  MonomialIdeal ideal{VariableSet{}};
  unsigned K = 0;
  ChainMode mode = ChainMode::Both;
  bool complete = true;

  std::vector<PrimeSet> ass_chain;
  std::vector<PrimeSet> closure_ass_chain;
  std::vector<std::vector<Monomial>> closure_added;  // closure(I^k) generators outside I^k

  std::vector<bool> ascending;          // step k -> k+1, index k-1
  std::vector<bool> strict;
  std::vector<bool> closure_ascending;
  std::vector<bool> closure_strict;

  std::optional<unsigned> n1_observed;
  std::optional<unsigned> n1_bound;
  bool n1_certified = false;  // n1_bound known and <= computed range
  std::optional<unsigned> n2_observed;
  std::optional<bool> stable_sets_equal;

  bool all_ascending() const { return std::all_of(ascending.begin(), ascending.end(), [](bool b) { return b; }); }
  bool closure_all_ascending() const {
    return std::all_of(closure_ascending.begin(), closure_ascending.end(), [](bool b) { return b; });
  }

  friend bool operator==(const ChainReport&, const ChainReport&) = default;
};

// Smallest i such that chain[i-1..] is constant (1-based); nullopt if empty.
inline std::optional<unsigned> first_constant_index(const std::vector<PrimeSet>& chain) {
  if (chain.empty()) return std::nullopt;
  std::size_t i = chain.size() - 1;
  while (i > 0 && chain[i - 1] == chain.back()) --i;
  return static_cast<unsigned>(i + 1);
}

namespace detail {

inline void step_flags(const std::vector<PrimeSet>& chain, std::vector<bool>& asc, std::vector<bool>& strict) {
  asc.clear();
  strict.clear();
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const bool sub = is_subset(chain[k - 1], chain[k]);
    asc.push_back(sub);
    strict.push_back(sub && chain[k - 1] != chain[k]);
  }
}

}  // namespace detail

// Bound on the index of stability. A connected non-bipartite component on n
// vertices with s leaves and shortest odd cycle 2k+1 gives n - k - s; a
// bipartite component gives 1; components combine as sum(b_c - 1) + 1.
inline std::optional<unsigned> stability_bound(const Graph& g) {
  if (g.num_edges() == 0) return std::nullopt;
  unsigned total = 1;
  for (const auto& c : components(g)) {
    if (c.num_edges() == 0) continue;  // isolated vertex: contributes nothing
    unsigned b = 1;
    if (const auto og = odd_girth(c)) {
      const std::size_t k = (*og - 1) / 2;
      const std::size_t n = c.num_vertices();
      const std::size_t s = leaf_count(c);
      if (n < k + s + 1) return std::nullopt;
      b = static_cast<unsigned>(n - k - s);
    }
    total += b - 1;
  }
  return total;
}

inline ChainReport analyze_chain(const MonomialIdeal& I, unsigned K, const ChainOptions& opt = {},
                                 std::optional<unsigned> n1_bound = std::nullopt, std::string description = {}) {
  if (K == 0) throw UsageError("max power must be positive");
  ChainReport r;
  r.description = std::move(description);
  r.ideal = I;
  r.K = K;
  r.mode = opt.mode;
  r.n1_bound = n1_bound;
  const bool want_ass = opt.mode != ChainMode::Closure;
  const bool want_cl = opt.mode != ChainMode::Ass;

  const auto start = std::chrono::steady_clock::now();
  MonomialIdeal power = MonomialIdeal::unit(I.variables());
  for (unsigned k = 1; k <= K; ++k) {
    if (opt.budget_seconds && k > 1) {
      const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
      if (spent.count() > *opt.budget_seconds) {
        r.complete = false;
        break;
      }
    }
    power = ideal_product(power, I);
    if (want_ass) r.ass_chain.push_back(associated_primes(power));
    if (want_cl) {
      const MonomialIdeal cl = integral_closure_power(I, k, opt.closure);
      r.closure_added.push_back(added_generators(cl, power));
      r.closure_ass_chain.push_back(associated_primes(cl));
    }
  }

  detail::step_flags(r.ass_chain, r.ascending, r.strict);
  detail::step_flags(r.closure_ass_chain, r.closure_ascending, r.closure_strict);
  r.n1_observed = first_constant_index(r.ass_chain);
  r.n2_observed = first_constant_index(r.closure_ass_chain);
  const auto computed = static_cast<unsigned>(std::max(r.ass_chain.size(), r.closure_ass_chain.size()));
  r.n1_certified = want_ass && r.n1_bound && *r.n1_bound <= computed;
  if (want_ass && want_cl && r.n1_observed && r.n2_observed) {
    const unsigned at = std::max(*r.n1_observed, *r.n2_observed);
    r.stable_sets_equal = r.ass_chain[at - 1] == r.closure_ass_chain[at - 1];
  }
  return r;
}

inline ChainReport ass_chain(const MonomialIdeal& I, unsigned K, std::optional<unsigned> n1_bound = std::nullopt) {
  ChainOptions o;
  o.mode = ChainMode::Ass;
  return analyze_chain(I, K, o, n1_bound);
}

inline ChainReport closure_ass_chain(const MonomialIdeal& I, unsigned K) {
  ChainOptions o;
  o.mode = ChainMode::Closure;
  return analyze_chain(I, K, o);
}

// ---------------------------------------------------------------------------
// Analytic spread

inline IntMatrix exponent_matrix(const MonomialIdeal& I) {
  IntMatrix a(I.nvars(), std::vector<std::int64_t>(I.size(), 0));
  for (std::size_t j = 0; j < I.size(); ++j)
    for (std::size_t i = 0; i < I.nvars(); ++i) a[i][j] = I.generators()[j][i];
  return a;
}

// Rank of the exponent matrix of an ideal generated in one degree.
inline std::size_t analytic_spread(const MonomialIdeal& I) {
  if (!I.is_equigenerated()) throw UsageError("analytic_spread: generators must share one degree");
  return exact_rank(exponent_matrix(I));
}

// Analytic spread of L1 + L2 for ideals each generated in one degree, on
// disjoint variables: the dimension of K[g_i t, h_j t], i.e. the rank of the
// combined exponent matrix with an extra row of ones for t.
inline std::size_t analytic_spread_of_sum(const MonomialIdeal& L1, const MonomialIdeal& L2) {
  if (!(L1.variables() == L2.variables())) throw UsageError("analytic_spread_of_sum: variable sets differ");
  if (!L1.is_equigenerated() || !L2.is_equigenerated())
    throw UsageError("analytic_spread_of_sum: each summand must be generated in one degree");
  const Monomial s1 = L1.lcm_of_generators();
  const Monomial s2 = L2.lcm_of_generators();
  for (std::size_t i = 0; i < s1.size(); ++i)
    if (s1[i] != 0 && s2[i] != 0) throw UsageError("analytic_spread_of_sum: summands share a variable");
  IntMatrix a = exponent_matrix(ideal_sum(L1, L2));
  a.emplace_back(a.empty() ? 0 : a.front().size(), 1);
  return exact_rank(a);
}

// ---------------------------------------------------------------------------
// Maximal ideal criteria and normal torsion-freeness

struct MaximalIdealReport {
  std::optional<unsigned> a_first_power;  // m in Ass(R/I^k), first k <= K
  bool b_components_non_bipartite = false;
  std::optional<unsigned> c_first_power;  // m in Ass(R/closure(I^t)), first t <= K
  bool d_full_incidence_rank = false;
  std::size_t incidence_rank = 0;
  unsigned K = 0;

  bool b_iff_d() const { return b_components_non_bipartite == d_full_incidence_rank; }
  // (a) and (c) can only be realized when (b) holds; absence within K with
  // (b) true is inconclusive rather than a contradiction.
  bool consistent() const {
    return b_iff_d() && (b_components_non_bipartite || (!a_first_power && !c_first_power));
  }
  bool inconclusive() const { return b_components_non_bipartite && (!a_first_power || !c_first_power); }
};

inline MaximalIdealReport maximal_ideal_criteria(const Graph& g, unsigned K, const ClosureOptions& copt = {}) {
  MaximalIdealReport r;
  r.K = K;
  const auto comps = components(g);
  r.b_components_non_bipartite =
      std::all_of(comps.begin(), comps.end(), [](const Graph& c) { return !is_bipartite(c); });
  r.incidence_rank = incidence_rank(g);
  r.d_full_incidence_rank = r.incidence_rank == g.num_vertices();

  const MonomialIdeal I = edge_ideal(g);
  const MonomialPrime m = MonomialPrime::maximal(g.num_vertices());
  MonomialIdeal power = MonomialIdeal::unit(I.variables());
  for (unsigned k = 1; k <= K; ++k) {
    power = ideal_product(power, I);
    if (!r.a_first_power) {
      const auto ass = associated_primes(power);
      if (std::binary_search(ass.begin(), ass.end(), m)) r.a_first_power = k;
    }
    if (!r.c_first_power) {
      const auto ass = associated_primes(integral_closure_power(I, k, copt));
      if (std::binary_search(ass.begin(), ass.end(), m)) r.c_first_power = k;
    }
    if (r.a_first_power && r.c_first_power) break;
  }
  return r;
}

struct NtfReport {
  unsigned K = 0;
  bool bipartite = false;
  std::vector<bool> power_matches;    // Ass(R/I^k) == Ass(R/I)
  std::vector<bool> closure_matches;  // Ass(R/closure(I^k)) == Ass(R/I)
  std::optional<unsigned> first_failure;

  bool torsion_free_within_bound() const { return !first_failure.has_value(); }
  // A bipartite graph must pass at every power.
  bool consistent() const { return !bipartite || torsion_free_within_bound(); }
};

inline NtfReport ntf_check(const Graph& g, unsigned K, const ClosureOptions& copt = {}) {
  NtfReport r;
  r.K = K;
  r.bipartite = is_bipartite(g);
  const MonomialIdeal I = edge_ideal(g);
  const PrimeSet base = associated_primes(I);
  MonomialIdeal power = MonomialIdeal::unit(I.variables());
  for (unsigned k = 1; k <= K; ++k) {
    power = ideal_product(power, I);
    const bool p = associated_primes(power) == base;
    const bool c = associated_primes(integral_closure_power(I, k, copt)) == base;
    r.power_matches.push_back(p);
    r.closure_matches.push_back(c);
    if ((!p || !c) && !r.first_failure) r.first_failure = k;
  }
  return r;
}

}  // namespace eil
