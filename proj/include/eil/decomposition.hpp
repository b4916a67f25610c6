#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "eil/errors.hpp"
#include "eil/graph.hpp"
#include "eil/monomial.hpp"

namespace eil {

// Prime generated by a non-empty set of variables.
class MonomialPrime {
 public:
  explicit MonomialPrime(std::vector<std::size_t> support) : support_(std::move(support)) {
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
    if (support_.empty()) throw UsageError("a monomial prime needs at least one variable");
  }

  static MonomialPrime maximal(std::size_t n) {
    std::vector<std::size_t> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = i;
    return MonomialPrime(std::move(s));
  }

  const std::vector<std::size_t>& support() const noexcept { return support_; }
  std::size_t height() const noexcept { return support_.size(); }

  bool contains_variable(std::size_t i) const {
    return std::binary_search(support_.begin(), support_.end(), i);
  }
  bool is_subset_of(const MonomialPrime& o) const {
    return std::includes(o.support_.begin(), o.support_.end(), support_.begin(), support_.end());
  }

  MonomialIdeal to_ideal(const VariableSet& vars) const {
    std::vector<Monomial> gens;
    for (auto i : support_) gens.push_back(Monomial::unit(vars.size(), i));
    return MonomialIdeal(vars, std::move(gens));
  }

  std::vector<std::string> names(const VariableSet& vars) const {
    std::vector<std::string> out;
    for (auto i : support_) out.push_back(vars.name(i));
    return out;
  }

  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
  // Ordered by height, then lexicographically on variable indices.
  friend std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b) {
    if (auto c = a.support_.size() <=> b.support_.size(); c != 0) return c;
    return a.support_ <=> b.support_;
  }

 private:
  std::vector<std::size_t> support_;
};

using PrimeSet = std::vector<MonomialPrime>;  // sorted, unique

inline PrimeSet normalize(PrimeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool is_subset(const PrimeSet& a, const PrimeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// (x_{i1}^{c1}, ..., x_{is}^{cs}), stored as an exponent vector whose zero
// entries mean "variable absent".
class IrreducibleComponent {
 public:
  explicit IrreducibleComponent(Monomial powers) : powers_(std::move(powers)) {
    if (powers_.is_one()) throw UsageError("irreducible component needs non-empty support");
  }

  const Monomial& powers() const noexcept { return powers_; }
  MonomialPrime radical() const { return MonomialPrime(powers_.support()); }

  MonomialIdeal to_ideal(const VariableSet& vars) const {
    std::vector<Monomial> gens;
    for (auto i : powers_.support()) {
      Monomial m = Monomial::one(powers_.size());
      m[i] = powers_[i];
      gens.push_back(std::move(m));
    }
    return MonomialIdeal(vars, std::move(gens));
  }

  // This component contains `o` as an ideal.
  bool contains(const IrreducibleComponent& o) const {
    for (std::size_t i = 0; i < powers_.size(); ++i)
      if (o.powers_[i] != 0 && (powers_[i] == 0 || powers_[i] > o.powers_[i])) return false;
    return true;
  }

  bool contains(const Monomial& m) const {
    for (std::size_t i = 0; i < powers_.size(); ++i)
      if (powers_[i] != 0 && m[i] >= powers_[i]) return true;
    return false;
  }

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  friend auto operator<=>(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.powers_.vec() <=> b.powers_.vec();
  }

 private:
  Monomial powers_;
};

using Decomposition = std::vector<IrreducibleComponent>;

namespace detail {

inline void require_proper_nonzero(const MonomialIdeal& I, const char* who) {
  if (I.is_zero()) throw UsageError(std::string(who) + ": the zero ideal has no decomposition");
  if (I.is_unit()) throw UsageError(std::string(who) + ": the unit ideal has no decomposition");
}

// Drop duplicates and every component that contains another one, then sort.
inline Decomposition irredundant(Decomposition comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  Decomposition out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j)
      redundant = i != j && comps[i].contains(comps[j]);
    if (!redundant) out.push_back(comps[i]);
  }
  return out;
}

inline bool is_pure_power(const Monomial& m) {
  std::size_t nz = 0;
  for (auto e : m.exponents()) nz += e != 0;
  return nz == 1;
}

struct GeneratorsHash {
  std::size_t operator()(const std::vector<Monomial>& gens) const noexcept {
    std::size_t h = gens.size();
    for (const auto& g : gens) h = h * 1000003U ^ MonomialHash{}(g);
    return h;
  }
};

// Recursive splitting with memoization on the canonical generator list.
class Splitter {
 public:
  explicit Splitter(VariableSet vars) : vars_(std::move(vars)) {}

  Decomposition run(const std::vector<Monomial>& gens) {
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;

    auto pivot = std::find_if(gens.begin(), gens.end(), [](const Monomial& g) { return !is_pure_power(g); });
    Decomposition result;
    if (pivot == gens.end()) {
      Monomial powers = Monomial::one(vars_.size());
      for (const auto& g : gens) powers[g.support().front()] = static_cast<Exponent>(g.degree());
      result.emplace_back(std::move(powers));
    } else {
      const Monomial g = *pivot;
      const std::size_t i = g.support().front();
      std::vector<Monomial> rest;
      rest.reserve(gens.size());
      for (const auto& h : gens)
        if (!(h == g)) rest.push_back(h);

      std::vector<Monomial> left = rest;
      Monomial xi = Monomial::one(vars_.size());
      xi[i] = g[i];
      left.push_back(xi);
      std::vector<Monomial> right = std::move(rest);
      Monomial other = g;
      other[i] = 0;
      right.push_back(other);

      Decomposition a = run(detail::minimal_elements(std::move(left)));
      Decomposition b = run(detail::minimal_elements(std::move(right)));
      a.insert(a.end(), b.begin(), b.end());
      result = irredundant(std::move(a));
    }
    memo_.emplace(gens, result);
    return result;
  }

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  VariableSet vars_;
  std::unordered_map<std::vector<Monomial>, Decomposition, GeneratorsHash> memo_;
};

}  // namespace detail

// Irredundant irreducible decomposition by recursive splitting: a generator
// x^a with at least two variables in its support splits the ideal into
// (I' + x_i^{a_i}) and (I' + x^{a - a_i e_i}), where I' drops that generator.
// The pivot is the first such generator in canonical order, split on its
// lowest-index variable.
inline Decomposition splitting_decomposition(const MonomialIdeal& I) {
  detail::require_proper_nonzero(I, "splitting_decomposition");
  detail::Splitter s(I.variables());
  return s.run(I.generators());
}

// Same decomposition computed incrementally, one generator at a time, on the
// artinian ideal I + (x_i^{u_i+1}); the auxiliary powers are dropped at the
// end. Much faster than splitting on large powers, and the irredundant
// decomposition is unique, so the two must agree exactly.
inline Decomposition incremental_decomposition(const MonomialIdeal& I) {
  detail::require_proper_nonzero(I, "incremental_decomposition");
  const std::size_t n = I.nvars();
  const Monomial cap = [&] {
    Monomial u = I.lcm_of_generators();
    for (std::size_t i = 0; i < n; ++i) ++u[i];
    return u;
  }();

  // Components are full-support exponent vectors b, i.e. (x_1^{b_1},...,x_n^{b_n}).
  std::vector<std::vector<Exponent>> comps{cap.vec()};
  std::vector<std::vector<Exponent>> kept;
  std::vector<std::vector<Exponent>> fresh;
  auto dominated = [](const std::vector<Exponent>& x, const std::vector<Exponent>& y) {
    // Q_x contains Q_y
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] > y[i]) return false;
    return true;
  };

  for (const auto& g : I.generators()) {
    kept.clear();
    fresh.clear();
    for (auto& b : comps) {
      bool inside = false;
      for (std::size_t i = 0; i < n && !inside; ++i) inside = g[i] >= b[i];
      if (inside) {
        kept.push_back(std::move(b));
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (g[i] == 0) continue;
        std::vector<Exponent> c = b;
        c[i] = g[i];
        fresh.push_back(std::move(c));
      }
    }
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    // A new component can only be redundant against a kept one or another new one.
    comps = kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool redundant = false;
      for (const auto& k : kept)
        if (dominated(fresh[a], k)) {
          redundant = true;
          break;
        }
      for (std::size_t c = 0; c < fresh.size() && !redundant; ++c)
        redundant = c != a && dominated(fresh[a], fresh[c]);
      if (!redundant) comps.push_back(fresh[a]);
    }
  }

  Decomposition out;
  out.reserve(comps.size());
  for (auto& b : comps) {
    for (std::size_t i = 0; i < n; ++i)
      if (b[i] == cap[i]) b[i] = 0;
    out.emplace_back(Monomial(std::move(b)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Decomposition irreducible_decomposition(const MonomialIdeal& I) { return incremental_decomposition(I); }

inline MonomialIdeal intersect_components(const Decomposition& comps, const VariableSet& vars) {
  if (comps.empty()) return MonomialIdeal::unit(vars);
  MonomialIdeal r = comps.front().to_ideal(vars);
  for (std::size_t i = 1; i < comps.size(); ++i) r = intersection(r, comps[i].to_ideal(vars));
  return r;
}

inline PrimeSet radicals(const Decomposition& comps) {
  PrimeSet out;
  for (const auto& c : comps) out.push_back(c.radical());
  return normalize(std::move(out));
}

// Ass(R/I): radicals of the irredundant irreducible components.
inline PrimeSet associated_primes(const MonomialIdeal& I) { return radicals(irreducible_decomposition(I)); }

inline PrimeSet minimal_elements(const PrimeSet& s) {
  PrimeSet out;
  for (const auto& p : s) {
    bool minimal = true;
    for (const auto& q : s)
      if (!(q == p) && q.is_subset_of(p)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(p);
  }
  return out;
}

inline PrimeSet minimal_primes(const MonomialIdeal& I) { return minimal_elements(associated_primes(I)); }

inline std::vector<std::vector<Vertex>> minimal_vertex_covers(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& p : minimal_primes(edge_ideal(g))) out.push_back(p.support());
  return out;
}

// ---------------------------------------------------------------------------
// Witness oracle

struct AssWitness {
  MonomialPrime prime;
  unsigned power = 1;
  Monomial witness;  // c with (I : c) equal to the prime
};

inline constexpr std::uint64_t kDefaultWitnessCap = 10'000'000;

// Scans every monomial c dividing the componentwise max of the generators;
// records c when c is not in I and (I : c) is generated by variables.
// `power` is only carried into the returned witnesses.
inline std::vector<AssWitness> associated_primes_witness_oracle(const MonomialIdeal& I, unsigned power = 1,
                                                                std::uint64_t cap = kDefaultWitnessCap) {
  detail::require_proper_nonzero(I, "associated_primes_witness_oracle");
  const std::size_t n = I.nvars();
  const Monomial top = I.lcm_of_generators();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    space *= top[i] + 1ULL;
    if (space > cap)
      throw BudgetExceeded("witness oracle: search space exceeds cap of " + std::to_string(cap));
  }

  std::map<MonomialPrime, Monomial> found;
  Monomial c = Monomial::one(n);
  for (;;) {
    if (!I.contains(c)) {
      const MonomialIdeal q = colon(I, c);
      bool linear = true;
      std::vector<std::size_t> vars;
      for (const auto& g : q.generators()) {
        if (g.degree() != 1) {
          linear = false;
          break;
        }
        vars.push_back(g.support().front());
      }
      if (linear && !vars.empty()) {
        MonomialPrime p(std::move(vars));
        found.emplace(p, c);  // keeps the first witness in scan order
      }
    }
    std::size_t i = 0;
    while (i < n && c[i] == top[i]) c[i++] = 0;
    if (i == n) break;
    ++c[i];
  }

  std::vector<AssWitness> out;
  for (auto& [p, w] : found) out.push_back({p, power, w});
  return out;
}

inline PrimeSet primes_of(const std::vector<AssWitness>& ws) {
  PrimeSet out;
  for (const auto& w : ws) out.push_back(w.prime);
  return normalize(std::move(out));
}

// ---------------------------------------------------------------------------
// Disjoint unions

struct PowerPart {
  MonomialIdeal ideal;
  unsigned power = 1;
};

// Ass(S/(I_1 + ... + I_s)^k) for square-free I_j on pairwise disjoint
// variables: all unions p_1 + ... + p_s with p_j in Ass(S/I_j^{k_j}) and
// (k_1 - 1) + ... + (k_s - 1) = k - 1.
inline PrimeSet disjoint_union_ass(const std::vector<MonomialIdeal>& parts, unsigned k) {
  if (parts.empty()) throw UsageError("disjoint_union_ass: no parts");
  if (k == 0) throw UsageError("disjoint_union_ass: power must be positive");
  std::vector<std::uint64_t> owner(parts.front().nvars(), 0);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const auto& p = parts[j];
    if (!(p.variables() == parts.front().variables()))
      throw UsageError("disjoint_union_ass: parts must share one variable set");
    detail::require_proper_nonzero(p, "disjoint_union_ass");
    if (!p.is_squarefree()) throw UsageError("disjoint_union_ass: parts must be square-free");
    const Monomial support = p.lcm_of_generators();
    for (std::size_t i = 0; i < support.size(); ++i)
      if (support[i] != 0) {
        if (owner[i] != 0) throw UsageError("disjoint_union_ass: parts share variable " + p.variables().name(i));
        owner[i] = j + 1;
      }
  }

  // ass_by_power[j][t] = Ass(I_j^{t+1}), computed lazily up to k.
  std::vector<std::vector<PrimeSet>> cache(parts.size());
  auto ass_of = [&](std::size_t j, unsigned kj) -> const PrimeSet& {
    auto& c = cache[j];
    while (c.size() < kj) c.push_back(associated_primes(ideal_power(parts[j], static_cast<unsigned>(c.size() + 1))));
    return c[kj - 1];
  };

  std::set<MonomialPrime> out;
  std::vector<std::size_t> acc;
  // distribute the k-1 surplus units over the parts
  auto rec = [&](auto&& self, std::size_t j, unsigned left, std::vector<std::size_t>& sup) -> void {
    if (j + 1 == parts.size()) {
      for (const auto& p : ass_of(j, left + 1)) {
        std::vector<std::size_t> s = sup;
        s.insert(s.end(), p.support().begin(), p.support().end());
        out.insert(MonomialPrime(std::move(s)));
      }
      return;
    }
    for (unsigned extra = 0; extra <= left; ++extra)
      for (const auto& p : ass_of(j, extra + 1)) {
        std::vector<std::size_t> s = sup;
        s.insert(s.end(), p.support().begin(), p.support().end());
        self(self, j + 1, left - extra, s);
      }
  };
  rec(rec, 0, k - 1, acc);
  return PrimeSet(out.begin(), out.end());
}

}  // namespace eil
