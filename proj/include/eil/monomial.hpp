#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "eil/errors.hpp"

namespace eil {

using Exponent = std::uint32_t;

// Ordered, duplicate-free list of variable names. Copies share storage, so
// comparing two sets built from the same origin is a pointer check.
class VariableSet {
 public:
  VariableSet() : VariableSet(std::vector<std::string>{"x1"}) {}

  explicit VariableSet(std::vector<std::string> names) {
    if (names.empty()) throw UsageError("variable set must be non-empty");
    std::unordered_set<std::string> seen;
    for (const auto& s : names) {
      if (s.empty()) throw UsageError("empty variable name");
      if (!seen.insert(s).second)
        throw UsageError("duplicate variable name '" + s + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  }

  // x1..xn (or prefix1..prefixn).
  static VariableSet indexed(std::size_t n, const std::string& prefix = "x") {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return VariableSet(std::move(names));
  }

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& name(std::size_t i) const { return names_->at(i); }
  const std::vector<std::string>& names() const noexcept { return *names_; }

  std::ptrdiff_t index_of(const std::string& name) const {
    const auto& v = *names_;
    auto it = std::find(v.begin(), v.end(), name);
    return it == v.end() ? -1 : it - v.begin();
  }

  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Exponent vector x^a. Carries no variable names; operations between
// monomials of different length throw UsageError.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial one(std::size_t n) { return Monomial(std::vector<Exponent>(n, 0)); }
  static Monomial ones(std::size_t n) { return Monomial(std::vector<Exponent>(n, 1)); }
  static Monomial unit(std::size_t n, std::size_t i) {
    Monomial m = one(n);
    m.exps_.at(i) = 1;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  const std::vector<Exponent>& vec() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }

  bool is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0) s.push_back(i);
    return s;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Canonical order: total degree, then lexicographic on the exponent vector.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Exponent e : m.exponents()) h = (h ^ e) * 0x100000001b3ULL;
    return h;
  }
};

namespace detail {

inline void require_same_length(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw UsageError("monomials live on different variable sets (" +
                     std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                     " variables)");
}

inline Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b)
    throw std::overflow_error("exponent overflow");
  return a + b;
}

}  // namespace detail

inline bool divides(const Monomial& m1, const Monomial& m2) {
  detail::require_same_length(m1, m2);
  for (std::size_t i = 0; i < m1.size(); ++i)
    if (m1[i] > m2[i]) return false;
  return true;
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  detail::require_same_length(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = detail::checked_add(a[i], b[i]);
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  detail::require_same_length(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  detail::require_same_length(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

// h / gcd(h, g): the generator of the principal colon ((h) : g).
inline Monomial colon_part(const Monomial& h, const Monomial& g) {
  detail::require_same_length(h, g);
  Monomial r = h;
  for (std::size_t i = 0; i < h.size(); ++i) r[i] = h[i] > g[i] ? h[i] - g[i] : 0;
  return r;
}

// a / b; requires b | a.
inline Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw UsageError("quotient: divisor does not divide");
  return colon_part(a, b);
}

inline Monomial pow(const Monomial& m, Exponent k) {
  Monomial r = m;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::uint64_t e = std::uint64_t{m[i]} * k;
    if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
    r[i] = static_cast<Exponent>(e);
  }
  return r;
}

namespace detail {

// Support bitmask (folded mod 64) used as a cheap necessary condition for
// divisibility before the exact test.
struct Packed {
  Monomial m;
  std::uint64_t mask;
  std::uint64_t deg;
};

inline std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) mask |= std::uint64_t{1} << (i % 64);
  return mask;
}

inline bool raw_divides(const Monomial& a, const Monomial& b) {
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] > eb[i]) return false;
  return true;
}

// Sort canonically, drop duplicates and every element divisible by another.
inline std::vector<Monomial> minimal_elements(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Packed> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    const std::uint64_t mask = support_mask(g);
    const std::uint64_t deg = g.degree();
    bool redundant = false;
    for (const auto& k : kept) {
      if (k.deg >= deg) break;  // kept is degree-sorted; equal degree cannot divide
      if ((k.mask & ~mask) != 0) continue;
      if (raw_divides(k.m, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back({std::move(g), mask, deg});
  }
  std::vector<Monomial> out;
  out.reserve(kept.size());
  for (auto& k : kept) out.push_back(std::move(k.m));
  return out;
}

}  // namespace detail

// Monomial ideal stored by its minimal generators in canonical order.
// No generators: the zero ideal. The single generator 1: the unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(VariableSet vars) : vars_(std::move(vars)) {}

  MonomialIdeal(VariableSet vars, std::vector<Monomial> gens) : vars_(std::move(vars)) {
    for (const auto& g : gens)
      if (g.size() != vars_.size())
        throw UsageError("generator has " + std::to_string(g.size()) +
                         " exponents, variable set has " + std::to_string(vars_.size()));
    gens_ = detail::minimal_elements(std::move(gens));
    assert(is_minimal());
  }

  static MonomialIdeal zero(VariableSet vars) { return MonomialIdeal(std::move(vars)); }
  static MonomialIdeal unit(VariableSet vars) {
    const auto n = vars.size();
    return MonomialIdeal(std::move(vars), {Monomial::one(n)});
  }

  const VariableSet& variables() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const {
    if (m.size() != vars_.size()) throw UsageError("monomial does not match the ideal's variables");
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return detail::raw_divides(g, m); });
  }

  // All generators share one total degree (vacuously false for the zero ideal).
  bool is_equigenerated() const noexcept {
    if (gens_.empty()) return false;
    const auto d = gens_.front().degree();
    return std::all_of(gens_.begin(), gens_.end(), [d](const Monomial& g) { return g.degree() == d; });
  }

  bool is_squarefree() const noexcept {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) {
      return std::all_of(g.exponents().begin(), g.exponents().end(), [](Exponent e) { return e <= 1; });
    });
  }

  // Componentwise max over the generators.
  Monomial lcm_of_generators() const {
    Monomial r = Monomial::one(nvars());
    for (const auto& g : gens_)
      for (std::size_t i = 0; i < g.size(); ++i) r[i] = std::max(r[i], g[i]);
    return r;
  }

  bool is_minimal() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = 0; j < gens_.size(); ++j)
        if (i != j && detail::raw_divides(gens_[i], gens_[j])) return false;
    return true;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.vars_ == b.vars_ && a.gens_ == b.gens_;
  }

 private:
  VariableSet vars_;
  std::vector<Monomial> gens_;
};

namespace detail {

inline void require_same_vars(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.variables() == b.variables()))
    throw UsageError("ideals live on different variable sets");
}

}  // namespace detail

inline MonomialIdeal minimalize(const VariableSet& vars, std::vector<Monomial> gens) {
  return MonomialIdeal(vars, std::move(gens));
}

inline bool contains_monomial(const MonomialIdeal& I, const Monomial& m) { return I.contains(m); }

inline MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_vars(I, J);
  std::vector<Monomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return MonomialIdeal(I.variables(), std::move(gens));
}

inline MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_vars(I, J);
  std::vector<Monomial> gens;
  gens.reserve(I.size() * J.size());
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(a * b);
  return MonomialIdeal(I.variables(), std::move(gens));
}

// I^k by repeated multiplication; I^0 is the unit ideal.
inline MonomialIdeal ideal_power(const MonomialIdeal& I, unsigned k) {
  MonomialIdeal r = MonomialIdeal::unit(I.variables());
  for (unsigned i = 0; i < k; ++i) r = ideal_product(r, I);
  return r;
}

// Generated by pairwise lcms of generators.
inline MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_vars(I, J);
  std::vector<Monomial> gens;
  gens.reserve(I.size() * J.size());
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(lcm(a, b));
  return MonomialIdeal(I.variables(), std::move(gens));
}

// (I : g) for a single monomial g.
inline MonomialIdeal colon(const MonomialIdeal& I, const Monomial& g) {
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& h : I.generators()) gens.push_back(colon_part(h, g));
  return MonomialIdeal(I.variables(), std::move(gens));
}

// (I : J) = intersection over generators g of J of (I : g).
inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_vars(I, J);
  if (J.is_zero()) throw UsageError("colon by the zero ideal");
  const auto& gens = J.generators();
  MonomialIdeal r = colon(I, gens.front());
  for (std::size_t i = 1; i < gens.size() && !r.is_zero(); ++i) {
    r = intersection(r, colon(I, gens[i]));
  }
  return r;
}

inline bool ideal_subset(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_vars(I, J);
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const Monomial& g) { return J.contains(g); });
}

inline bool ideal_equal(const MonomialIdeal& I, const MonomialIdeal& J) {
  return ideal_subset(I, J) && ideal_subset(J, I);
}

}  // namespace eil
