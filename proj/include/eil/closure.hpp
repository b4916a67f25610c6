#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "eil/decomposition.hpp"
#include "eil/errors.hpp"
#include "eil/graph.hpp"
#include "eil/lp.hpp"
#include "eil/monomial.hpp"

namespace eil {

// NP(I^k) = k * NP(I), described by the exponent vectors of the generators
// of I. An integer point a lies in it iff some lambda >= 0 with
// sum(lambda) = k has sum(lambda_j v_j) <= a. Since the v_j are non-negative
// that system is feasible exactly when  max sum(lambda) s.t.
// sum(lambda_j v_j) <= a  reaches k, which is an LP whose origin is feasible.
class NewtonPolyhedron {
 public:
  NewtonPolyhedron(const MonomialIdeal& base, unsigned scale) : n_(base.nvars()), scale_(scale) {
    if (base.is_zero() || base.is_unit())
      throw UsageError("Newton polyhedron needs a proper nonzero ideal");
    if (scale == 0) throw UsageError("Newton polyhedron scale must be positive");
    const auto& gens = base.generators();
    matrix_.assign(n_, std::vector<std::int64_t>(gens.size(), 0));
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t i = 0; i < n_; ++i) matrix_[i][j] = gens[j][i];
  }

  std::size_t dimension() const noexcept { return n_; }
  unsigned scale() const noexcept { return scale_; }
  std::size_t num_vertices() const noexcept { return matrix_.empty() ? 0 : matrix_.front().size(); }

  // Largest t with a in NP(I^t) (t rational).
  lp::Fraction max_scale(const Monomial& a) const { return solve(a, std::nullopt).value; }

  bool contains(const Monomial& a) const {
    return !(solve(a, lp::Fraction{scale_, 1}).value < lp::Fraction{scale_, 1});
  }

 private:
  lp::Solution solve(const Monomial& a, std::optional<lp::Fraction> target) const {
    if (a.size() != n_) throw UsageError("np_member: dimension mismatch");
    std::vector<std::int64_t> rhs(a.vec().begin(), a.vec().end());
    return lp::maximize(matrix_, rhs, std::vector<std::int64_t>(num_vertices(), 1), target);
  }

  std::size_t n_;
  unsigned scale_;
  IntMatrix matrix_;
};

inline bool np_member(const Monomial& a, const NewtonPolyhedron& np) { return np.contains(a); }

inline constexpr std::uint64_t kDefaultClosureCap = 10'000'000;

struct ClosureOptions {
  std::uint64_t cap = kDefaultClosureCap;
  unsigned threads = 1;
};

namespace detail {

// Mixed-radix indexing of the box 0 <= a <= u.
struct Box {
  std::vector<Exponent> upper;
  std::vector<std::uint64_t> stride;
  std::uint64_t volume = 1;

  explicit Box(const Monomial& u) : upper(u.vec()), stride(u.size()) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      stride[i] = volume;
      volume *= u[i] + 1ULL;
    }
  }

  std::uint64_t index(const std::vector<Exponent>& a) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < a.size(); ++i) idx += a[i] * stride[i];
    return idx;
  }
};

// Number of points of the box with total degree in [lo, hi].
inline std::uint64_t band_count(const Monomial& u, std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> ways{1};
  for (auto ui : u.exponents()) {
    std::vector<std::uint64_t> next(ways.size() + ui, 0);
    for (std::size_t d = 0; d < ways.size(); ++d)
      for (Exponent e = 0; e <= ui; ++e) next[d + e] += ways[d];
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t d = lo; d <= hi && d < ways.size(); ++d) total += ways[d];
  return total;
}

// Every point of the box with total degree exactly `deg`, in lexicographic order.
inline void points_of_degree(const Box& box, std::uint64_t deg, std::vector<std::vector<Exponent>>& out) {
  const std::size_t n = box.upper.size();
  std::vector<std::uint64_t> suffix_cap(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix_cap[i] = suffix_cap[i + 1] + box.upper[i];
  std::vector<Exponent> a(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
    if (i == n) {
      if (left == 0) out.push_back(a);
      return;
    }
    const std::uint64_t rest = suffix_cap[i + 1];
    const std::uint64_t lo = left > rest ? left - rest : 0;
    const std::uint64_t hi = std::min<std::uint64_t>(left, box.upper[i]);
    for (std::uint64_t e = lo; e <= hi; ++e) {
      a[i] = static_cast<Exponent>(e);
      self(self, i + 1, left - e);
    }
    a[i] = 0;
  };
  rec(rec, 0, deg);
}

}  // namespace detail

// Minimal generators of the integral closure of I^k for an ideal generated
// in a single degree d.
//
// Search space: points a with a_i <= u_i (u = componentwise max over the
// generators of I^k) and dk <= |a| <= dk + n - 1. Both bounds hold for every
// minimal generator: if a is minimal and lambda is any feasible point, then
// ceil(sum lambda_j v_j) is a member below a, hence equal to a. So
// a_i <= ceil(k * max_j v_ji) = u_i and |a| < dk + n.
//
// Points are visited degree by degree; a point with some member a - e_i is a
// member without an LP call. Otherwise the minimal-prime cover bound
// (sum_{i in P} a_i bounds the LP value for every minimal prime P) rejects
// cheaply before the exact LP runs.
inline MonomialIdeal integral_closure_power(const MonomialIdeal& I, unsigned k, const ClosureOptions& opt = {}) {
  if (k == 0) throw UsageError("integral_closure_power: k must be positive");
  if (I.is_zero() || I.is_unit()) throw UsageError("integral_closure_power: ideal must be proper and nonzero");
  if (!I.is_equigenerated())
    throw UsageError("integral_closure_power: generators must share one degree");
  const std::size_t n = I.nvars();
  const std::uint64_t d = I.generators().front().degree();
  const Monomial u = pow(I.lcm_of_generators(), k);
  const std::uint64_t lo = d * k;
  const std::uint64_t hi = d * k + n - 1;

  const std::uint64_t space = detail::band_count(u, lo, hi);
  if (space > opt.cap)
    throw BudgetExceeded("integral_closure_power: " + std::to_string(space) +
                         " lattice points to examine exceeds the cap of " + std::to_string(opt.cap));

  const NewtonPolyhedron np(I, k);
  std::vector<std::vector<std::size_t>> covers;
  for (const auto& p : minimal_primes(I)) covers.push_back(p.support());

  const detail::Box box(u);
  std::vector<std::uint8_t> member(box.volume, 0);
  std::vector<Monomial> minimal;

  auto examine = [&](std::vector<Exponent>& a) -> int {  // 0 no, 1 dominated member, 2 minimal
    const std::uint64_t idx = box.index(a);
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] > 0 && member[idx - box.stride[i]]) return 1;
    for (const auto& c : covers) {
      std::uint64_t w = 0;
      for (auto i : c) w += a[i];
      if (w < k) return 0;
    }
    return np.contains(Monomial(a)) ? 2 : 0;
  };

  const unsigned threads = std::max(1U, opt.threads);
  std::vector<std::vector<Exponent>> pts;
  for (std::uint64_t deg = lo; deg <= hi; ++deg) {
    pts.clear();
    detail::points_of_degree(box, deg, pts);
    std::vector<std::uint8_t> verdict(pts.size(), 0);
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t p = begin; p < end; ++p) verdict[p] = static_cast<std::uint8_t>(examine(pts[p]));
    };
    if (threads == 1 || pts.size() < 4096) {
      work(0, pts.size());
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (pts.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t b = t * chunk;
        const std::size_t e = std::min(pts.size(), b + chunk);
        if (b < e) pool.emplace_back(work, b, e);
      }
    }
    // the stratum only reads lower strata, so marks are applied afterwards
    for (std::size_t p = 0; p < pts.size(); ++p) {
      if (verdict[p] == 0) continue;
      member[box.index(pts[p])] = 1;
      if (verdict[p] == 2) minimal.emplace_back(pts[p]);
    }
  }
  return MonomialIdeal(I.variables(), std::move(minimal));
}

enum class OracleVerdict { Member, Unknown };

// Certifies x^a in closure(I(G)^k) by finding m <= m_cap with
// nu(G^{m a}) >= k m, i.e. x^{ma} in I^{km}. One-sided: Unknown otherwise.
struct OracleResult {
  OracleVerdict verdict = OracleVerdict::Unknown;
  unsigned multiplier = 0;  // the m that certified membership
};

inline OracleResult closure_member_matching_oracle(const Graph& g, const Monomial& a, unsigned k,
                                                   unsigned m_cap = 0) {
  if (m_cap == 0) m_cap = static_cast<unsigned>(g.num_vertices());
  if (k == 0) return {OracleVerdict::Member, 1};
  for (unsigned m = 1; m <= m_cap; ++m) {
    const Monomial ma = pow(a, m);
    if (ma.degree() < 2ULL * k * m) continue;  // nu(G^b) <= |b| / 2
    if (power_index(g, ma) >= static_cast<std::size_t>(k) * m) return {OracleVerdict::Member, m};
  }
  return {};
}

struct NormalityReport {
  std::vector<bool> power_is_closed;  // index k-1: I^k equals its closure
  std::optional<unsigned> first_failure;

  bool normal_up_to_bound() const { return !first_failure.has_value(); }
};

inline NormalityReport is_normal_up_to(const MonomialIdeal& I, unsigned K, const ClosureOptions& opt = {}) {
  NormalityReport r;
  for (unsigned k = 1; k <= K; ++k) {
    const bool closed = integral_closure_power(I, k, opt) == ideal_power(I, k);
    r.power_is_closed.push_back(closed);
    if (!closed && !r.first_failure) r.first_failure = k;
  }
  return r;
}

// Generators of the closure that are not already in I^k.
inline std::vector<Monomial> added_generators(const MonomialIdeal& closure, const MonomialIdeal& power) {
  std::vector<Monomial> out;
  for (const auto& g : closure.generators())
    if (!power.contains(g)) out.push_back(g);
  return out;
}

}  // namespace eil
