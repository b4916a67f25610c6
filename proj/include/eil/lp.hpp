#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eil/errors.hpp"
#include "eil/linalg.hpp"

namespace eil::lp {

__extension__ using wide = __int128;  // intermediate products of int64 entries

// Exact rational p/q with q > 0 (not necessarily reduced).
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return static_cast<wide>(a.num) * b.den == static_cast<wide>(b.num) * a.den;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return static_cast<wide>(a.num) * b.den < static_cast<wide>(b.num) * a.den;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
};

struct Solution {
  Fraction value;             // optimum, or the first value >= target when stopped early
  std::vector<Fraction> x;    // primal point achieving `value`
  bool stopped_early = false;
};

namespace detail {

inline std::int64_t narrow(wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("simplex tableau entry overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

// maximize c.x  subject to  A x <= b, x >= 0, for integer data with b >= 0
// (so the origin is feasible and no phase one is needed) and c >= 0.
//
// Tableau entries are kept as integers scaled by the current basis
// determinant (integer pivoting), so no fractions appear until the answer
// is read off. Bland's rule guarantees termination.
//
// With `target` set, returns as soon as the running objective reaches it.
// Throws UsageError if the problem is unbounded.
inline Solution maximize(const IntMatrix& A, const std::vector<std::int64_t>& b,
                         const std::vector<std::int64_t>& c,
                         std::optional<Fraction> target = std::nullopt) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw UsageError("lp: rhs length mismatch");
  for (auto v : b)
    if (v < 0) throw UsageError("lp: negative right-hand side");

  const std::size_t cols = n + m + 1;  // structural, slack, rhs
  const std::size_t rhs = n + m;
  std::vector<std::vector<std::int64_t>> t(m + 1, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw UsageError("lp: ragged constraint matrix");
    for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
    t[i][n + i] = 1;
    t[i][rhs] = b[i];
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  std::int64_t det = 1;

  auto reached = [&]() {
    return target && !(Fraction{t[m][rhs], det} < *target);
  };

  bool early = false;
  for (;;) {
    if (reached()) {
      early = true;
      break;
    }
    std::size_t enter = cols;
    for (std::size_t j = 0; j < rhs; ++j)
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      const wide lhs = static_cast<wide>(t[i][rhs]) * t[leave][enter];
      const wide rhs_v = static_cast<wide>(t[leave][rhs]) * t[i][enter];
      if (lhs < rhs_v || (lhs == rhs_v && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m) throw UsageError("lp: objective is unbounded");

    const std::int64_t p = t[leave][enter];
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const std::int64_t f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) {
        const wide v = static_cast<wide>(t[i][j]) * p - static_cast<wide>(f) * t[leave][j];
        t[i][j] = detail::narrow(v / det);
      }
    }
    det = p;
    basis[leave] = enter;
  }

  Solution sol;
  sol.stopped_early = early;
  sol.value = {t[m][rhs], det};
  sol.x.assign(n, Fraction{0, 1});
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) sol.x[basis[i]] = {t[i][rhs], det};
  return sol;
}

}  // namespace eil::lp
