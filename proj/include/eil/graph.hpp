#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eil/errors.hpp"
#include "eil/linalg.hpp"
#include "eil/monomial.hpp"

namespace eil {

using Vertex = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;  // u < v

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw UsageError("loops are not allowed");
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Finite simple graph with labelled vertices 0..n-1 and a canonically sorted
// edge list.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<std::string> labels, const std::vector<std::pair<Vertex, Vertex>>& edges)
      : labels_(std::move(labels)), adj_(labels_.size()) {
    std::set<Edge> seen;
    for (auto [a, b] : edges) {
      if (a >= labels_.size() || b >= labels_.size()) throw UsageError("edge endpoint out of range");
      const Edge e = make_edge(a, b);
      if (!seen.insert(e).second)
        throw UsageError("repeated edge {" + labels_[e.u] + "," + labels_[e.v] + "}");
    }
    edges_.assign(seen.begin(), seen.end());
    for (const auto& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  // Vertices x1..xn; edges given 0-based.
  static Graph indexed(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                       const std::string& prefix = "x") {
    return Graph(VariableSet::indexed(n, prefix).names(), edges);
  }

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool has_edge(Vertex a, Vertex b) const {
    if (a == b || a >= num_vertices() || b >= num_vertices()) return false;
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const {
    if (a == b) return std::nullopt;
    const Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  std::vector<Vertex> isolated_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < num_vertices(); ++v)
      if (adj_[v].empty()) out.push_back(v);
    return out;
  }

  // Subgraph induced on `keep` (sorted), relabelled 0..|keep|-1 in order.
  Graph induced(const std::vector<Vertex>& keep) const {
    std::vector<std::ptrdiff_t> pos(num_vertices(), -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      pos.at(keep[i]) = static_cast<std::ptrdiff_t>(i);
      labels.push_back(labels_[keep[i]]);
    }
    std::vector<std::pair<Vertex, Vertex>> es;
    for (const auto& e : edges_)
      if (pos[e.u] >= 0 && pos[e.v] >= 0)
        es.emplace_back(static_cast<Vertex>(pos[e.u]), static_cast<Vertex>(pos[e.v]));
    return Graph(std::move(labels), es);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Disjoint union; labels of the second graph get `suffix` appended when they
// collide with labels of the first.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<std::string> labels = g.labels();
  std::set<std::string> used(labels.begin(), labels.end());
  for (const auto& l : h.labels()) {
    std::string name = l;
    while (used.count(name)) name += "'";
    used.insert(name);
    labels.push_back(name);
  }
  std::vector<std::pair<Vertex, Vertex>> es;
  for (const auto& e : g.edges()) es.emplace_back(e.u, e.v);
  const auto off = g.num_vertices();
  for (const auto& e : h.edges()) es.emplace_back(e.u + off, e.v + off);
  return Graph(std::move(labels), es);
}

// ---------------------------------------------------------------------------
// Matchings

struct MatchingCertificate {
  std::vector<Edge> pairs;      // sorted
  std::vector<Vertex> covered;  // sorted
  std::size_t size = 0;

  // Pairs are edges of g, pairwise disjoint, and size/covered agree.
  bool valid_for(const Graph& g) const {
    if (size != pairs.size()) return false;
    std::vector<Vertex> seen;
    for (const auto& e : pairs) {
      if (!g.has_edge(e.u, e.v)) return false;
      seen.push_back(e.u);
      seen.push_back(e.v);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    return seen == covered;
  }
};

namespace detail {

inline MatchingCertificate certificate_from_mates(const std::vector<std::ptrdiff_t>& mate) {
  MatchingCertificate c;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (mate[v] >= 0 && static_cast<std::size_t>(mate[v]) > v) c.pairs.push_back({v, static_cast<Vertex>(mate[v])});
    if (mate[v] >= 0) c.covered.push_back(v);
  }
  c.size = c.pairs.size();
  return c;
}

// Edmonds' blossom algorithm, O(V^3). Greedy start in canonical edge order,
// then augment from each exposed vertex in index order.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.num_vertices()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<std::ptrdiff_t> run() {
    for (const auto& e : g_.edges())
      if (match_[e.u] < 0 && match_[e.v] < 0) {
        match_[e.u] = static_cast<std::ptrdiff_t>(e.v);
        match_[e.v] = static_cast<std::ptrdiff_t>(e.u);
      }
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] >= 0) continue;
      std::ptrdiff_t u = find_path(v);
      while (u >= 0) {
        const std::ptrdiff_t pv = parent_[static_cast<std::size_t>(u)];
        const std::ptrdiff_t ppv = match_[static_cast<std::size_t>(pv)];
        match_[static_cast<std::size_t>(u)] = pv;
        match_[static_cast<std::size_t>(pv)] = u;
        u = ppv;
      }
    }
    return match_;
  }

 private:
  std::size_t lca(std::size_t a, std::size_t b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] < 0) break;
      a = static_cast<std::size_t>(parent_[static_cast<std::size_t>(match_[a])]);
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = static_cast<std::size_t>(parent_[static_cast<std::size_t>(match_[b])]);
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[static_cast<std::size_t>(match_[v])]] = 1;
      parent_[v] = static_cast<std::ptrdiff_t>(child);
      child = static_cast<std::size_t>(match_[v]);
      v = static_cast<std::size_t>(parent_[static_cast<std::size_t>(match_[v])]);
    }
  }

  std::ptrdiff_t find_path(std::size_t root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), std::size_t{0});
    used_[root] = 1;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == static_cast<std::ptrdiff_t>(to)) continue;
        if (to == root || (match_[to] >= 0 && parent_[static_cast<std::size_t>(match_[to])] >= 0)) {
          const std::size_t cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
        } else if (parent_[to] < 0) {
          parent_[to] = static_cast<std::ptrdiff_t>(v);
          if (match_[to] < 0) return static_cast<std::ptrdiff_t>(to);
          const auto nxt = static_cast<std::size_t>(match_[to]);
          used_[nxt] = 1;
          q.push(nxt);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::ptrdiff_t> match_;
  std::vector<std::ptrdiff_t> parent_;
  std::vector<std::size_t> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g) : g_(g), cur_(g.num_vertices(), -1) {}

  std::vector<std::ptrdiff_t> run() {
    // greedy lower bound in canonical edge order
    best_ = cur_;
    for (const auto& e : g_.edges())
      if (best_[e.u] < 0 && best_[e.v] < 0) {
        best_[e.u] = static_cast<std::ptrdiff_t>(e.v);
        best_[e.v] = static_cast<std::ptrdiff_t>(e.u);
        ++best_size_;
      }
    search(0, 0, 0);
    return best_;
  }

 private:
  // Vertices < v are decided. `skipped` counts decided-but-unmatched ones.
  void search(Vertex v, std::size_t size, std::size_t skipped) {
    const std::size_t n = g_.num_vertices();
    while (v < n && cur_[v] >= 0) ++v;
    if (size > best_size_) {
      best_size_ = size;
      best_ = cur_;
    }
    if (v >= n) return;
    // every remaining undecided vertex could at best be paired up
    const std::size_t undecided = n - 2 * size - skipped;
    if (size + undecided / 2 <= best_size_) return;
    for (Vertex u : g_.neighbors(v)) {
      if (u < v || cur_[u] >= 0) continue;
      cur_[v] = static_cast<std::ptrdiff_t>(u);
      cur_[u] = static_cast<std::ptrdiff_t>(v);
      search(v + 1, size + 1, skipped);
      cur_[v] = cur_[u] = -1;
    }
    search(v + 1, size, skipped + 1);
  }

  const Graph& g_;
  std::vector<std::ptrdiff_t> cur_;
  std::vector<std::ptrdiff_t> best_;
  std::size_t best_size_ = 0;
};

}  // namespace detail

inline MatchingCertificate maximum_matching(const Graph& g) {
  return detail::certificate_from_mates(detail::Blossom(g).run());
}

// Exact exponential search; independent of the blossom implementation.
inline MatchingCertificate maximum_matching_branch_and_bound(const Graph& g) {
  return detail::certificate_from_mates(detail::BranchAndBound(g).run());
}

inline std::size_t matching_number(const Graph& g) { return maximum_matching(g).size; }

inline std::size_t deficiency(const Graph& g) { return g.num_vertices() - 2 * matching_number(g); }

inline bool has_perfect_matching(const Graph& g) { return deficiency(g) == 0; }

// ---------------------------------------------------------------------------
// Structure

// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> component_vertex_sets(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<Graph> components(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& c : component_vertex_sets(g)) out.push_back(g.induced(c));
  return out;
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.num_vertices(), -1);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Length of a shortest odd cycle; nullopt for bipartite graphs. A BFS from
// every root: an edge joining two vertices at equal depth d closes a closed
// odd walk of length 2d+1, and the minimum over all roots is attained by a
// shortest odd cycle through its root.
inline std::optional<std::size_t> odd_girth(const Graph& g) {
  std::optional<std::size_t> best;
  const std::size_t n = g.num_vertices();
  for (Vertex r = 0; r < n; ++r) {
    std::vector<std::ptrdiff_t> dist(n, -1);
    dist[r] = 0;
    std::queue<Vertex> q;
    q.push(r);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        } else if (dist[w] == dist[v]) {
          const auto len = static_cast<std::size_t>(2 * dist[v] + 1);
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

inline std::size_t leaf_count(const Graph& g) {
  std::size_t s = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 1) ++s;
  return s;
}

// |V| x |E| vertex-edge incidence matrix.
inline IntMatrix incidence_matrix(const Graph& g) {
  IntMatrix a(g.num_vertices(), std::vector<std::int64_t>(g.num_edges(), 0));
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    a[g.edges()[j].u][j] = 1;
    a[g.edges()[j].v][j] = 1;
  }
  return a;
}

inline std::size_t incidence_rank(const Graph& g) {
  if (g.num_edges() == 0) return 0;
  return exact_rank(incidence_matrix(g));
}

// ---------------------------------------------------------------------------
// Berge / Tutte

// Number of odd components of g with the vertices in `removed` deleted.
inline std::size_t odd_components_without(const Graph& g, std::uint64_t removed) {
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::size_t odd = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || (removed >> s & 1U)) continue;
    std::size_t count = 0;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++count;
      for (Vertex w : g.neighbors(v))
        if (!seen[w] && !(removed >> w & 1U)) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    odd += count % 2;
  }
  return odd;
}

struct BergeResult {
  std::size_t value = 0;
  std::vector<Vertex> witness;  // an S attaining the maximum (first in subset order)
};

inline constexpr std::size_t kDefaultBergeCap = 16;

// max over S of c_0(G - S) - |S| by exhaustive subset search.
inline BergeResult berge_deficiency(const Graph& g, std::size_t cap = kDefaultBergeCap) {
  const std::size_t n = g.num_vertices();
  if (n > cap || n > 62)
    throw BudgetExceeded("berge_deficiency: " + std::to_string(n) + " vertices exceeds the exhaustive cap of " +
                         std::to_string(cap) + "; use deficiency() instead");
  std::ptrdiff_t best = -1;
  std::uint64_t arg = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto val = static_cast<std::ptrdiff_t>(odd_components_without(g, s)) -
                     static_cast<std::ptrdiff_t>(__builtin_popcountll(s));
    if (val > best) {
      best = val;
      arg = s;
    }
  }
  BergeResult r;
  r.value = static_cast<std::size_t>(best);  // S = {} gives c_0(G) >= 0
  for (Vertex v = 0; v < n; ++v)
    if (arg >> v & 1U) r.witness.push_back(v);
  return r;
}

// c_0(G - S) <= |S| for every S (exhaustive).
inline bool tutte_condition(const Graph& g, std::size_t cap = kDefaultBergeCap) {
  const std::size_t n = g.num_vertices();
  if (n > cap || n > 62) throw BudgetExceeded("tutte_condition: vertex count exceeds the exhaustive cap");
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (odd_components_without(g, s) > static_cast<std::size_t>(__builtin_popcountll(s))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parallelization

// G^a: vertex x_i is deleted when a_i = 0 and otherwise replaced by copies
// x_i^1..x_i^{a_i}; copies of adjacent vertices are adjacent.
class ParallelGraph {
 public:
  ParallelGraph(Graph base, std::vector<Exponent> multiplicity)
      : base_(std::move(base)), mult_(std::move(multiplicity)) {
    if (mult_.size() != base_.num_vertices())
      throw UsageError("multiplicity vector has length " + std::to_string(mult_.size()) + ", graph has " +
                       std::to_string(base_.num_vertices()) + " vertices");
    std::vector<std::string> labels;
    first_copy_.assign(base_.num_vertices(), 0);
    for (Vertex i = 0; i < base_.num_vertices(); ++i) {
      first_copy_[i] = origin_.size();
      for (Exponent k = 1; k <= mult_[i]; ++k) {
        origin_.push_back(i);
        copy_.push_back(k);
        labels.push_back(base_.label(i) + "^" + std::to_string(k));
      }
    }
    std::vector<std::pair<Vertex, Vertex>> es;
    for (const auto& e : base_.edges())
      for (Exponent s = 0; s < mult_[e.u]; ++s)
        for (Exponent t = 0; t < mult_[e.v]; ++t) es.emplace_back(first_copy_[e.u] + s, first_copy_[e.v] + t);
    graph_ = Graph(std::move(labels), es);
  }

  const Graph& base() const noexcept { return base_; }
  const std::vector<Exponent>& multiplicity() const noexcept { return mult_; }
  const Graph& graph() const noexcept { return graph_; }
  Vertex origin(Vertex v) const { return origin_.at(v); }
  Exponent copy_index(Vertex v) const { return copy_.at(v); }

  // Vertex x_i^k (k is 1-based).
  Vertex vertex_of(Vertex i, Exponent k) const {
    if (i >= mult_.size() || k == 0 || k > mult_[i]) throw UsageError("no such copy");
    return first_copy_[i] + (k - 1);
  }

 private:
  Graph base_;
  std::vector<Exponent> mult_;
  Graph graph_;
  std::vector<Vertex> origin_;
  std::vector<Exponent> copy_;
  std::vector<Vertex> first_copy_;
};

inline ParallelGraph parallelize(const Graph& g, std::vector<Exponent> a) {
  return ParallelGraph(g, std::move(a));
}

inline ParallelGraph parallelize(const Graph& g, const Monomial& a) { return ParallelGraph(g, a.vec()); }

// G^f = G^{1 + e_i + e_j} for the edge f = {x_i, x_j}.
inline ParallelGraph duplicate_edge(const Graph& g, Vertex i, Vertex j) {
  if (!g.has_edge(i, j)) throw UsageError("duplicate_edge: {" + std::to_string(i) + "," + std::to_string(j) + "} is not an edge");
  std::vector<Exponent> a(g.num_vertices(), 1);
  ++a[i];
  ++a[j];
  return ParallelGraph(g, std::move(a));
}

// (G^a)^f for an edge f = {u, v} of G^a, checked against G^{a+e_i+e_j}
// through the copy relabelling: the new duplicate of x_i^k is x_i^{a_i+1}.
inline bool duplication_commutes(const ParallelGraph& ga, Vertex u, Vertex v) {
  const ParallelGraph outer = duplicate_edge(ga.graph(), u, v);
  const Vertex i = ga.origin(u);
  const Vertex j = ga.origin(v);
  std::vector<Exponent> b = ga.multiplicity();
  ++b[i];
  ++b[j];
  const ParallelGraph direct(ga.base(), b);

  const Graph& h = outer.graph();
  std::vector<Vertex> map(h.num_vertices());
  for (Vertex w = 0; w < h.num_vertices(); ++w) {
    const Vertex inner = outer.origin(w);
    const Vertex base = ga.origin(inner);
    const Exponent k = outer.copy_index(w) == 1 ? ga.copy_index(inner) : ga.multiplicity()[base] + 1;
    map[w] = direct.vertex_of(base, k);
  }
  std::vector<Edge> mapped;
  for (const auto& e : h.edges()) mapped.push_back(make_edge(map[e.u], map[e.v]));
  std::sort(mapped.begin(), mapped.end());
  return h.num_vertices() == direct.graph().num_vertices() && mapped == direct.graph().edges();
}

// ---------------------------------------------------------------------------
// Edge ideals and matching-based membership

inline MonomialIdeal edge_ideal(const Graph& g) {
  const auto iso = g.isolated_vertices();
  if (!iso.empty())
    throw UsageError("edge ideal requires a graph without isolated vertices (every vertex must occur in an edge); '" +
                     g.label(iso.front()) + "' is isolated");
  const VariableSet vars(g.labels());
  std::vector<Monomial> gens;
  for (const auto& e : g.edges()) {
    Monomial m = Monomial::one(g.num_vertices());
    m[e.u] = m[e.v] = 1;
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(vars, std::move(gens));
}

// nu(G^a): x^a lies in I(G)^k exactly for k <= power_index(G, a).
inline std::size_t power_index(const Graph& g, const Monomial& a) {
  return matching_number(parallelize(g, a).graph());
}

// x^a = x^delta * f^c read off a maximum matching of G^a.
struct FactorizationCertificate {
  Monomial delta;
  std::vector<std::uint64_t> edge_multiplicities;  // indexed like g.edges()

  std::uint64_t edge_count() const {
    return std::accumulate(edge_multiplicities.begin(), edge_multiplicities.end(), std::uint64_t{0});
  }

  bool reproduces(const Graph& g, const Monomial& a) const {
    if (delta.size() != a.size() || edge_multiplicities.size() != g.num_edges()) return false;
    std::vector<std::uint64_t> total(delta.vec().begin(), delta.vec().end());
    for (std::size_t j = 0; j < g.num_edges(); ++j) {
      total[g.edges()[j].u] += edge_multiplicities[j];
      total[g.edges()[j].v] += edge_multiplicities[j];
    }
    for (std::size_t i = 0; i < a.size(); ++i)
      if (total[i] != a[i]) return false;
    return true;
  }
};

inline FactorizationCertificate factor_by_matching(const Graph& g, const Monomial& a) {
  const ParallelGraph ga = parallelize(g, a);
  const MatchingCertificate m = maximum_matching(ga.graph());
  FactorizationCertificate c{a, std::vector<std::uint64_t>(g.num_edges(), 0)};
  for (const auto& e : m.pairs) {
    const Vertex i = ga.origin(e.u);
    const Vertex j = ga.origin(e.v);
    ++c.edge_multiplicities[*g.edge_index(i, j)];
    --c.delta[i];
    --c.delta[j];
  }
  if (!c.reproduces(g, a) || c.edge_count() != m.size)
    throw std::logic_error("factor_by_matching: certificate failed to validate");
  return c;
}

// x^a in K[G]: G^a has a perfect matching.
inline bool edge_subring_member(const Graph& g, const Monomial& a) {
  return has_perfect_matching(parallelize(g, a).graph());
}

}  // namespace eil
