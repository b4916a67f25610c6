#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eil/graph.hpp"
#include "eil/monomial.hpp"

namespace eil::fixtures {

// Generator lists exactly as they are written for the two worked examples.
inline constexpr std::string_view kFig9Generators =
    "x1*x2,x2*x3,x1*x3,x3*x4,x4*x5,x5*x6,x6*x7,x7*x8,x8*x9,x5*x9";
inline constexpr std::string_view kAssceGenerators =
    "x1*x2*x5,x1*x3*x4,x1*x2*x6,x1*x3*x6,x1*x4*x5,x2*x3*x4,x2*x3*x5,x2*x4*x6,x3*x5*x6,x4*x5*x6";

namespace detail {

// 1-based pairs, as drawn.
inline Graph from_pairs(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (auto [a, b] : edges) e.emplace_back(a - 1, b - 1);
  return Graph::indexed(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::indexed(n, e);
}

}  // namespace detail

inline Graph e1() { return detail::from_pairs(2, {{1, 2}}); }
// (single edge)^(3,1): x1 duplicated three times.
inline Graph star31() { return parallelize(e1(), std::vector<Exponent>{3, 1}).graph(); }
inline Graph k33() { return parallelize(e1(), std::vector<Exponent>{3, 3}).graph(); }
inline Graph fig7() { return detail::from_pairs(6, {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}}); }
inline std::vector<Exponent> fig8_multiplicity() { return {1, 1, 2, 2, 1, 1}; }
inline Graph c3() { return detail::cycle(3); }
inline Graph c4() { return detail::cycle(4); }
inline Graph c5() { return detail::cycle(5); }
inline Graph p4() { return detail::from_pairs(4, {{1, 2}, {2, 3}, {3, 4}}); }
inline Graph k23() { return detail::from_pairs(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}); }
inline Graph c3_c3() { return disjoint_union(c3(), Graph::indexed(3, {{0, 1}, {1, 2}, {0, 2}}, "y")); }
inline Graph c3_c4() { return disjoint_union(c3(), Graph::indexed(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, "y")); }

// Embedded data, kept separate from the quoted strings so integrity() can
// byte-compare the two.
inline constexpr std::pair<int, int> kFig9Edges[] = {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5},
                                                     {5, 6}, {6, 7}, {7, 8}, {8, 9}, {5, 9}};
inline constexpr int kAssceSupports[][3] = {{1, 2, 5}, {1, 3, 4}, {1, 2, 6}, {1, 3, 6}, {1, 4, 5},
                                            {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}};

inline Graph fig9() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (auto [a, b] : kFig9Edges) e.emplace_back(a - 1, b - 1);
  return Graph::indexed(9, e);
}

inline MonomialIdeal assce() {
  std::vector<Monomial> gens;
  for (const auto& s : kAssceSupports) {
    Monomial m = Monomial::one(6);
    for (int v : s) m[v - 1] = 1;
    gens.push_back(m);
  }
  return MonomialIdeal(VariableSet::indexed(6), std::move(gens));
}

inline std::string fig9_rendered() {
  std::string out;
  for (auto [a, b] : kFig9Edges) {
    if (!out.empty()) out += ',';
    out += "x" + std::to_string(a) + "*x" + std::to_string(b);
  }
  return out;
}

inline std::string assce_rendered() {
  std::string out;
  for (const auto& s : kAssceSupports) {
    if (!out.empty()) out += ',';
    out += "x" + std::to_string(s[0]) + "*x" + std::to_string(s[1]) + "*x" + std::to_string(s[2]);
  }
  return out;
}

struct IntegrityResult {
  bool fig9 = false;
  bool assce = false;
  bool ok() const { return fig9 && assce; }
};

inline IntegrityResult integrity() { return {fig9_rendered() == kFig9Generators, assce_rendered() == kAssceGenerators}; }

struct NamedGraph {
  std::string name;
  Graph graph;
};

inline std::vector<NamedGraph> catalog_graphs() {
  return {{"E1", e1()},   {"STAR31", star31()}, {"K33", k33()}, {"FIG7", fig7()},   {"FIG9", fig9()},
          {"C3", c3()},   {"C4", c4()},         {"C5", c5()},   {"P4", p4()},       {"K23", k23()},
          {"C3+C3", c3_c3()}, {"C3+C4", c3_c4()}};
}

}  // namespace eil::fixtures
