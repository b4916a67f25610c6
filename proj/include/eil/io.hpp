#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eil/errors.hpp"
#include "eil/graph.hpp"
#include "eil/monomial.hpp"

namespace eil::io {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

// Non-empty, non-comment lines with their 1-based numbers.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    const auto t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    out.push_back({number, t});
  }
  return out;
}

inline std::optional<std::vector<std::string>> vars_header(const Line& l) {
  if (l.text.rfind("vars:", 0) != 0) return std::nullopt;
  auto names = split_ws(l.text.substr(5));
  if (names.empty()) throw ParseError(l.number, "empty vars: header");
  return names;
}

}  // namespace detail

// "x1^2*x3"; "1" for the unit monomial.
inline std::string format_monomial(const Monomial& m, const VariableSet& vars) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

inline Monomial parse_monomial(std::string_view text, const VariableSet& vars, std::size_t line = 0) {
  Monomial m = Monomial::one(vars.size());
  text = detail::trim(text);
  if (text == "1") return m;
  if (text.empty()) throw ParseError(line, "empty monomial");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto star = text.find('*', pos);
    std::string_view factor = detail::trim(text.substr(pos, star == std::string_view::npos ? star : star - pos));
    if (factor.empty()) throw ParseError(line, "empty factor in '" + std::string(text) + "'");
    Exponent e = 1;
    if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
      const std::string digits(detail::trim(factor.substr(caret + 1)));
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(line, "bad exponent in '" + std::string(factor) + "'");
      const unsigned long long v = digits.size() > 10 ? ~0ULL : std::stoull(digits);
      if (v > std::numeric_limits<Exponent>::max()) throw ParseError(line, "exponent too large in '" + std::string(factor) + "'");
      e = static_cast<Exponent>(v);
      factor = detail::trim(factor.substr(0, caret));
    }
    const auto idx = vars.index_of(std::string(factor));
    if (idx < 0) throw ParseError(line, "undeclared variable '" + std::string(factor) + "'");
    const auto i = static_cast<std::size_t>(idx);
    if (m[i] > std::numeric_limits<Exponent>::max() - e) throw ParseError(line, "exponent overflow");
    m[i] += e;
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return m;
}

// Ideal text: a `vars: ...` header, then one monomial per line. Every
// declared variable must occur in some generator unless allow_unused_vars.
inline MonomialIdeal parse_ideal(std::string_view text, bool allow_unused_vars = false) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, "ideal file is empty");
  const auto header = detail::vars_header(lines.front());
  if (!header) throw ParseError(lines.front().number, "ideal file must start with a 'vars:' header");
  VariableSet vars = [&] {
    try {
      return VariableSet(*header);
    } catch (const UsageError& e) {
      throw ParseError(lines.front().number, e.what());
    }
  }();
  std::vector<Monomial> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (detail::vars_header(lines[i])) throw ParseError(lines[i].number, "repeated 'vars:' header");
    if (detail::split_ws(lines[i].text).size() != 1)
      throw ParseError(lines[i].number, "expected one monomial per line, e.g. x1*x2*x5");
    gens.push_back(parse_monomial(lines[i].text, vars, lines[i].number));
  }
  if (!allow_unused_vars) {
    std::vector<bool> used(vars.size(), false);
    for (const auto& g : gens)
      for (auto i : g.support()) used[i] = true;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (!used[i])
        throw ParseError(lines.front().number,
                         "variable '" + vars.name(i) + "' occurs in no generator (pass --allow-unused-vars to permit)");
  }
  return MonomialIdeal(std::move(vars), std::move(gens));
}

inline std::string format_ideal(const MonomialIdeal& I) {
  std::string out = "vars:";
  for (const auto& n : I.variables().names()) out += " " + n;
  out += '\n';
  for (const auto& g : I.generators()) out += format_monomial(g, I.variables()) + '\n';
  return out;
}

// Graph text: optional `vars:` header, then one edge `u v` per line. Without
// a header vertices are numbered in order of first appearance.
inline Graph parse_graph(std::string_view text) {
  const auto lines = detail::content_lines(text);
  std::vector<std::string> names;
  std::map<std::string, Vertex> index;
  bool declared = false;
  std::size_t first = 0;
  if (!lines.empty()) {
    if (auto h = detail::vars_header(lines.front())) {
      declared = true;
      first = 1;
      for (auto& n : *h) {
        if (!index.emplace(n, names.size()).second) throw ParseError(lines.front().number, "duplicate vertex '" + n + "'");
        names.push_back(n);
      }
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = first; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (detail::vars_header(l)) throw ParseError(l.number, "'vars:' header must come first");
    const auto toks = detail::split_ws(l.text);
    if (toks.size() != 2) throw ParseError(l.number, "expected an edge 'u v'");
    Vertex ends[2];
    for (int s = 0; s < 2; ++s) {
      auto it = index.find(toks[s]);
      if (it == index.end()) {
        if (declared) throw ParseError(l.number, "undeclared vertex '" + toks[s] + "'");
        it = index.emplace(toks[s], names.size()).first;
        names.push_back(toks[s]);
      }
      ends[s] = it->second;
    }
    if (ends[0] == ends[1]) throw ParseError(l.number, "loop at '" + toks[0] + "'");
    if (!seen.insert({std::min(ends[0], ends[1]), std::max(ends[0], ends[1])}).second)
      throw ParseError(l.number, "repeated edge '" + toks[0] + " " + toks[1] + "'");
    edges.emplace_back(ends[0], ends[1]);
  }
  if (names.empty()) throw ParseError(lines.empty() ? 1 : lines.front().number, "graph has no vertices");
  return Graph(std::move(names), edges);
}

inline std::string format_graph(const Graph& g) {
  std::string out = "vars:";
  for (const auto& n : g.labels()) out += " " + n;
  out += '\n';
  for (const auto& e : g.edges()) out += g.label(e.u) + " " + g.label(e.v) + '\n';
  return out;
}

enum class InputKind { Graph, Ideal };

// By extension (.graph / .ideal), else by content: ideal lines hold a
// single token, graph lines two.
inline InputKind sniff_kind(const std::string& path, std::string_view text) {
  auto ends_with = [&](std::string_view suf) {
    return path.size() >= suf.size() && path.compare(path.size() - suf.size(), suf.size(), suf) == 0;
  };
  if (ends_with(".graph")) return InputKind::Graph;
  if (ends_with(".ideal")) return InputKind::Ideal;
  for (const auto& l : detail::content_lines(text)) {
    if (detail::vars_header(l)) continue;
    return detail::split_ws(l.text).size() == 2 ? InputKind::Graph : InputKind::Ideal;
  }
  return InputKind::Graph;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace eil::io
