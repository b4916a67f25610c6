// edge-ideal-lab: command-line front end.
//
// Exit codes: 0 success, 1 a verification or property check failed,
// 2 unreadable or malformed input (or bad arguments), 3 a computation refused
// because it would exceed a budget or cap.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eil/closure.hpp"
#include "eil/errors.hpp"
#include "eil/graph.hpp"
#include "eil/io.hpp"
#include "eil/properties.hpp"
#include "eil/report.hpp"
#include "eil/stability.hpp"
#include "eil/verify.hpp"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kBadInput = 2, kBudget = 3 };

struct Globals {
  std::string format = "text";
  std::optional<double> budget_seconds;
  unsigned threads = 1;
  bool json() const { return format == "json"; }
};

struct Input {
  eil::io::InputKind kind;
  std::optional<eil::Graph> graph;
  std::optional<eil::MonomialIdeal> ideal;
};

Input load(const std::string& path, bool allow_unused) {
  const std::string text = eil::io::read_file(path);
  Input in{eil::io::sniff_kind(path, text), std::nullopt, std::nullopt};
  if (in.kind == eil::io::InputKind::Graph)
    in.graph = eil::io::parse_graph(text);
  else
    in.ideal = eil::io::parse_ideal(text, allow_unused);
  return in;
}

std::vector<eil::Exponent> parse_mult(const std::string& s) {
  std::vector<eil::Exponent> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw eil::UsageError("--mult expects comma-separated non-negative integers, got '" + s + "'");
    out.push_back(static_cast<eil::Exponent>(std::stoul(tok)));
  }
  return out;
}

eil::Vertex vertex_by_label(const eil::Graph& g, const std::string& label) {
  for (eil::Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.label(v) == label) return v;
  throw eil::UsageError("no vertex named '" + label + "'");
}

std::string labels_of(const eil::Graph& g, const std::vector<eil::Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + g.label(vs[i]);
  return s + "}";
}

// ---------------------------------------------------------------------------

int cmd_analyze(const Globals& g, const std::string& path, unsigned K, const std::string& mode, bool allow_unused,
                std::uint64_t cap, std::ostream& out) {
  const Input in = load(path, allow_unused);
  eil::ChainOptions opt;
  opt.mode = eil::report::parse_mode(mode);
  opt.budget_seconds = g.budget_seconds;
  opt.closure.threads = g.threads;
  opt.closure.cap = cap;
  std::optional<unsigned> bound;
  eil::MonomialIdeal I = in.ideal ? *in.ideal : eil::edge_ideal(*in.graph);
  if (in.graph) bound = eil::stability_bound(*in.graph);
  const eil::ChainReport r = eil::analyze_chain(I, K, opt, bound, path);
  if (g.json())
    out << eil::report::to_json(r).dump(2) << '\n';
  else
    out << eil::report::to_text(r);
  return r.complete ? kOk : kBudget;
}

int cmd_graph(const Globals& g, const std::string& path, const std::string& action, const std::string& mult,
              const std::string& edge, std::ostream& out) {
  const Input in = load(path, false);
  if (!in.graph) throw eil::UsageError("'graph' needs a graph file (edges 'u v'), got an ideal");
  eil::Graph base = *in.graph;
  std::optional<eil::ParallelGraph> par;
  if (!mult.empty()) {
    const auto a = parse_mult(mult);
    if (a.size() != base.num_vertices())
      throw eil::UsageError("--mult has " + std::to_string(a.size()) + " entries for " +
                            std::to_string(base.num_vertices()) + " vertices");
    par = eil::parallelize(base, a);
  }
  if (action == "duplicate") {
    const auto comma = edge.find(',');
    if (comma == std::string::npos) throw eil::UsageError("--edge expects 'u,v'");
    const eil::Graph& h = par ? par->graph() : base;
    par = eil::duplicate_edge(h, vertex_by_label(h, edge.substr(0, comma)), vertex_by_label(h, edge.substr(comma + 1)));
  } else if (!edge.empty()) {
    throw eil::UsageError("--edge only applies to 'duplicate'");
  }
  const eil::Graph& G = par ? par->graph() : base;
  json j;
  j["schema"] = eil::report::kSchema;
  j["graph"] = {{"vertices", G.labels()}, {"edges", json::array()}};
  for (const auto& e : G.edges()) j["graph"]["edges"].push_back({G.label(e.u), G.label(e.v)});
  std::ostringstream text;

  if (action == "matching") {
    const auto m = eil::maximum_matching(G);
    j["matching_number"] = m.size;
    json pairs = json::array();
    text << "matching number: " << m.size << '\n';
    for (const auto& e : m.pairs) {
      pairs.push_back({G.label(e.u), G.label(e.v)});
      text << "  " << G.label(e.u) << ' ' << G.label(e.v) << '\n';
    }
    j["matching"] = pairs;
  } else if (action == "deficiency") {
    const auto d = eil::deficiency(G);
    j["deficiency"] = d;
    text << "deficiency: " << d << '\n';
  } else if (action == "berge") {
    const auto b = eil::berge_deficiency(G);
    j["berge_deficiency"] = b.value;
    j["witness"] = json::array();
    for (auto v : b.witness) j["witness"].push_back(G.label(v));
    text << "Berge deficiency: " << b.value << " attained at S = " << labels_of(G, b.witness) << '\n';
  } else if (action == "parallelize" || action == "duplicate") {
    if (!par) throw eil::UsageError("'parallelize' needs --mult");
    const auto nu = eil::matching_number(G);
    j["matching_number"] = nu;
    j["deficiency"] = G.num_vertices() - 2 * nu;
    text << eil::io::format_graph(G);
    text << "# matching number " << nu << ", deficiency " << G.num_vertices() - 2 * nu << '\n';
  } else {
    throw eil::UsageError("unknown graph action '" + action + "'");
  }
  out << (g.json() ? j.dump(2) + "\n" : text.str());
  return kOk;
}

int cmd_verify(const Globals& g, const std::optional<std::string>& only, std::ostream& out) {
  const auto results = eil::verify::run(only);
  int failed = 0;
  json arr = json::array();
  for (const auto& r : results) {
    failed += !r.pass;
    arr.push_back({{"group", r.group}, {"id", r.id}, {"statement", r.statement}, {"pass", r.pass}, {"detail", r.detail}});
    if (!g.json()) {
      out << (r.pass ? "PASS " : "FAIL ") << r.group << '/' << r.id << ": " << r.statement;
      if (!r.pass && !r.detail.empty()) out << " (" << r.detail << ')';
      out << '\n';
    }
  }
  if (g.json())
    out << json{{"schema", eil::report::kSchema}, {"claims", arr}, {"failed", failed}}.dump(2) << '\n';
  else
    out << results.size() - failed << '/' << results.size() << " claims hold\n";
  return failed ? kCheckFailed : kOk;
}

int cmd_battery(const Globals& g, const eil::properties::BatteryOptions& opt, std::ostream& out) {
  const auto results = eil::properties::run_battery(opt);
  int failed = 0;
  json arr = json::array();
  for (const auto& r : results) {
    failed += !r.pass();
    arr.push_back({{"property", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"first_failure", r.first_failure}});
    if (!g.json()) {
      out << (r.pass() ? "PASS " : "FAIL ") << r.name << " [" << r.cases << " cases]";
      if (!r.pass()) out << " first failure: " << r.first_failure;
      out << '\n';
    }
  }
  if (g.json())
    out << json{{"schema", eil::report::kSchema}, {"properties", arr}, {"failed", failed}}.dump(2) << '\n';
  return failed ? kCheckFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Associated primes, integral closures and matchings of edge ideals"};
  app.require_subcommand(1);
  Globals g;
  double budget = 0;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto* budget_opt = app.add_option("--budget-seconds", budget, "Stop computing further powers after this many seconds")
                         ->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads for closure sweeps")->check(CLI::Range(1U, 256U));

  auto* analyze = app.add_subcommand("analyze", "Ass and closure chains of I^k for k = 1..K");
  std::string a_path, a_mode = "both";
  unsigned a_k = 5;
  bool a_unused = false;
  std::uint64_t a_cap = eil::kDefaultClosureCap;
  analyze->add_option("input", a_path, "Graph (.graph) or ideal (.ideal) file")->required();
  analyze->add_option("--max-power,-K", a_k, "Largest power K")->check(CLI::Range(1U, 64U));
  analyze->add_option("--mode", a_mode, "ass, closure or both")->check(CLI::IsMember({"ass", "closure", "both"}));
  analyze->add_flag("--allow-unused-vars", a_unused, "Accept declared variables that occur in no generator");
  analyze->add_option("--closure-cap", a_cap, "Lattice points a closure sweep may examine");

  auto* graph = app.add_subcommand("graph", "Matching invariants and parallelizations");
  std::string g_path, g_action, g_mult, g_edge;
  graph->add_option("input", g_path, "Graph file")->required();
  graph->add_option("action", g_action, "matching, deficiency, berge, parallelize or duplicate")
      ->required()
      ->check(CLI::IsMember({"matching", "deficiency", "berge", "parallelize", "duplicate"}));
  graph->add_option("--mult", g_mult, "Multiplicity vector, e.g. 3,3 (applied first)");
  graph->add_option("--edge", g_edge, "Edge to duplicate, e.g. x3,x4");

  auto* verify = app.add_subcommand("verify-paper", "Check the bundled worked examples and stated results");
  std::string v_only;
  verify->add_option("--only", v_only, "Run one claim group")->check(CLI::IsMember(eil::verify::group_names()));

  auto* battery = app.add_subcommand("property-battery", "Universally quantified checks over a graph corpus");
  eil::properties::BatteryOptions b_opt;
  battery->add_option("--max-vertices", b_opt.max_vertices, "Exhaustive corpus size")->check(CLI::Range(2, 6));
  battery->add_option("--max-power", b_opt.max_power, "Largest power on the exhaustive corpus")->check(CLI::Range(1, 6));
  battery->add_option("--sample-seed", b_opt.seed, "Seed for sampled graphs");
  battery->add_option("--samples", b_opt.samples, "Number of sampled graphs on 6-7 vertices");
  battery->add_flag("!--no-splitting", b_opt.cross_check_splitting, "Skip the splitting decomposition cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }
  if (*budget_opt) g.budget_seconds = budget;

  // Everything goes through a buffer so a failure never leaves half a document.
  std::ostringstream out;
  int code = kOk;
  try {
    if (*analyze)
      code = cmd_analyze(g, a_path, a_k, a_mode, a_unused, a_cap, out);
    else if (*graph)
      code = cmd_graph(g, g_path, g_action, g_mult, g_edge, out);
    else if (*verify)
      code = cmd_verify(g, v_only.empty() ? std::nullopt : std::optional<std::string>(v_only), out);
    else if (*battery)
      code = cmd_battery(g, b_opt, out);
  } catch (const eil::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const eil::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const eil::BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  std::cout << out.str();
  if (code == kBudget) std::cerr << "note: time budget reached; report is incomplete\n";
  return code;
}
