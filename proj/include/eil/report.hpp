#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eil/decomposition.hpp"
#include "eil/errors.hpp"
#include "eil/io.hpp"
#include "eil/stability.hpp"

namespace eil::report {

inline constexpr const char* kSchema = "edge-ideal-lab/1";

using nlohmann::json;

inline const char* mode_name(ChainMode m) {
  switch (m) {
    case ChainMode::Ass: return "ass";
    case ChainMode::Closure: return "closure";
    case ChainMode::Both: return "both";
  }
  return "both";
}

inline ChainMode parse_mode(const std::string& s) {
  if (s == "ass") return ChainMode::Ass;
  if (s == "closure") return ChainMode::Closure;
  if (s == "both") return ChainMode::Both;
  throw UsageError("unknown mode '" + s + "' (expected ass, closure or both)");
}

namespace detail {

inline json primes_json(const PrimeSet& ps, const VariableSet& vars) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.names(vars));
  return out;
}

inline PrimeSet primes_from(const json& j, const VariableSet& vars) {
  PrimeSet out;
  for (const auto& names : j) {
    std::vector<std::size_t> idx;
    for (const auto& n : names) {
      const auto i = vars.index_of(n.get<std::string>());
      if (i < 0) throw UsageError("report names unknown variable '" + n.get<std::string>() + "'");
      idx.push_back(static_cast<std::size_t>(i));
    }
    std::sort(idx.begin(), idx.end());
    out.emplace_back(std::move(idx));
  }
  return normalize(std::move(out));
}

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

inline std::string prime_text(const MonomialPrime& p, const VariableSet& vars) {
  std::string s = "(";
  const auto names = p.names(vars);
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s + ")";
}

}  // namespace detail

inline json to_json(const ChainReport& r) {
  const auto& vars = r.ideal.variables();
  json ideal;
  ideal["vars"] = vars.names();
  json gens = json::array();
  for (const auto& g : r.ideal.generators()) gens.push_back(io::format_monomial(g, vars));
  ideal["generators"] = gens;

  json chains = json::array();
  const std::size_t rows = std::max(r.ass_chain.size(), r.closure_ass_chain.size());
  for (std::size_t k = 0; k < rows; ++k) {
    json row;
    row["k"] = k + 1;
    row["ass"] = k < r.ass_chain.size() ? detail::primes_json(r.ass_chain[k], vars) : json(nullptr);
    row["closure_ass"] =
        k < r.closure_ass_chain.size() ? detail::primes_json(r.closure_ass_chain[k], vars) : json(nullptr);
    if (k < r.closure_added.size()) {
      json added = json::array();
      for (const auto& m : r.closure_added[k]) added.push_back(io::format_monomial(m, vars));
      row["closure_added"] = added;
    } else {
      row["closure_added"] = nullptr;
    }
    chains.push_back(row);
  }

  json verdicts;
  verdicts["ascending"] = r.ascending;
  verdicts["strict"] = r.strict;
  verdicts["closure_ascending"] = r.closure_ascending;
  verdicts["closure_strict"] = r.closure_strict;
  verdicts["n1_observed"] = detail::opt_json(r.n1_observed);
  verdicts["n1_bound"] = detail::opt_json(r.n1_bound);
  verdicts["n1_certified"] = r.n1_certified;
  verdicts["n2_observed"] = detail::opt_json(r.n2_observed);
  verdicts["n2_observational_only"] = true;
  verdicts["stable_sets_equal"] = detail::opt_json(r.stable_sets_equal);

  json out;
  out["schema"] = kSchema;
  out["description"] = r.description;
  out["ideal"] = ideal;
  out["K"] = r.K;
  out["mode"] = mode_name(r.mode);
  out["complete"] = r.complete;
  out["chains"] = chains;
  out["verdicts"] = verdicts;
  return out;
}

inline ChainReport from_json(const json& j) {
  if (j.value("schema", std::string{}) != kSchema) throw UsageError("unsupported report schema");
  ChainReport r;
  r.description = j.at("description").get<std::string>();
  const VariableSet vars(j.at("ideal").at("vars").get<std::vector<std::string>>());
  std::vector<Monomial> gens;
  for (const auto& g : j.at("ideal").at("generators")) gens.push_back(io::parse_monomial(g.get<std::string>(), vars));
  r.ideal = MonomialIdeal(vars, std::move(gens));
  r.K = j.at("K").get<unsigned>();
  r.mode = parse_mode(j.at("mode").get<std::string>());
  r.complete = j.at("complete").get<bool>();
  for (const auto& row : j.at("chains")) {
    if (!row.at("ass").is_null()) r.ass_chain.push_back(detail::primes_from(row["ass"], vars));
    if (!row.at("closure_ass").is_null()) r.closure_ass_chain.push_back(detail::primes_from(row["closure_ass"], vars));
    if (!row.at("closure_added").is_null()) {
      std::vector<Monomial> added;
      for (const auto& m : row["closure_added"]) added.push_back(io::parse_monomial(m.get<std::string>(), vars));
      r.closure_added.push_back(std::move(added));
    }
  }
  const auto& v = j.at("verdicts");
  r.ascending = v.at("ascending").get<std::vector<bool>>();
  r.strict = v.at("strict").get<std::vector<bool>>();
  r.closure_ascending = v.at("closure_ascending").get<std::vector<bool>>();
  r.closure_strict = v.at("closure_strict").get<std::vector<bool>>();
  r.n1_observed = detail::opt_from<unsigned>(v.at("n1_observed"));
  r.n1_bound = detail::opt_from<unsigned>(v.at("n1_bound"));
  r.n1_certified = v.at("n1_certified").get<bool>();
  r.n2_observed = detail::opt_from<unsigned>(v.at("n2_observed"));
  r.stable_sets_equal = detail::opt_from<bool>(v.at("stable_sets_equal"));
  return r;
}

inline std::string to_text(const ChainReport& r) {
  const auto& vars = r.ideal.variables();
  std::ostringstream out;
  if (!r.description.empty()) out << r.description << '\n';
  out << "ideal: " << r.ideal.size() << " generators in " << vars.size() << " variables\n";
  auto dump = [&](const char* label, const std::vector<PrimeSet>& chain) {
    for (std::size_t k = 0; k < chain.size(); ++k) {
      out << label << "(I^" << k + 1 << "): " << chain[k].size() << " primes\n";
      for (const auto& p : chain[k]) out << "  " << detail::prime_text(p, vars) << '\n';
    }
  };
  dump("Ass", r.ass_chain);
  dump("Ass closure", r.closure_ass_chain);
  for (std::size_t k = 0; k < r.closure_added.size(); ++k) {
    out << "closure(I^" << k + 1 << ") = I^" << k + 1;
    if (r.closure_added[k].empty()) {
      out << '\n';
      continue;
    }
    out << " + (";
    for (std::size_t i = 0; i < r.closure_added[k].size(); ++i)
      out << (i ? ", " : "") << io::format_monomial(r.closure_added[k][i], vars);
    out << ")\n";
  }
  auto flags = [&](const char* label, const std::vector<bool>& asc, const std::vector<bool>& strict) {
    if (asc.empty()) return;
    out << label << ':';
    for (std::size_t i = 0; i < asc.size(); ++i)
      out << ' ' << i + 1 << (asc[i] ? (strict[i] ? "<" : "=") : "!") << i + 2;
    out << '\n';
  };
  flags("ass steps", r.ascending, r.strict);
  flags("closure steps", r.closure_ascending, r.closure_strict);
  if (r.n1_observed) {
    out << "N1 observed: " << *r.n1_observed;
    if (r.n1_bound) out << " (bound " << *r.n1_bound << ')';
    out << (r.n1_certified ? ", stabilized" : ", constant within computed range") << '\n';
  }
  if (r.n2_observed) out << "N2 observed: " << *r.n2_observed << " (observational only)\n";
  if (r.stable_sets_equal) out << "stable sets equal: " << (*r.stable_sets_equal ? "yes" : "no") << '\n';
  if (!r.complete) out << "incomplete: time budget reached after k=" << std::max(r.ass_chain.size(), r.closure_ass_chain.size()) << '\n';
  return out.str();
}

}  // namespace eil::report
