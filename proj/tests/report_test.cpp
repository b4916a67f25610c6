#include <gtest/gtest.h>

#include "eil/fixtures.hpp"
#include "eil/io.hpp"
#include "eil/report.hpp"

using namespace eil;
namespace fx = eil::fixtures;

namespace {

ChainReport c5_report() { return analyze_chain(edge_ideal(fx::c5()), 3, {}, stability_bound(fx::c5()), "c5"); }

}  // namespace

TEST(Json, RoundTrip) {
  const auto r = c5_report();
  const auto j = report::to_json(r);
  EXPECT_EQ(j["schema"], report::kSchema);
  EXPECT_EQ(report::from_json(j), r);
  EXPECT_EQ(report::from_json(nlohmann::json::parse(j.dump(2))), r);
}

TEST(Json, RoundTripAssOnlyAndIncomplete) {
  ChainOptions o;
  o.mode = ChainMode::Ass;
  o.budget_seconds = 0.0;
  const auto r = analyze_chain(edge_ideal(fx::fig9()), 4, o, 8u);
  ASSERT_FALSE(r.complete);
  EXPECT_EQ(report::from_json(report::to_json(r)), r);
}

TEST(Json, Deterministic) { EXPECT_EQ(report::to_json(c5_report()).dump(), report::to_json(c5_report()).dump()); }

TEST(Json, VerdictFields) {
  const auto j = report::to_json(c5_report());
  const auto& v = j["verdicts"];
  EXPECT_EQ(v["n1_bound"], 3);
  EXPECT_TRUE(v["n2_observational_only"].get<bool>());
  EXPECT_EQ(j["chains"].size(), 3u);
  EXPECT_EQ(j["mode"], "both");
}

TEST(Json, RejectsWrongSchema) {
  auto j = report::to_json(c5_report());
  j["schema"] = "something-else/9";
  EXPECT_ANY_THROW(report::from_json(j));
}

TEST(Mode, ParseAndName) {
  for (auto m : {ChainMode::Ass, ChainMode::Closure, ChainMode::Both})
    EXPECT_EQ(report::parse_mode(report::mode_name(m)), m);
  EXPECT_THROW(report::parse_mode("sideways"), UsageError);
}

TEST(Text, MentionsChainsAndVerdicts) {
  const auto t = report::to_text(c5_report());
  EXPECT_NE(t.find("N1"), std::string::npos);
  EXPECT_NE(t.find("observational"), std::string::npos);
  EXPECT_NE(t.find("Ass(I^3)"), std::string::npos);
}

TEST(Files, ShippedInputsParse) {
  const std::string dir = EIL_DATA_DIR;
  const auto fig9 = io::parse_graph(io::read_file(dir + "/fig9.graph"));
  EXPECT_EQ(fig9.edges(), fx::fig9().edges());
  EXPECT_EQ(io::parse_ideal(io::read_file(dir + "/assce.ideal")), fx::assce());
  EXPECT_EQ(io::sniff_kind("x.txt", "vars: a b\na b\n"), io::InputKind::Graph);
  EXPECT_EQ(io::sniff_kind("x.txt", "vars: a b\na*b\n"), io::InputKind::Ideal);
  EXPECT_THROW(io::read_file(dir + "/missing"), std::runtime_error);
}
