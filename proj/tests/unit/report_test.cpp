#include <gtest/gtest.h>

#include "json.hpp"
#include "prismfix/domination.hpp"
#include "prismfix/report.hpp"
#include "prismfix/verify.hpp"

namespace prismfix {
namespace {

using nlohmann::json;

json payload_of(const ReportRecord& r) { return json::parse(r.payload); }

TEST(Report, RoundTrip) {
  const Graph c4 = families::cycle(4);
  const auto sets = enumerate_gamma_sets(c4);
  const auto rec = gamma_record(c4, domination_number(c4), &sets);
  const std::string line = serialize(rec);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(parse_report_record(line), rec);
  EXPECT_EQ(serialize(parse_report_record(line)), line);
}

TEST(Report, KeysAreSorted) {
  const auto line = serialize(fixer_record(is_universal_fixer(families::complete(2))));
  EXPECT_EQ(line.rfind(R"({"kind":"fixer","payload":{"automorphism_reduction":false,)", 0), 0U) << line;
  EXPECT_NE(line.find(R"("schema_version":1})"), std::string::npos);
}

TEST(Report, RejectsMalformedLines) {
  EXPECT_THROW(parse_report_record("{"), std::invalid_argument);
  EXPECT_THROW(parse_report_record("[]"), std::invalid_argument);
  EXPECT_THROW(parse_report_record(R"({"kind":"gamma","schema_version":1})"), std::invalid_argument);
  EXPECT_THROW(parse_report_record(R"({"kind":"nope","schema_version":1,"payload":{}})"), std::invalid_argument);
  EXPECT_THROW(parse_report_record(R"({"kind":"gamma","schema_version":"1","payload":{}})"), std::invalid_argument);
}

TEST(Report, GammaFields) {
  const Graph p6 = families::path(6);
  const auto j = payload_of(gamma_record(p6, domination_number(p6), nullptr));
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["gamma"], 2);
  EXPECT_EQ(j["witness"], json({1, 4}));
  EXPECT_FALSE(j.contains("gamma_sets"));
}

TEST(Report, AnalyzeFields) {
  const auto j = payload_of(analyze_record(families::cycle(4)));
  EXPECT_EQ(j["graph"], "Cl");
  EXPECT_EQ(j["girth"], 4);
  EXPECT_EQ(j["c3_free_vertices"], json({0, 1, 2, 3}));
  EXPECT_EQ(j["separable_records"], 4);
  EXPECT_EQ(j["edges"].size(), 4U);
  EXPECT_TRUE(payload_of(analyze_record(families::path(3)))["girth"].is_null());
}

TEST(Report, AdversaryFields) {
  const auto j = payload_of(adversary_record(check_graph(families::cycle(4))));
  EXPECT_TRUE(j["applicable"]);
  EXPECT_TRUE(j["passed"]);
  EXPECT_EQ(j["pi"], json({1, 3, 2, 0}));
  EXPECT_EQ(j["pi_cycles"], "(0 1 3)");
  EXPECT_EQ(j["gamma"], 2);
  EXPECT_EQ(j["prism_gamma"], 3);
  ASSERT_EQ(j["separable_records"].size(), 4U);
  const auto& first = j["separable_records"][0];
  EXPECT_EQ(first["case"], "Case1_1");
  EXPECT_EQ(first["contradiction"]["kind"], "undominated_copy_vertex");
  // Copy vertex 0' is index 4.
  EXPECT_EQ(first["contradiction"]["vertices"], json({4}));
  EXPECT_EQ(first["contradiction"]["side"], "copy");
  for (const char* flag :
       {"adversary_conditions_ok", "bounds_ok", "no_effective_ok", "gamma_strict_increase_ok", "classification_ok"})
    EXPECT_TRUE(j["flags"][flag]) << flag;

  const auto na = payload_of(adversary_record(check_graph(families::complete(3))));
  EXPECT_FALSE(na["applicable"]);
  EXPECT_EQ(na["reason"], "no C3-free vertex");
}

TEST(Report, SweepRecordsEndWithSummary) {
  const std::vector<std::string> lines{"A_", "bad", "A?"};
  const auto recs = sweep_records(conjecture_sweep(lines));
  ASSERT_EQ(recs.size(), 4U);
  EXPECT_EQ(recs.back().kind, ReportKind::SweepSummary);
  const auto summary = payload_of(recs.back());
  EXPECT_EQ(summary["graphs"], 2);
  EXPECT_EQ(summary["parse_failures"], 1);
  EXPECT_EQ(summary["universal_fixers"], 1);
  EXPECT_TRUE(summary["fixers_are_edgeless"]);
  const auto edgeless = payload_of(recs[0]);
  EXPECT_EQ(edgeless["input"], "A?");
  EXPECT_TRUE(edgeless["universal_fixer"]);
  EXPECT_FALSE(edgeless["adversary"]["applicable"]);
  const auto k2 = payload_of(recs[1]);
  EXPECT_EQ(k2["witness_pi"], json({0, 1}));
  EXPECT_TRUE(k2["adversary"]["passed"]);
  EXPECT_EQ(payload_of(recs[2])["line"], 2);
}

TEST(Report, DeterministicAcrossRuns) {
  const auto lines = std::vector<std::string>{"Cl", "Dhc", "C~"};
  std::string a;
  std::string b;
  for (const auto& r : sweep_records(conjecture_sweep(lines, {.jobs = 2}))) a += serialize(r) + "\n";
  for (const auto& r : sweep_records(conjecture_sweep(lines, {.jobs = 1}))) b += serialize(r) + "\n";
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace prismfix
