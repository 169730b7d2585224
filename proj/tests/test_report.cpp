#include <gtest/gtest.h>

#include "stacksort/report.hpp"

using namespace stacksort;

namespace {

EnumerationReport sample() {
  EnumerationReport r;
  r.timestamp = "2026-01-01T00:00:00Z";
  r.command = "verify demo";
  r.patterns = "123,132";
  r.n_min = 1;
  r.n_max = 3;
  r.add(3, "123,132", "ord-max", "2", Verdict::pass);
  r.add(1, "123,132", "ord-max", "0", Verdict::pass);
  r.add(2, "123,132", "note", "a \"quoted\" value");
  return r;
}

}  // namespace

TEST(Report, CounterexampleIffFail) {
  EnumerationReport r;
  EXPECT_THROW(r.add(1, "21", "x", "v", Verdict::fail), std::logic_error);
  EXPECT_THROW(r.add(1, "21", "x", "v", Verdict::pass, "oops"), std::logic_error);
  EXPECT_NO_THROW(r.add(1, "21", "x", "v", Verdict::fail, "2,1"));
  EXPECT_TRUE(r.has_failure());
  EXPECT_EQ(r.summary(), "fail");
}

TEST(Report, SummaryAndOrdering) {
  auto r = sample();
  EXPECT_EQ(r.summary(), "pass-up-to-3");
  r.sort_records();
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_EQ(r.records[0].n, 1u);
  EXPECT_EQ(r.records[1].quantity, "note");
  EXPECT_EQ(r.find("ord-max").size(), 2u);
  EnumerationReport empty;
  EXPECT_EQ(empty.summary(), "info");
}

TEST(Report, CsvLayout) {
  auto r = sample();
  r.sort_records();
  const auto csv = to_csv(r);
  EXPECT_EQ(csv,
            "# schema_version=1 tool_version=0.3.0\n"
            "# generated_at=2026-01-01T00:00:00Z\n"
            "# command=verify demo patterns=123,132 n=1..3 summary=pass-up-to-3\n"
            "n,patterns,quantity,value,verdict,counterexample\n"
            "1,\"123,132\",ord-max,0,pass,\n"
            "2,\"123,132\",note,\"a \"\"quoted\"\" value\",info,\n"
            "3,\"123,132\",ord-max,2,pass,\n");
}

TEST(Report, JsonMirrorsCsv) {
  auto r = sample();
  r.sort_records();
  const auto j = to_json(r);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["generated_at"], "2026-01-01T00:00:00Z");
  EXPECT_EQ(j["summary"], "pass-up-to-3");
  ASSERT_EQ(j["records"].size(), 3u);
  EXPECT_EQ(j["records"][1]["value"], "a \"quoted\" value");
  EXPECT_FALSE(j["records"][0].contains("counterexample"));
  const auto roundtrip = nlohmann::ordered_json::parse(j.dump());
  EXPECT_EQ(roundtrip, j);
}

TEST(Report, BodyExcludesTimestamp) {
  auto a = sample();
  auto b = sample();
  b.timestamp = "2030-12-31T23:59:59Z";
  EXPECT_NE(to_csv(a), to_csv(b));
  EXPECT_EQ(report_body(a), report_body(b));
  EXPECT_EQ(report_body(a, true), report_body(b, true));
  EXPECT_EQ(report_body(a).find("generated_at"), std::string::npos);
}
