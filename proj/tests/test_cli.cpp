#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lab_app.hpp"
#include "stacksort/stacksort.hpp"

using namespace stacksort;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lab::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> data_rows(const std::string& csv) {
  std::vector<std::string> out;
  bool header_seen = false;
  for (const auto& l : lines(csv)) {
    if (l.empty() || l[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    out.push_back(l);
  }
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("stacksort_cli_" + name);
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    for (const char* v : {"STACKSORT_PATTERNS", "STACKSORT_THREADS", "STACKSORT_CEILING", "STACKSORT_FORMAT",
                          "STACKSORT_CONFIG"})
      unsetenv(v);
  }
  void TearDown() override { SetUp(); }
};

}  // namespace

TEST_F(CliTest, SortWithTrace) {
  const auto r = run_cli({"sort", "--perm", "52431", "--trace"});
  EXPECT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 11u);
  EXPECT_EQ(l[0], "4,3,2,1,5");
  EXPECT_EQ(l[3], "3 push 4 4,2,5");
  EXPECT_EQ(l[10], "10 pop 5 -");
}

TEST_F(CliTest, SortClassicalPasses) {
  EXPECT_EQ(run_cli({"--patterns", "21", "sort", "--perm", "2143"}).out, "1,2,3,4\n");
  EXPECT_EQ(run_cli({"--patterns", "21", "sort", "--perm", "231", "--passes", "2"}).out, "1,2,3\n");
}

TEST_F(CliTest, OrbitOutput) {
  const auto r = run_cli({"orbit", "--perm", "43215"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "patterns: 123,132\nstart: 4,3,2,1,5\ntail: 1\ncycle: 3\nentry: 3,2,5,1,4\n");
}

TEST_F(CliTest, StructureOutput) {
  const auto r = run_cli({"structure", "--perm", "24315"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2 4 3 | [1] 5\nvalleys: 4\nboundary: 4\nhalf-decreasing: no\n");
}

TEST_F(CliTest, FamiliesOutput) {
  EXPECT_EQ(run_cli({"families", "--n-min", "5", "--n-max", "7"}).out, "3,2,1,4,5\n3,2,1,4,5,6\n4,2,3,5,1,6,7\n");
  EXPECT_EQ(run_cli({"families", "--kind", "delta", "--n-min", "7", "--n-max", "7"}).out, "5,3,2\n");
  EXPECT_EQ(run_cli({"families", "--n-min", "4", "--n-max", "5"}).code, lab::kExitUsage);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli({"verify", "theorem-1-2", "--n-max", "6"}).code, lab::kExitOk);
  EXPECT_EQ(run_cli({"verify", "conj-4-5", "--n-max", "5"}).code, lab::kExitCounterexample);
  EXPECT_EQ(run_cli({"verify", "no-such-target"}).code, lab::kExitUsage);
  EXPECT_EQ(run_cli({"sort", "--perm", "1223"}).code, lab::kExitUsage);
  EXPECT_EQ(run_cli({"--patterns", "1", "sort", "--perm", "12"}).code, lab::kExitUsage);
  EXPECT_EQ(run_cli({"--ceiling", "6", "verify", "theorem-1-2", "--n-max", "7"}).code, lab::kExitUsage);
  EXPECT_EQ(run_cli({"--format", "xml", "verify", "catalan"}).code, lab::kExitUsage);
  EXPECT_EQ(run_cli({}).code, lab::kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(CliTest, ConfigPrecedence) {
  const auto cfg = temp_file("config.ini");
  {
    std::ofstream f(cfg);
    f << "# lab settings\npatterns = 21\nformat = json\n";
  }
  // config file alone
  auto r = run_cli({"--config", cfg.string(), "orbit", "--perm", "231"});
  EXPECT_EQ(lines(r.out)[0], "patterns: 21");
  // environment beats config
  setenv("STACKSORT_PATTERNS", "123,213", 1);
  r = run_cli({"--config", cfg.string(), "orbit", "--perm", "231"});
  EXPECT_EQ(lines(r.out)[0], "patterns: 123,213");
  // flag beats environment
  r = run_cli({"--config", cfg.string(), "--patterns", "321", "orbit", "--perm", "231"});
  EXPECT_EQ(lines(r.out)[0], "patterns: 321");
  unsetenv("STACKSORT_PATTERNS");
  // config via environment variable, format taken from it
  setenv("STACKSORT_CONFIG", cfg.string().c_str(), 1);
  r = run_cli({"verify", "catalan", "--n-max", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["summary"], "pass-up-to-4");
  std::filesystem::remove(cfg);
  EXPECT_EQ(run_cli({"verify", "catalan"}).code, lab::kExitUsage);  // missing config file
}

TEST_F(CliTest, ConfigParsing) {
  const auto c = lab::parse_config_text("a = 1\n\n  # comment\nb=two # trailing\n");
  EXPECT_EQ(c.at("a"), "1");
  EXPECT_EQ(c.at("b"), "two");
  EXPECT_THROW(lab::parse_config_text("novalue\n"), DomainError);
  EXPECT_EQ(lab::resolve_setting(std::nullopt, "STACKSORT_UNSET_FOR_TEST", c, "zzz", "dflt"), "dflt");
  EXPECT_EQ(lab::resolve_setting(std::string("f"), "STACKSORT_UNSET_FOR_TEST", c, "a", "dflt"), "f");
}

TEST_F(CliTest, EnumeratePeriodicPointsDump) {
  const auto dump = temp_file("periodic.txt");
  const auto r = run_cli({"enumerate", "periodic-points", "--n", "6", "--dump", dump.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(dump);
  std::vector<Permutation> got;
  for (std::string l; std::getline(in, l);) got.push_back(parse_permutation(l));
  std::vector<Permutation> expected;
  for_each_permutation(6, [&](std::span<const Element> p) {
    if (is_half_decreasing(p)) expected.push_back(Permutation::from_trusted(p));
  });
  EXPECT_EQ(got, expected);
  EXPECT_EQ(data_rows(r.out), (std::vector<std::string>{"6,\"123,132\",periodic-count,24,info,"}));
  std::filesystem::remove(dump);
}

TEST_F(CliTest, EnumerateMinimallySortedDump) {
  const auto dump = temp_file("minimal.txt");
  const auto r = run_cli({"--threads", "2", "enumerate", "minimally-sorted", "--n", "5", "--dump", dump.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(dump);
  std::vector<std::string> got;
  for (std::string l; std::getline(in, l);) got.push_back(l);
  EXPECT_EQ(got.size(), 6u);
  EXPECT_NE(std::find(got.begin(), got.end(), "3,2,1,4,5"), got.end());
  std::filesystem::remove(dump);
}

TEST_F(CliTest, EnumerateOrdDistribution) {
  EXPECT_EQ(data_rows(run_cli({"enumerate", "ord-distribution", "--n", "1"}).out),
            (std::vector<std::string>{"1,\"123,132\",ord=0,1,info,"}));
  const auto rows = data_rows(run_cli({"enumerate", "ord-distribution", "--n", "5"}).out);
  EXPECT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[3], "5,\"123,132\",ord=3,48,info,");
  EXPECT_EQ(data_rows(run_cli({"--patterns", "21", "enumerate", "sortable-count", "--n", "6", "--t", "2"}).out),
            (std::vector<std::string>{"6,21,sortable-count[t=2],408,info,"}));
}

TEST_F(CliTest, ReportToFileAndJson) {
  const auto path = temp_file("report.json");
  const auto r = run_cli({"--format", "json", "--out", path.string(), "verify", "conj-4-4", "--n-min", "5",
                          "--n-max", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["command"], "verify conj-4-4");
  bool found = false;
  for (const auto& rec : j["records"])
    if (rec["quantity"] == "ratio-to-previous") {
      found = true;
      EXPECT_EQ(rec["value"], "4");
      EXPECT_EQ(rec["verdict"], "pass");
    }
  EXPECT_TRUE(found);
  std::filesystem::remove(path);
}

TEST_F(CliTest, CounterexampleReplays) {
  // Global flags may also follow the subcommand.
  const auto r2 = run_cli({"--patterns", "123,132", "verify", "conj-4-1", "--n-max", "4", "--format", "json"});
  ASSERT_EQ(r2.code, lab::kExitCounterexample);
  const auto j = nlohmann::json::parse(r2.out);
  std::string cx;
  for (const auto& rec : j["records"])
    if (rec["verdict"] == "fail" && rec["quantity"] == "all-periodic") {
      cx = rec["counterexample"];
      break;
    }
  ASSERT_FALSE(cx.empty());
  const auto orbit_out = run_cli({"orbit", "--perm", cx});
  EXPECT_NE(lines(orbit_out.out)[2], "tail: 0");
}

TEST_F(CliTest, VerifyIdenticalBodiesAcrossThreadCounts) {
  auto body = [](const std::string& threads) {
    auto out = run_cli({"--threads", threads, "verify", "theorem-1-2", "--n-max", "7"}).out;
    std::string kept;
    for (const auto& l : lines(out))
      if (l.rfind("# generated_at=", 0) != 0) kept += l + "\n";
    return kept;
  };
  EXPECT_EQ(body("1"), body("3"));
}
