// Drives the installed command-line binary end to end through a shell,
// checking report schemas, exit codes, stdin plumbing, and byte stability.

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "tiling/constructions.hpp"
#include "tiling/graph.hpp"

namespace tiling {
namespace {

using nlohmann::json;

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

// Runs the binary with the given argument string; `input` (if any) is piped
// to stdin and `env` (if any) is prefixed as VAR=value assignments. stderr
// is discarded so timing chatter never reaches asserts.
CommandResult run_cli(const std::string& args, const std::string& input = "",
                      const std::string& env = "") {
  std::string cmd;
  if (!input.empty()) {
    // graph6 text never contains a single quote (its alphabet starts at
    // ASCII 63), so plain quoting is safe.
    cmd += "printf '%s' '" + input + "' | ";
  }
  if (!env.empty()) cmd += env + " ";
  cmd += std::string(TILING_CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  CommandResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

json parse_report(const CommandResult& result) {
  json doc = json::parse(result.out, nullptr, false);
  EXPECT_FALSE(doc.is_discarded()) << "not JSON: " << result.out;
  return doc;
}

std::string e2_14_2_graph6() {
  ConstructionSpec spec;
  spec.family = Family::E2;
  spec.n = 14;
  spec.k = 2;
  return to_graph6(build(spec));
}

TEST(CliConstruct, ReportMatchesTheLibrary) {
  CommandResult r = run_cli("construct --family E1 --n 13 --k 1");
  ASSERT_EQ(r.exit_code, 0);
  json doc = parse_report(r);
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["command"], "construct");
  EXPECT_EQ(doc["config"]["family"], "E1");
  EXPECT_EQ(doc["result"]["edge_count"], 60);
  EXPECT_EQ(doc["result"]["edge_count_formula"], 60);
  EXPECT_EQ(doc["result"]["n"], 13);

  ConstructionSpec spec;
  spec.family = Family::E1;
  spec.n = 13;
  spec.k = 1;
  EXPECT_EQ(doc["result"]["graph6"], to_graph6(build(spec)));
}

TEST(CliConstruct, Graph6AndTextFormats) {
  CommandResult g6 =
      run_cli("construct --family E1 --n 13 --k 1 --format graph6");
  ASSERT_EQ(g6.exit_code, 0);
  ConstructionSpec spec;
  spec.family = Family::E1;
  spec.n = 13;
  spec.k = 1;
  EXPECT_EQ(g6.out, to_graph6(build(spec)) + "\n");

  CommandResult text =
      run_cli("construct --family E3 --n 11 --k 1 --format text");
  ASSERT_EQ(text.exit_code, 0);
  std::istringstream in(text.out);
  int n = 0, m = 0;
  in >> n >> m;
  EXPECT_EQ(n, 11);
  ConstructionSpec e3;
  e3.family = Family::E3;
  e3.n = 11;
  e3.k = 1;
  EXPECT_EQ(m, build(e3).edge_count());
}

TEST(CliConstruct, CatalogListsContiguousFamilyRanges) {
  CommandResult r = run_cli("construct --catalog --catalog-n 260");
  ASSERT_EQ(r.exit_code, 0);
  json doc = parse_report(r);
  const json& families = doc["result"]["families"];
  ASSERT_EQ(families.size(), 5u);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(families[i]["family"], "E" + std::to_string(i + 1));
    EXPECT_LE(families[i]["k_lo"].get<double>(),
              families[i]["k_hi"].get<double>());
    if (i > 0) {
      EXPECT_DOUBLE_EQ(families[i]["k_lo"].get<double>(),
                       families[i - 1]["k_hi"].get<double>());
    }
  }
  EXPECT_NEAR(families[0]["k_hi_over_n"].get<double>(), 2.0 / 13.0, 0.01);
  EXPECT_NEAR(families[4]["k_hi_over_n"].get<double>(), 0.25, 0.01);
}

TEST(CliXi, EvaluatesTheEnvelope) {
  CommandResult r = run_cli("xi --k 0.125");
  ASSERT_EQ(r.exit_code, 0);
  json doc = parse_report(r);
  XiValue expected = xi(1.0, 0.125);
  EXPECT_DOUBLE_EQ(doc["result"]["value"].get<double>(), expected.value);
  EXPECT_EQ(doc["result"]["regime"], expected.regime);
  ASSERT_EQ(doc["result"]["breakpoints"].size(), 5u);

  EXPECT_EQ(run_cli("xi --k 0.3").exit_code, 2);
  EXPECT_EQ(run_cli("xi").exit_code, 2);
}

TEST(CliNu, AcceptsConstructionsTheGraph6FlagAndStdin) {
  CommandResult from_family = run_cli("nu --family E2 --n 14 --k 2");
  ASSERT_EQ(from_family.exit_code, 0);
  EXPECT_EQ(parse_report(from_family)["result"]["value"], 2);

  const std::string g6 = e2_14_2_graph6();
  CommandResult from_flag = run_cli("nu --graph6 '" + g6 + "'");
  ASSERT_EQ(from_flag.exit_code, 0);
  EXPECT_EQ(parse_report(from_flag)["result"]["value"], 2);

  CommandResult from_stdin = run_cli("nu", g6);
  ASSERT_EQ(from_stdin.exit_code, 0);
  json doc = parse_report(from_stdin);
  EXPECT_EQ(doc["config"]["source"], "graph6");
  EXPECT_EQ(doc["config"]["graph6"], g6);
  EXPECT_EQ(doc["result"]["value"], 2);

  CommandResult triangles = run_cli("nu --r 3", g6);
  ASSERT_EQ(triangles.exit_code, 0);
  EXPECT_EQ(parse_report(triangles)["result"]["r"], 3);
}

TEST(CliEx, ReportsTheExtremalValueAndWitness) {
  CommandResult r = run_cli("ex --n 7 --k 1");
  ASSERT_EQ(r.exit_code, 0);
  json doc = parse_report(r);
  EXPECT_EQ(doc["result"]["value"], 21);
  EXPECT_EQ(doc["result"]["n"], 7);
  EXPECT_EQ(doc["result"]["k"], 1);
  EXPECT_EQ(doc["result"]["r"], 4);
  Graph witness =
      from_graph6(doc["result"]["witness_graph6"].get<std::string>());
  EXPECT_EQ(witness.vertex_count(), 7);
  EXPECT_EQ(witness.edge_count(), 21);
}

TEST(CliPacking, EmitsProfileClassesStagesAndBounds) {
  CommandResult r = run_cli("packing --family E2 --n 14 --k 2");
  ASSERT_EQ(r.exit_code, 0);
  json doc = parse_report(r);
  const json& result = doc["result"];
  EXPECT_EQ(result["k"], 2);
  EXPECT_EQ(result["truncated"], false);
  EXPECT_EQ(result["profile"]["a2"], 2);
  EXPECT_EQ(result["profile"]["b"], 1);
  EXPECT_EQ(result["profile"]["c"], 1);
  EXPECT_EQ(result["profile"]["d"], 1);
  EXPECT_EQ(result["classes"]["A2_2"], 2);
  EXPECT_EQ(result["assignment"], json::array({"A2_2", "A2_2"}));
  EXPECT_EQ(result["stages"]["quads"],
            json::parse("[[0,1,5,9],[2,3,6,10]]"));
  EXPECT_EQ(result["stages"]["triples"], json::parse("[[4,7,11]]"));
  EXPECT_EQ(result["stages"]["pairs"], json::parse("[[8,12]]"));
  EXPECT_EQ(result["stages"]["singles"], json::parse("[[13]]"));
  EXPECT_EQ(result["bounds"].size(), 21u);
  EXPECT_EQ(result["all_pass"], true);
}

TEST(CliClassify, ReportsAssignmentAndPeelOrder) {
  CommandResult r = run_cli("classify --family E4 --n 12 --k 2");
  ASSERT_EQ(r.exit_code, 0);
  json doc = parse_report(r);
  EXPECT_EQ(doc["result"]["assignment"], json::array({"A4_1", "A4_1"}));
  EXPECT_EQ(doc["result"]["classes"]["A4_1"], 2);
  EXPECT_EQ(doc["result"]["profile"]["a4"], 2);
}

TEST(CliAudit, PassesOnConstructionsAndGraph6Stdin) {
  CommandResult from_family = run_cli("audit --family E3 --n 11 --k 1");
  ASSERT_EQ(from_family.exit_code, 0);
  json doc = parse_report(from_family);
  EXPECT_EQ(doc["result"]["all_pass"], true);
  for (const json& bound : doc["result"]["bounds"]) {
    EXPECT_TRUE(bound.contains("name"));
    EXPECT_TRUE(bound.contains("lhs"));
    EXPECT_TRUE(bound.contains("rhs"));
    EXPECT_TRUE(bound.contains("pass"));
    EXPECT_EQ(bound["pass"], true);
  }

  CommandResult from_stdin = run_cli("audit", e2_14_2_graph6());
  EXPECT_EQ(from_stdin.exit_code, 0);
  EXPECT_EQ(parse_report(from_stdin)["result"]["all_pass"], true);
}

TEST(CliVerifyOpt, ListsAndRunsPropositions) {
  CommandResult listing = run_cli("verify-opt --list");
  ASSERT_EQ(listing.exit_code, 0);
  json ids = parse_report(listing)["result"]["props"];
  EXPECT_EQ(ids.size(), 16u);

  CommandResult run = run_cli(
      "verify-opt --prop phi1_small_k --k 3/26 --res 24 --samples 2000");
  ASSERT_EQ(run.exit_code, 0);
  json doc = parse_report(run);
  EXPECT_EQ(doc["result"]["all_pass"], true);
  ASSERT_EQ(doc["result"]["reports"].size(), 1u);
  const json& report = doc["result"]["reports"][0];
  EXPECT_EQ(report["prop"], "phi1_small_k");
  EXPECT_LE(report["max_violation"].get<double>(), 1e-6);
  EXPECT_EQ(report["pass"], true);

  // k outside the proposition's window is a usage error.
  EXPECT_EQ(run_cli("verify-opt --prop phi23_a6_above_half --k 0.01 --res 8 "
                    "--samples 100")
                .exit_code,
            2);
  EXPECT_EQ(run_cli("verify-opt --prop nonsense --k 0.1").exit_code, 2);
  EXPECT_EQ(run_cli("verify-opt").exit_code, 2);
}

TEST(CliVerifyOpt, RunsTheWholeWindowAtAPosition) {
  CommandResult r = run_cli("verify-opt --k 1/5 --res 16 --samples 1000");
  ASSERT_EQ(r.exit_code, 0);
  json doc = parse_report(r);
  EXPECT_GE(doc["result"]["reports"].size(), 3u);
  EXPECT_EQ(doc["result"]["all_pass"], true);
}

TEST(CliVerifyAppendix, ChecksBothAuxiliaryBounds) {
  CommandResult r = run_cli("verify-appendix --gamma 2 --b 1 --res 0.2");
  ASSERT_EQ(r.exit_code, 0);
  json doc = parse_report(r);
  ASSERT_EQ(doc["result"]["reports"].size(), 2u);
  EXPECT_EQ(doc["result"]["all_pass"], true);
  for (const json& report : doc["result"]["reports"]) {
    EXPECT_EQ(report["pass"], true);
  }

  EXPECT_EQ(run_cli("verify-appendix --b 1").exit_code, 2);
  EXPECT_EQ(run_cli("verify-appendix --gamma -3 --b 1").exit_code, 2);
}

TEST(CliSweep, RowsTrackTheEnvelope) {
  CommandResult r = run_cli("sweep --n 52");
  ASSERT_EQ(r.exit_code, 0);
  json doc = parse_report(r);
  const json& rows = doc["result"]["rows"];
  ASSERT_EQ(rows.size(), 13u);  // k = 0 .. 12: the k where the cap binds
  EXPECT_EQ(rows[0]["k"], 0);
  EXPECT_NEAR(rows[0]["best_density"].get<double>(), 1.0 / 3.0, 1e-3);
  for (const json& row : rows) {
    EXPECT_LE(std::abs(row["gap"].get<double>()), 3.0 / 52.0);
    EXPECT_TRUE(row.contains("k_over_n"));
    EXPECT_TRUE(row.contains("best_family"));
    EXPECT_TRUE(row.contains("xi_density"));
  }
}

TEST(CliPlumbing, ExitCodesFollowTheContract) {
  // Usage errors.
  EXPECT_EQ(run_cli("construct --family E2 --n 9 --k 2").exit_code, 2);
  EXPECT_EQ(run_cli("construct").exit_code, 2);
  EXPECT_EQ(run_cli("nosuchcommand").exit_code, 2);
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("nu --family E1 --n 13 --k 1 --r 0").exit_code, 2);
  EXPECT_EQ(run_cli("nu", "notagraph6!!").exit_code, 2);

  // Resource limits.
  ConstructionSpec big;
  big.family = Family::E1;
  big.n = 40;
  big.k = 2;
  EXPECT_EQ(run_cli("packing", to_graph6(build(big))).exit_code, 3);
  EXPECT_EQ(run_cli("ex --n 9 --k 1 --r 2").exit_code, 3);

  // Help is not an error.
  EXPECT_EQ(run_cli("--help").exit_code, 0);
  EXPECT_EQ(run_cli("--version").exit_code, 0);
}

TEST(CliPlumbing, OutputFlagWritesTheReportToAFile) {
  const std::string path = ::testing::TempDir() + "cli_nu_report.json";
  std::remove(path.c_str());
  CommandResult r =
      run_cli("nu --family E1 --n 13 --k 1 --output " + path);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  ASSERT_TRUE(in.good());
  json doc = json::parse(in, nullptr, false);
  ASSERT_FALSE(doc.is_discarded());
  EXPECT_EQ(doc["result"]["value"], 1);
  std::remove(path.c_str());
}

TEST(CliPlumbing, OutputIsByteStableAcrossRunsAndThreadCounts) {
  const std::string args = "packing --family E2 --n 14 --k 2";
  CommandResult first = run_cli(args);
  CommandResult second = run_cli(args);
  ASSERT_EQ(first.exit_code, 0);
  EXPECT_EQ(first.out, second.out);

  CommandResult one = run_cli(args + " --threads 1");
  CommandResult four = run_cli(args + " --threads 4");
  ASSERT_EQ(one.exit_code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(first.out, one.out);

  CommandResult via_env = run_cli(args, "", "TILING_THREADS=3");
  ASSERT_EQ(via_env.exit_code, 0);
  EXPECT_EQ(via_env.out, first.out);

  CommandResult sweep_a = run_cli("sweep --n 104");
  CommandResult sweep_b = run_cli("sweep --n 104 --threads 2");
  EXPECT_EQ(sweep_a.out, sweep_b.out);
}

}  // namespace
}  // namespace tiling
