#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "g2/report.hpp"

using namespace g2;

namespace {

Report sample_report() {
  Report r;
  r.command = "crit set";
  r.parameters = {{"weight", "(3,2)(-8,-9) pw=-6"}, {"kind", "ad3"}};
  r.status = ReportStatus::Pass;
  r.columns = {"crit_set", "points"};
  r.rows = {{"[-9/2,-1/2]@Z+1/2", "5"}};
  r.counterexample_columns = {"a", "b"};
  r.counterexamples = {{"1", "2"}};
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args, const std::string& out_path) {
  std::string cmd = std::string(CLI_BIN_PATH) + " " + args + " > " + out_path;
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("json reports round trip") {
  Report r = sample_report();
  Report back = parse_report_json(emit(r, ReportFormat::Json));
  CHECK(back == r);

  Report empty;
  empty.command = "x";
  CHECK(parse_report_json(emit(empty, ReportFormat::Json)) == empty);
}

TEST_CASE("tsv emission shape") {
  std::string tsv = emit(sample_report(), ReportFormat::Tsv);
  CHECK(tsv.find("# command: crit set\n") != std::string::npos);
  CHECK(tsv.find("# status: PASS\n") != std::string::npos);
  CHECK(tsv.find("crit_set\tpoints\n") != std::string::npos);
  CHECK(tsv.find("[-9/2,-1/2]@Z+1/2\t5\n") != std::string::npos);
  CHECK(tsv.find("# counterexamples:\n") != std::string::npos);
}

TEST_CASE("golden table outputs are byte stable") {
  std::string tmp = std::string(BUILD_TMP_DIR) + "/cli_out.tmp";
  struct GoldenCase {
    const char* args;
    const char* golden;
  };
  const GoldenCase cases[] = {
      {"table weyl", "table_weyl.tsv"},
      {"table twisted --parabolic beta", "table_twisted_beta.tsv"},
      {"table twisted --parabolic alpha", "table_twisted_alpha.tsv"},
  };
  for (const GoldenCase& c : cases) {
    CAPTURE(c.args);
    REQUIRE(run_cli(c.args, tmp) == 0);
    std::string got = read_file(tmp);
    std::string want = read_file(std::string(GOLDEN_DIR) + "/" + c.golden);
    CHECK(got == want);
    CHECK(!want.empty());
  }
}

TEST_CASE("cli exit codes") {
  std::string tmp = std::string(BUILD_TMP_DIR) + "/cli_out.tmp";
  CHECK(run_cli("table weyl", tmp) == 0);
  CHECK(run_cli("arch verify --weight 3,2,-8,-9 --parabolic beta", tmp) == 0);
  CHECK(run_cli("crit poe --weight 0,0,0,0 --parabolic beta", tmp) == 1);
  CHECK(run_cli("bogus subcommand 2>/dev/null", tmp) == 2);
  CHECK(run_cli("crit poe --weight 1,2,3 --parabolic beta 2>/dev/null", tmp) ==
        2);
  CHECK(run_cli("crit poe --weight 0,1,0,0 --parabolic beta 2>/dev/null",
                tmp) == 2);  // non-dominant pair
  CHECK(run_cli("crit poe --weight 1x,2,3,4 --parabolic beta 2>/dev/null",
                tmp) == 2);  // trailing junk in a numeric field
  // degenerate archimedean arguments report as DEGENERATE with exit 1
  CHECK(run_cli("arch ratio --weight 3,1,3,1 --parabolic beta", tmp) == 1);
  CHECK(read_file(tmp).find("# status: DEGENERATE") != std::string::npos);
}

TEST_CASE("cli verification subcommands pass") {
  std::string tmp = std::string(BUILD_TMP_DIR) + "/cli_out.tmp";
  CHECK(run_cli("verify tables", tmp) == 0);
  CHECK(run_cli("verify comblemma --parabolic alpha --pw -8..2 --window 14",
                tmp) == 0);
  CHECK(run_cli("verify coverage --parabolic beta --pw -7,3 --window 25",
                tmp) == 0);
  CHECK(run_cli("verify cocycle --parabolic beta --count 10 --seed 5", tmp) ==
        0);
  CHECK(run_cli("verify involution --parabolic alpha --count 5", tmp) == 0);
  CHECK(run_cli("crit twists --weight 3,2,-8,-9 --parabolic beta", tmp) == 0);
  std::string twists = read_file(tmp);
  CHECK(twists.find("-1\t2\t4") != std::string::npos);
}

TEST_CASE("regions emit is deterministic") {
  std::string a = std::string(BUILD_TMP_DIR) + "/regions_a.tmp";
  std::string b = std::string(BUILD_TMP_DIR) + "/regions_b.tmp";
  REQUIRE(run_cli("regions emit --parabolic beta --pw -6 --which twisted "
                  "--points --window 15",
                  a) == 0);
  REQUIRE(run_cli("regions emit --parabolic beta --pw -6 --which twisted "
                  "--points --window 15",
                  b) == 0);
  std::string out = read_file(a);
  CHECK(out == read_file(b));
  CHECK(out.find("(I)\t") != std::string::npos);
}

TEST_CASE("json output parses back for a real command") {
  std::string tmp = std::string(BUILD_TMP_DIR) + "/cli_out.tmp";
  REQUIRE(run_cli("--format json crit product --weight 3,2,-8,-9 "
                  "--parabolic beta",
                  tmp) == 0);
  Report r = parse_report_json(read_file(tmp));
  CHECK(r.command == "crit product");
  CHECK(r.status == ReportStatus::Pass);
  bool found = false;
  for (const auto& row : r.rows)
    if (row.size() == 2 && row[0] == "product")
      found = row[1] == "[-9/2,-1/2]@Z+1/2";
  CHECK(found);
}
