#include "cli_runner.hpp"
#include "fwsa/report.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

using namespace fwsa;
using fwsa::testing::run_cli;

namespace {

Json payload_of(const std::string& args) {
  const auto r = run_cli(args);
  return Json::parse(r.out).at("payload");
}

}  // namespace

TEST(Cli, GencertExitCodes) {
  const auto pass = run_cli("gencert --group Z2 --module v0bar --claim 1 --max-size 5");
  EXPECT_EQ(pass.code, 0);
  EXPECT_EQ(Json::parse(pass.out)["payload"]["result"], "PASS");
  const auto fail = run_cli("gencert --group Z2 --module v0bar --claim 0 --max-size 3");
  EXPECT_EQ(fail.code, 1);
  const auto j = Json::parse(fail.out);
  EXPECT_EQ(j["payload"]["result"], "FAIL");
  EXPECT_FALSE(j["payload"]["failing"].empty());
}

TEST(Cli, HomCounts) {
  EXPECT_EQ(payload_of("hom --group Z2 --src 1,1,0 --dst 0,0")["count"], 2);
  EXPECT_EQ(payload_of("hom --group Z2 --src 1,1,0 --dst 0,0 --tilde")["count"], 16);
  EXPECT_EQ(payload_of("hom --group Z2 --src 1,1,0 --dst 0,0 --list")["morphisms"].size(), 2u);
}

TEST(Cli, DimAndAct) {
  EXPECT_EQ(payload_of("dim --group Z2 --module v0bar --object 0,0,0")["dim"], 4);
  const auto a = payload_of("act --group Z2 --module v0tilde --src 0,0,0,0 --dst 0,0,0 --map 0,1,2,2 --pointing 0,0,1,0");
  EXPECT_EQ(a["rows"], 8);
  EXPECT_EQ(a["cols"], 4);
  EXPECT_EQ(a["entries"].size(), 4u);
}

TEST(Cli, BoundsCsv) {
  const auto r = run_cli("bounds --imax 20 --gmax 20 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("i,g,f,bound\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 21 * 21);
}

TEST(Cli, FormatFromEnvironment) {
  const auto r = run_cli("objects --group Z2 --size 2", "2>/dev/null", "FWSA_FORMAT=csv");
  EXPECT_EQ(r.out, "labels,multidegree\n\"0,0\",\"2,0\"\n\"0,1\",\"1,1\"\n\"1,1\",\"0,2\"\n");
  EXPECT_EQ(run_cli("objects --group Z2 --size 1", "2>/dev/null", "FWSA_FORMAT=xml").code, 2);
}

TEST(Cli, UsageErrorsNameTheField) {
  struct Case {
    const char* args;
    const char* field;
  };
  for (const auto& c : {Case{"dim --group Z2 --module nope --object 1", "--module"},
                        Case{"dim --group Z2 --module v0bar --object 1,x", "--object"},
                        Case{"dim --group Q7 --module v0bar --object 1", "--group"},
                        Case{"dim --group Z2 --module ppx:1:fws --object 1 --format csv", "--format"},
                        Case{"act --group Z2 --module ppx:1:fws --src 1 --dst 1 --map 0 --pointing 1", "--map"},
                        Case{"act --group Z2 --module v0bar --src 1,1 --dst 0,0 --map 0,1", "--map"},
                        Case{"restrict-witness --group Z2 --object 1 --mode up --max-size 2", "--mode"},
                        Case{"gencert --group Z2 --module v0bar --claim 1", "--max-size"},
                        Case{"frobnicate", "frobnicate"}}) {
    const auto r = run_cli(c.args, "2>&1 >/dev/null");
    EXPECT_EQ(r.code, 2) << c.args;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1) << r.out;
    EXPECT_NE(r.out.find(c.field), std::string::npos) << r.out;
  }
}

TEST(Cli, HilbertFit) {
  const auto r = run_cli("hilbert --group 1 --module ppx:0,0:fs --max-size 12 --fit --jmax 2");
  EXPECT_EQ(r.code, 0);
  const auto fit = Json::parse(r.out)["payload"]["fit"];
  EXPECT_TRUE(fit["found"].get<bool>());
  EXPECT_EQ(fit["numerator"]["2"], "2");
  const auto none = run_cli("hilbert --group 1 --module ppx:0,0:fs --max-size 12 --fit --jmax 1");
  EXPECT_EQ(none.code, 1);
  EXPECT_FALSE(Json::parse(none.out)["payload"]["fit"]["found"].get<bool>());
}

TEST(Cli, ReportRoundTrip) {
  const auto r = run_cli("profile --group Z2 --module ppx:0,1 --max-size 3");
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  const RunConfig c = run_config_from_json(j.at("config"));
  EXPECT_EQ(c.command, "profile");
  EXPECT_EQ(c.module, "ppx:0,1");
  EXPECT_EQ(c.max_size, 3u);
  EXPECT_EQ(to_json(c), j.at("config"));
  EXPECT_EQ(run_config_from_json(to_json(c)), c);
  EXPECT_EQ(Json::parse(j.dump()), j);
  EXPECT_EQ(j["envelope"]["tool"], "fwsa");
}

TEST(Cli, OutputFileAndDeterminism) {
  const std::string path = ::testing::TempDir() + "fwsa_report.json";
  std::remove(path.c_str());
  const auto r = run_cli("factor-check --group Z2 --max-size 3 --output " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const auto j = Json::parse(f);
  EXPECT_EQ(j["payload"]["result"], "PASS");
  EXPECT_EQ(payload_of("factor-check --group Z2 --max-size 3").dump(), j["payload"].dump());
}
