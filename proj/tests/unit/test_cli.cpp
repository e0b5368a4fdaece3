// Copyright 2026 The nrcg-engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(NRCG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

TEST(Cli, TraceCsv) {
  const RunResult r = run_cli("trace --iterations 2");
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4U);
  EXPECT_EQ(ls[0], "iteration,dU_A,dU_B,dU_sys,work,regime,eta");
  EXPECT_EQ(ls[1].rfind("0,0,0,0,0,", 0), 0U);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
  EXPECT_EQ(r.out.back(), '\n');
}

TEST(Cli, GridScanJsonEchoesResolvedConfig) {
  const RunResult r =
      run_cli("grid-scan --case 2 --qubits 2 --grid-theta 3 --grid-phi 4 --kt 10 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["meta"]["command"], "grid-scan");
  EXPECT_EQ(j["meta"]["config"]["protocol"]["case"], 2);
  EXPECT_EQ(j["meta"]["config"]["grid"]["phi"]["count"], 4);
  EXPECT_EQ(j["meta"]["config"]["model"]["kt"][0], 10.0);
  ASSERT_EQ(j["records"].size(), 12U);
  EXPECT_TRUE(j["records"][0].contains("max_work"));
}

TEST(Cli, CommandLineOverridesConfigFile) {
  const std::string path = ::testing::TempDir() + "nrcg_cli_cfg.json";
  {
    std::ofstream f(path);
    f << R"({"protocol": {"case": 2}, "run": {"iterations": 5}, "output": {"format": "json"}})";
  }
  const RunResult r = run_cli("trace --config " + path + " --iterations 3");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["meta"]["config"]["protocol"]["case"], 2);  // from the file
  EXPECT_EQ(j["meta"]["config"]["run"]["iterations"], 3);  // flag wins
  EXPECT_EQ(j["records"].size(), 4U);
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "nrcg_cli_out.csv";
  const RunResult r = run_cli("cnot-compare --out " + path);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, "iteration,cycle,work_nrcg,work_cnot");
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(run_cli("trace --case 3").code, 2);
  EXPECT_EQ(run_cli("trace --qubits 4").code, 2);
  EXPECT_EQ(run_cli("trace --format xml").code, 2);
  EXPECT_EQ(run_cli("trace --theta 5").code, 2);
  EXPECT_EQ(run_cli("trace --kt -1").code, 2);
  EXPECT_EQ(run_cli("grid-scan --kt 1,2").code, 2);
  EXPECT_EQ(run_cli("trace --gate-sequence 'B>A'").code, 2);
  EXPECT_EQ(run_cli("trace --gate-sequence 'B>A' --allow-custom --iterations 1").code, 0);
  EXPECT_EQ(run_cli("trace --config /nonexistent.json").code, 2);
  EXPECT_EQ(run_cli("trace --no-such-flag").code, 2);
  EXPECT_EQ(run_cli("").code, 2);
}

TEST(Cli, NumericalProblemsExitThree) {
  // Thermal work vanishes at this temperature, so the relative change is undefined.
  EXPECT_EQ(run_cli("thermal-baseline --kt 0.001 --grid-theta 5 --grid-phi 5").code, 3);
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(run_cli("--help").code, 0);
  EXPECT_EQ(run_cli("pcc-report --help").code, 0);
}

TEST(Cli, PccReportCsv) {
  const RunResult r = run_cli("pcc-report --iterations 20");
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  EXPECT_EQ(ls[0], "target,measure,bipartition,pcc,note");
  EXPECT_EQ(ls.size(), 15U);
}

}  // namespace
