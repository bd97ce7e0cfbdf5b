// Copyright 2026 The linspp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the command-line binary and checks exit codes and output.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
};

CliRun Cli(const std::string& args) {
  const std::string cmd =
      std::string(LINSPP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string Fixture(const std::string& name) {
  return std::string(LINSPP_FIXTURE_DIR) + "/" + name;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("linspp_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, CheckPlantedFixture) {
  const CliRun r = Cli("check " + Fixture("double_diamond_nonlin.lin"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("NOT_LINEARIZABLE"), std::string::npos);
  EXPECT_NE(r.out.find("path:"), std::string::npos);
}

TEST_F(CliTest, LinearizeThenVerify) {
  for (const char* name : {"diamond.lin", "layered_lin.lin", "random_lin.lin",
                           "single_arc.lin"}) {
    const std::string cost = Tmp(std::string(name) + ".cost");
    ASSERT_EQ(Cli("linearize " + Fixture(name) + " --out " + cost).code, 0)
        << name;
    const CliRun v = Cli("verify " + Fixture(name) + " " + cost);
    EXPECT_EQ(v.code, 0) << name;
    EXPECT_EQ(v.out, "OK\n");
  }
}

TEST_F(CliTest, VerifyMismatch) {
  const std::string cost = Tmp("bad.cost");
  std::ofstream(cost) << "c 1 100\n";
  EXPECT_EQ(Cli("verify " + Fixture("diamond.lin") + " " + cost).code, 1);
  EXPECT_EQ(Cli("verify " + Fixture("layered_lin.lin") + " " + cost +
                " --max-paths 2")
                .code,
            2);
}

TEST_F(CliTest, OracleAgreesWithCheckOnFixtures) {
  for (const char* name : {"diamond.lin", "double_diamond_nonlin.lin",
                           "layered_lin.lin", "random_lin.lin",
                           "grid_nonlin.lin", "single_arc.lin"}) {
    const CliRun o = Cli("oracle " + Fixture(name));
    EXPECT_EQ(o.code, 0) << name << "\n" << o.out;
    EXPECT_NE(o.out.find("AGREE"), std::string::npos);
    const CliRun c = Cli("check " + Fixture(name));
    const bool yes = o.out.find("lp: LINEARIZABLE") != std::string::npos;
    EXPECT_EQ(c.code, yes ? 0 : 1) << name;
  }
}

TEST_F(CliTest, Apec) {
  const CliRun r = Cli("apec " + Fixture("single_arc.lin"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "EQUAL beta=5\n");
  const CliRun u = Cli("apec " + Fixture("double_diamond_nonlin.lin"));
  EXPECT_EQ(u.code, 1);
  EXPECT_EQ(u.out.rfind("UNEQUAL\n", 0), 0u);
}

TEST_F(CliTest, Basis) {
  const std::string out = Tmp("basis.txt");
  const CliRun r = Cli("basis " + Fixture("double_diamond_nonlin.lin") + " --out " + out);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "dimension 36 of 37\n");
  std::ifstream in(out);
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 36);
}

TEST_F(CliTest, GenIsDeterministic) {
  const std::string a = Tmp("a.lin"), b = Tmp("b.lin");
  const std::string args =
      "gen --family layered --mode non-linearizable -d 2 -m 30 --seed 9 --out ";
  ASSERT_EQ(Cli(args + a).code, 0);
  ASSERT_EQ(Cli(args + b).code, 0);
  std::stringstream sa, sb;
  sa << std::ifstream(a).rdbuf();
  sb << std::ifstream(b).rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_NE(sa.str().find("# planted arc"), std::string::npos);
  EXPECT_EQ(Cli("check " + a).code, 1);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Cli("frobnicate").code, 64);
  EXPECT_EQ(Cli("check").code, 64);
  EXPECT_EQ(Cli("check " + Tmp("missing.lin")).code, 74);
  EXPECT_EQ(Cli("check " + Fixture("repeated_key.lin")).code, 2);
  EXPECT_EQ(Cli("gen --family nope").code, 2);
  EXPECT_EQ(Cli("--jobs 3 check " + Fixture("diamond.lin")).code, 0);
}

}  // namespace
