/*
 * Copyright 2026 The udnsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli_main.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result cli(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"udnsim_cli"};
  storage.insert(storage.end(), args);
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  std::ostringstream out, err;
  const int status = udnsim::cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("udnsim_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(CliTest, ValidateDefaultsEchoesConfig) {
  const auto r = cli({"validate"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("isd_m = 40\n"), std::string::npos);
  EXPECT_NE(r.out.find("n_subframes = 100\n"), std::string::npos);
}

TEST_F(CliTest, ValidateRejectsBadValues) {
  const auto r = cli({"validate", "--set", "isd_m=-5"});
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("isd_m"), std::string::npos);
  EXPECT_NE(cli({"validate", "--set", "bogus=1"}).status, 0);
}

TEST_F(CliTest, ValidateReadsConfigFile) {
  const auto cfg = dir_ / "s.cfg";
  std::ofstream(cfg) << "isd_m = 150\nscheduler = rr4\n";
  const auto r = cli({"validate", "--config", cfg.string(), "--set", "n_ue=7"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("isd_m = 150\n"), std::string::npos);
  EXPECT_NE(r.out.find("scheduler = rr4\n"), std::string::npos);
  EXPECT_NE(r.out.find("n_ue = 7\n"), std::string::npos);
}

TEST_F(CliTest, RunTwiceIsByteIdentical) {
  const auto a = dir_ / "a";
  const auto b = dir_ / "b";
  ASSERT_EQ(cli({"run", "--seed", "42", "--drops", "8", "--set", "n_subframes=10", "--out", a.string(),
                 "--workers", "1"})
                .status,
            0);
  ASSERT_EQ(cli({"run", "--seed", "42", "--drops", "8", "--set", "n_subframes=10", "--out", b.string(),
                 "--workers", "3"})
                .status,
            0);
  for (const char* f : {"campaign.csv", "summary.csv", "cdf_ue_tput_bps.csv", "cdf_sinr_db.csv", "config.txt"}) {
    ASSERT_TRUE(fs::exists(a / f)) << f;
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  }
}

TEST_F(CliTest, ReportReproducesSummary) {
  const auto a = dir_ / "a";
  ASSERT_EQ(cli({"run", "--drops", "5", "--set", "n_subframes=10", "--out", a.string()}).status, 0);
  const auto summary = slurp(a / "summary.csv");
  const auto r = dir_ / "r";
  ASSERT_EQ(cli({"report", (a / "campaign.csv").string(), "--out", r.string()}).status, 0);
  EXPECT_EQ(slurp(r / "summary.csv"), summary);
  EXPECT_EQ(slurp(r / "cdf_ue_tput_bps.csv"), slurp(a / "cdf_ue_tput_bps.csv"));
}

TEST_F(CliTest, RunDumpsLayoutAndTrace) {
  const auto a = dir_ / "a";
  ASSERT_EQ(cli({"run", "--drops", "2", "--set", "n_subframes=4", "--out", a.string(), "--dump-layout", "1",
                 "--trace-drop", "0"})
                .status,
            0);
  EXPECT_TRUE(fs::exists(a / "layout.csv"));
  EXPECT_TRUE(fs::exists(a / "links.csv"));
  EXPECT_TRUE(fs::exists(a / "trace.csv"));
}

TEST_F(CliTest, AxisSweepWritesOneSummaryRowPerValue) {
  const auto a = dir_ / "a";
  ASSERT_EQ(cli({"sweep", "--axis", "scheduler", "--values", "pf,rr4", "--drops", "3", "--set", "n_subframes=5",
                 "--out", a.string()})
                .status,
            0);
  const auto s = slurp(a / "summary.csv");
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 3);
  EXPECT_TRUE(fs::exists(a / "cdf_ue_tput_bps_isd40_tiers1_ue4_rr4_rician.csv"));
}

TEST_F(CliTest, PresetSweepWritesGainTable) {
  const auto a = dir_ / "a";
  ASSERT_EQ(cli({"sweep", "--preset", "fig7", "--drops", "2", "--set", "n_subframes=3", "--out", a.string()})
                .status,
            0);
  const auto g = slurp(a / "gain_table.csv");
  EXPECT_EQ(std::count(g.begin(), g.end(), '\n'), 1 + 5);
  EXPECT_NE(g.find("p05_ue_tput_bps"), std::string::npos);

  const auto r = dir_ / "r";
  ASSERT_EQ(cli({"report", (a / "campaign.csv").string(), "--preset", "fig7", "--out", r.string()}).status, 0);
  EXPECT_EQ(slurp(r / "gain_table.csv"), g);
  EXPECT_EQ(slurp(r / "summary.csv"), slurp(a / "summary.csv"));
}

TEST_F(CliTest, SweepArgumentErrors) {
  EXPECT_NE(cli({"sweep"}).status, 0);
  EXPECT_NE(cli({"sweep", "--axis", "tx_power_dbm", "--values", "20"}).status, 0);
  EXPECT_NE(cli({"sweep", "--preset", "fig99"}).status, 0);
  EXPECT_NE(cli({"sweep", "--preset", "fig3", "--axis", "n_ue", "--values", "1"}).status, 0);
  EXPECT_EQ(cli({"sweep", "--list"}).status, 0);
}

TEST_F(CliTest, OutputDirectoryFromEnvironment) {
  const auto env = dir_ / "env";
  ::setenv(udnsim::cli::kOutDirEnv, env.string().c_str(), 1);
  const auto r = cli({"run", "--drops", "1", "--set", "n_subframes=2"});
  ::unsetenv(udnsim::cli::kOutDirEnv);
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(fs::exists(env / "summary.csv"));
}

TEST_F(CliTest, UnknownSubcommandAndMissingInput) {
  EXPECT_NE(cli({"explode"}).status, 0);
  EXPECT_NE(cli({}).status, 0);
  EXPECT_NE(cli({"report", (dir_ / "missing.csv").string()}).status, 0);
}

}  // namespace
