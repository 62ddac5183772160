// Copyright 2026 The Renyi Estimation Authors
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

#include "cli/commands.h"

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "renyi/distribution.h"
#include "renyi/divergence.h"
#include "renyi/histogram.h"
#include "renyi/serialization.h"

namespace renyi::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "renyi");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("renyi_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& body) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << body;
    return path.string();
  }

  std::string Uniform(std::size_t k) {
    std::string body = "# uniform reference\n";
    for (std::size_t i = 0; i < k; ++i) body += std::to_string(1.0 / k) + "\n";
    return Write("u" + std::to_string(k) + ".txt", body);
  }

  fs::path dir_;
};

TEST_F(CliTest, EstimateFromSamples) {
  const std::string q = Write("q.txt", "0.5\n0.5\n");
  const std::string s = Write("s.txt", "0\n0\n\n0\n");
  const Result r = RunCli({"estimate", "--q", q, "--samples", s,
                           "--normalization", "poissonized"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("estimate_bits").get<double>(), RoundSignificant(std::log2(4.0 / 3)));
  EXPECT_EQ(j.at("method"), "corrected");
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(j.at("alpha"), 2.0);
}


TEST_F(CliTest, EstimateUndefinedExitsTwo) {
  const std::string q = Write("q.txt", "0.5\n0.5\n");
  const std::string s = Write("s.txt", "0\n1\n");
  const Result r = RunCli({"estimate", "--q", q, "--samples", s});
  EXPECT_EQ(r.code, kExitUndefined);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("every symbol count is below alpha"), std::string::npos);
}

TEST_F(CliTest, EstimateInputErrors) {
  const std::string q = Write("q.txt", "0.5\n0.5\n");
  const std::string bad_q = Write("bad.txt", "0.5\nabc\n");
  const std::string s = Write("s.txt", "0\n1\n1\n");
  const std::string bad_s = Write("bad_s.txt", "0\n2\n");
  EXPECT_EQ(RunCli({"estimate", "--q", bad_q, "--samples", s}).code,
            kExitInputError);
  EXPECT_EQ(RunCli({"estimate", "--q", q, "--samples", bad_s}).code,
            kExitInputError);
  EXPECT_EQ(RunCli({"estimate", "--q", q, "--samples", "/no/such/file"}).code,
            kExitInputError);
  EXPECT_EQ(RunCli({"estimate", "--q", q}).code, kExitInputError);
  EXPECT_EQ(RunCli({"estimate", "--q", q, "--p-family", "uniform", "--n", "10"})
                .code,
            kExitInputError);  // no seed
  EXPECT_EQ(RunCli({"estimate", "--q", q, "--samples", s, "--alpha", "2.5"}).code,
            kExitInputError);
  EXPECT_EQ(RunCli({"estimate", "--q", q, "--samples", s, "--bogus"}).code,
            kExitInputError);
  EXPECT_EQ(RunCli({}).code, kExitInputError);
}

TEST_F(CliTest, EstimateSelfDivergenceAndDeterminism) {
  const std::string q = Uniform(32);
  const std::vector<std::string> args{"estimate", "--q",    q,     "--p-family",
                                      "uniform",  "--n",    "100000",
                                      "--seed",   "7"};
  const Result a = RunCli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_LT(std::fabs(nlohmann::json::parse(a.out).at("estimate_bits").get<double>()),
            0.05);
  EXPECT_EQ(RunCli(args).out, a.out);
  std::vector<std::string> other = args;
  other.back() = "8";
  EXPECT_NE(RunCli(other).out, a.out);
}

TEST_F(CliTest, EstimatePlugin) {
  const std::string q = Write("q.txt", "0.5\n0.5\n");
  const std::string s = Write("s.txt", "0\n0\n0\n");
  const Result r = RunCli({"estimate", "--q", q, "--samples", s, "--method",
                           "plugin", "--alpha", "2.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("method"), "plugin");
  EXPECT_NEAR(j.at("estimate_bits").get<double>(), 1.0, 1e-12);
}

TEST_F(CliTest, LowerBoundWitnessAndCheck) {
  const Result r = RunCli({"lowerbound", "--q-family", "uniform", "--k", "256",
                           "--alpha", "2", "--check", "--seed", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("check_passed").get<bool>());
  EXPECT_GT(std::max(j.at("check_failure_p").get<double>(),
                     j.at("check_failure_p_prime").get<double>()),
            1.0 / 3);
  // The gap field recomputes from the emitted distributions.
  const WitnessPair w = WitnessPairFromJson(r.out);
  const DivergenceOrder two(2);
  const double gap = std::fabs(renyi_divergence(w.p, w.q, two) -
                               renyi_divergence(w.p_prime, w.q, two));
  EXPECT_NEAR(w.divergence_gap, gap, 1e-9);
  EXPECT_GE(w.implied_n, std::sqrt(256.0 / 8));
}

TEST_F(CliTest, LowerBoundFromFileAndSpike) {
  const Result r = RunCli({"lowerbound", "--q", Uniform(4)});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out).at("implied_n").get<double>(),
              std::sqrt(2.0 / 3), 1e-11);
  const Result s = RunCli({"lowerbound", "--spike", "4", "--k", "64"});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  EXPECT_EQ(nlohmann::json::parse(s.out).at("d").get<double>(), 2);
  EXPECT_EQ(RunCli({"lowerbound", "--spike", "0.1", "--k", "4"}).code,
            kExitInputError);
  EXPECT_EQ(RunCli({"lowerbound", "--q-family", "uniform", "--k", "8", "--check"})
                .code,
            kExitInputError);
}

TEST_F(CliTest, BoundsReport) {
  const Result r = RunCli({"bounds", "--p", Write("p.txt", "0.25\n0.75\n"),
                           "--q-family", "uniform", "--k", "2", "--n", "10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"theorem1_lhs", "sufficient_n", "c1", "c2", "lower_n"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST_F(CliTest, VerifyPassesAndCatchesMutation) {
  const Result ok = RunCli({"verify"});
  EXPECT_EQ(ok.code, kExitOk) << ok.out;
  std::istringstream lines(ok.out);
  std::string line;
  int checks = 0;
  while (std::getline(lines, line)) {
    if (line.size() > 3 && line.substr(line.size() - 2) == "ok") ++checks;
  }
  EXPECT_GE(checks, 12);
  const Result bad = RunCli({"verify", "--mutate-normalization"});
  EXPECT_EQ(bad.code, kExitInputError);
  EXPECT_NE(bad.out.find("offending instance"), std::string::npos);
}

TEST_F(CliTest, SweepConfigFileWithFlagOverride) {
  const std::string config = Write("sweep.ini",
                                   "# archived sweep\n"
                                   "[sweep]\n"
                                   "k-min = 16\n"
                                   "k-max = 32\n"
                                   "n-min = 8\n"
                                   "n-max = 32\n"
                                   "n-per-octave = 1\n"
                                   "trials = 20\n"
                                   "seed = 11\n");
  const Result a = RunCli({"sweep", "--config", config});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  std::istringstream in(a.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 1u + 2 * 3);
  EXPECT_EQ(rows[1].rfind("16,8,20,", 0), 0u);

  const Result b = RunCli({"sweep", "--config", config, "--trials", "5"});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  EXPECT_NE(b.out.find("\n16,8,5,"), std::string::npos);
  EXPECT_EQ(RunCli({"sweep", "--config", config}).out, a.out);
}

TEST_F(CliTest, SweepToFileAndSingleTrial) {
  const std::string out = (dir_ / "rows.csv").string();
  const Result r = RunCli({"sweep", "--k-min", "8", "--k-max", "8", "--n-min",
                           "4", "--n-max", "4", "--trials", "1", "--seed", "1",
                           "--output", out});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header.substr(0, 2), "k,");
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), 7);
}

TEST_F(CliTest, SweepRequiresSeed) {
  const Result r = RunCli({"sweep", "--trials", "5"});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("seed"), std::string::npos);
}

TEST_F(CliTest, MonitorStream) {
  const std::string q = Uniform(4);
  std::string stream;
  for (int i = 0; i < 250; ++i) stream += std::to_string(i % 4) + "\n";
  stream.insert(0, "x\n9\n");
  const Result r =
      RunCli({"monitor", "--reference", q, "--window", "100", "--stride", "100"},
             stream);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::vector<nlohmann::json> records;
  while (std::getline(in, line)) records.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(records.size(), 2u);  // floor((250 - 100) / 100) + 1
  EXPECT_EQ(records[0].at("position"), 100);
  EXPECT_EQ(records[0].at("invalid_symbols"), 2);
  EXPECT_EQ(records[1].at("invalid_symbols"), 0);
  EXPECT_FALSE(records[0].at("alarm").get<bool>());

  const std::string file = Write("stream.txt", stream);
  EXPECT_EQ(RunCli({"monitor", "--reference", q, "--window", "100", "--stride",
                    "100", "--input", file})
                .out,
            r.out);
}

TEST_F(CliTest, MonitorUnreadableReference) {
  EXPECT_EQ(RunCli({"monitor", "--reference", "/no/such/q.txt"}, "0\n").code,
            kExitInputError);
  EXPECT_EQ(RunCli({"monitor", "--reference", Uniform(4), "--window", "10",
                    "--stride", "20"},
                   "0\n")
                .code,
            kExitInputError);
}

TEST_F(CliTest, HelpExitsCleanly) {
  const Result r = RunCli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("estimate"), std::string::npos);
  EXPECT_EQ(r.out.find("mutate"), std::string::npos);
}

}  // namespace
}  // namespace renyi::cli
