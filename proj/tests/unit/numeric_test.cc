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

#include "renyi/numeric.h"

#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace renyi {
namespace {

TEST(LogSumExpTest, Basic) {
  const std::vector<double> terms{std::log(1.0), std::log(2.0), std::log(3.0)};
  EXPECT_NEAR(LogSumExp(terms), std::log(6.0), 1e-15);
  EXPECT_EQ(LogSumExp({}), -std::numeric_limits<double>::infinity());
}

TEST(LogSumExpTest, NoOverflow) {
  const std::vector<double> terms{1000, 1000};
  EXPECT_NEAR(LogSumExp(terms), 1000 + std::log(2.0), 1e-12);
  const std::vector<double> tiny{-1000, -1000 - std::log(3.0)};
  EXPECT_NEAR(LogSumExp(tiny), -1000 + std::log(4.0 / 3), 1e-12);
}

TEST(SumAscendingTest, SmallTermsSurvive) {
  std::vector<double> terms(1000, 1e-16);
  terms.push_back(1.0);
  EXPECT_NEAR(SumAscending(terms), 1.0 + 1e-13, 1e-16);
}

TEST(BinomialTest, Values) {
  EXPECT_EQ(Binomial(5, 2), 10);
  EXPECT_EQ(Binomial(10, 0), 1);
  EXPECT_EQ(Binomial(10, 10), 1);
  EXPECT_EQ(Binomial(3, 4), 0);
  EXPECT_EQ(Binomial(40, 20), 137846528820.0);
}

TEST(LogLogSlopeTest, PowerLaw) {
  std::vector<double> x, y;
  for (double k = 2; k <= 4096; k *= 2) {
    x.push_back(k);
    y.push_back(3 * std::pow(k, 0.5));
  }
  EXPECT_NEAR(LogLogSlope(x, y), 0.5, 1e-12);
}

TEST(LowerMedianTest, OddAndEven) {
  EXPECT_EQ(LowerMedian({3, 1, 2}), 2);
  EXPECT_EQ(LowerMedian({4, 1, 3, 2}), 2);
  EXPECT_EQ(LowerMedian({-std::numeric_limits<double>::infinity(), 1, 2}), 1);
}

TEST(MixSeedTest, AdjacentSeedsSpread) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 1000; ++s) seen.insert(MixSeed(s));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(MixSeed(0), 0u);
}

}  // namespace
}  // namespace renyi
