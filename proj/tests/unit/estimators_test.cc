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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "renyi/distribution.h"
#include "renyi/divergence.h"
#include "renyi/error.h"
#include "renyi/estimators.h"
#include "renyi/histogram.h"
#include "test_util.h"

namespace renyi {
namespace {

using test_util::CodeOf;

EstimatorConfig Corrected(unsigned a, Normalization norm = Normalization::kExact) {
  return EstimatorConfig(Method::kCorrected, norm, DivergenceOrder(a));
}

EstimatorConfig Plugin(double a) {
  return EstimatorConfig(Method::kPlugin, Normalization::kExact,
                         DivergenceOrder(a));
}

TEST(FallingPowerTest, Examples) {
  EXPECT_EQ(falling_power(3, 2), 6u);
  EXPECT_EQ(falling_power(1, 2), 0u);
  EXPECT_EQ(falling_power(5, 3), 60u);
  EXPECT_EQ(falling_power(0, 1), 0u);
  for (std::uint64_t m = 0; m < 50; ++m) {
    EXPECT_EQ(falling_power(m, 1), m);
    for (unsigned a = unsigned(m) + 1; a < 60; a += 7) {
      EXPECT_EQ(falling_power(m, a), 0u);
    }
  }
  EXPECT_THROW(falling_power(1u << 30, 4), std::overflow_error);
  EXPECT_EQ(falling_power_real(5, 3), 60);
  EXPECT_EQ(falling_power_real(2, 3), 0);
}

TEST(EstimatorConfigTest, Validation) {
  EXPECT_EQ(CodeOf([] { Corrected(1); }), ErrorCode::kInvalidOrder);
  EXPECT_EQ(CodeOf([] {
              EstimatorConfig(Method::kCorrected, Normalization::kExact,
                              DivergenceOrder(2.5));
            }),
            ErrorCode::kNonIntegerOrder);
  EXPECT_NO_THROW(Plugin(2.5));
  EXPECT_TRUE(Corrected(2, Normalization::kPoissonized).poissonized());
  EXPECT_FALSE(Corrected(2).poissonized());
  EXPECT_EQ(ParseMethod(MethodName(Method::kPlugin)), Method::kPlugin);
  EXPECT_EQ(ParseNormalization("poissonized"), Normalization::kPoissonized);
  EXPECT_EQ(CodeOf([] { ParseMethod("magic"); }), ErrorCode::kParseError);
}

TEST(EstimatePowerSumTest, HandExamples) {
  const Histogram h({3, 0});
  const Distribution q({0.5, 0.5});
  EXPECT_DOUBLE_EQ(
      estimate_power_sum(h, q, Corrected(2, Normalization::kPoissonized)),
      4.0 / 3);
  EXPECT_DOUBLE_EQ(estimate_power_sum(h, q, Plugin(2)), 2.0);
  // Exact normalization: 6 / 3^(2) * 2 = 2.
  EXPECT_DOUBLE_EQ(estimate_power_sum(h, q, Corrected(2)), 2.0);
  const DivergenceEstimate d =
      estimate_divergence(h, q, Corrected(2, Normalization::kPoissonized));
  ASSERT_TRUE(d.defined());
  EXPECT_NEAR(*d.bits, std::log2(4.0 / 3), 1e-15);
  EXPECT_NEAR(*d.bits, 0.41504, 1e-5);
}

TEST(EstimatePowerSumTest, PoissonizedUsesNominalSize) {
  const Histogram h({3, 1}, 5.0);
  const Distribution q({0.5, 0.5});
  EXPECT_DOUBLE_EQ(
      estimate_power_sum(h, q, Corrected(2, Normalization::kPoissonized)),
      6.0 * 2 / 25);
}

TEST(EstimatePowerSumTest, Errors) {
  const Distribution q({0.5, 0.5});
  EXPECT_EQ(CodeOf([&] { estimate_power_sum(Histogram({0, 0}), q, Corrected(2)); }),
            ErrorCode::kInvalidCount);
  EXPECT_EQ(CodeOf([&] { estimate_power_sum(Histogram({0, 0}), q, Plugin(2)); }),
            ErrorCode::kInvalidCount);
  EXPECT_EQ(
      CodeOf([&] { estimate_power_sum(Histogram({1, 1, 1}), q, Corrected(2)); }),
      ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([&] {
              estimate_power_sum(Histogram({1, 1}), Distribution({1, 0}),
                                 Corrected(2));
            }),
            ErrorCode::kZeroReferenceMass);
}

TEST(EstimateDivergenceTest, AllCountsBelowOrderIsUndefined) {
  const Distribution q = uniform_distribution(4);
  for (unsigned a : {2u, 3u}) {
    for (auto norm : {Normalization::kExact, Normalization::kPoissonized}) {
      const DivergenceEstimate e =
          estimate_divergence(Histogram({1, 1, 0, 1}), q, Corrected(a, norm));
      EXPECT_FALSE(e.defined());
      EXPECT_EQ(e.power_sum, 0);
    }
  }
  EXPECT_TRUE(estimate_divergence(Histogram({1, 1, 0, 1}), q, Plugin(2)).defined());
}

TEST(EstimateDivergenceTest, SelfDivergenceLargeN) {
  const Distribution q = uniform_distribution(16);
  const Sampler sampler(q);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DivergenceEstimate e =
        estimate_divergence(sampler.Draw(100000, seed), q, Corrected(2));
    ASSERT_TRUE(e.defined());
    EXPECT_LT(std::fabs(*e.bits), 0.01);
  }
}

TEST(EstimatePowerSumTest, TinyReferenceFinite) {
  std::vector<double> qv(3, 0.5);
  qv[0] = 1e-200;
  qv[2] = 0.5 - 1e-200;
  const Distribution q(qv);
  const double m = estimate_power_sum(Histogram({2, 0, 0}), q, Corrected(2));
  // 2 * (1e-200)^-1 / 2 with n = 2.
  EXPECT_NEAR(m / 1e200, 1, 1e-12);
}

// Exact expectation over all k^n ordered sequences, computed without the
// library's oracle.
TEST(UnbiasednessTest, ExactNormalizationBySequenceEnumeration) {
  std::mt19937_64 rng(17);
  for (std::size_t k : {2u, 3u}) {
    for (unsigned n : {2u, 3u, 4u, 6u}) {
      for (unsigned a : {2u, 3u}) {
        for (int rep = 0; rep < 3; ++rep) {
          const Distribution p = test_util::RandomDistribution(k, 0.0, rng);
          const Distribution q = test_util::RandomDistribution(k, 0.1, rng);
          const EstimatorConfig config = Corrected(a);
          const double mean =
              test_util::SequenceMoments(p, n, [&](const Histogram& h) {
                return estimate_power_sum(h, q, config);
              }).mean;
          const double target = n >= a ? test_util::DirectPowerSum(p, q, a) : 0;
          EXPECT_NEAR(mean, target, 1e-12 * std::max(1.0, target))
              << "k=" << k << " n=" << n << " a=" << a;
        }
      }
    }
  }
}

TEST(UnbiasednessTest, HalfHalfExample) {
  const Distribution p({0.5, 0.5});
  const double mean =
      test_util::SequenceMoments(p, 3, [&](const Histogram& h) {
        return estimate_power_sum(h, p, Corrected(2));
      }).mean;
  EXPECT_NEAR(mean, 1.0, 1e-15);
}

TEST(UnbiasednessTest, PluginIsBiased) {
  const Distribution p({0.5, 0.5});
  const double mean =
      test_util::SequenceMoments(p, 3, [&](const Histogram& h) {
        return estimate_power_sum(h, p, Plugin(2));
      }).mean;
  // E[(n_1^2 + n_2^2)] / 9 * 2 with n_i ~ Bin(3, 1/2): (2 * 3) / 9 * 2 = 4/3.
  EXPECT_NEAR(mean, 4.0 / 3, 1e-15);
}

TEST(MedianAmplifyTest, SingleGroupMatchesPlainEstimate) {
  const Distribution q = uniform_distribution(8);
  const Sampler sampler(gen_family(family::Spike{8, 1.5, 2}));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DivergenceEstimate m =
        median_amplify(sampler, q, Corrected(2), 50, 1, seed);
    const DivergenceEstimate e =
        estimate_divergence(sampler.Draw(50, seed), q, Corrected(2));
    EXPECT_EQ(m.bits, e.bits);
  }
}

TEST(MedianAmplifyTest, MedianOfGroupSeeds) {
  const Distribution q = uniform_distribution(8);
  const Sampler sampler(gen_family(family::Spike{8, 1.5, 2}));
  const std::uint64_t seed = 1234;
  std::vector<double> bits;
  for (unsigned g = 0; g < 7; ++g) {
    bits.push_back(
        *estimate_divergence(sampler.Draw(40, seed ^ g), q, Corrected(2)).bits);
  }
  std::sort(bits.begin(), bits.end());
  EXPECT_EQ(*median_amplify(sampler, q, Corrected(2), 40, 7, seed).bits, bits[3]);
}

TEST(MedianAmplifyTest, ConstantEstimator) {
  // Point mass: the histogram is deterministic, so every group agrees.
  const Distribution p({1, 0, 0, 0});
  const Distribution q = uniform_distribution(4);
  const DivergenceEstimate m =
      median_amplify(Sampler(p), q, Corrected(2), 10, 5, 8);
  EXPECT_DOUBLE_EQ(*m.bits, 2.0);
}

TEST(MedianAmplifyTest, UndefinedSortsLowest) {
  const Distribution q = uniform_distribution(1000);
  // Two samples on 1000 symbols are almost always distinct.
  const DivergenceEstimate m =
      median_amplify(Sampler(q), q, Corrected(2), 2, 3, 1);
  EXPECT_FALSE(m.defined());
}

TEST(MedianAmplifyTest, EvenGroupsRejected) {
  const Distribution q = uniform_distribution(4);
  EXPECT_EQ(CodeOf([&] { median_amplify(Sampler(q), q, Corrected(2), 10, 4, 1); }),
            ErrorCode::kEvenGroupCount);
  EXPECT_EQ(CodeOf([&] { median_amplify(Sampler(q), q, Corrected(2), 10, 0, 1); }),
            ErrorCode::kEvenGroupCount);
}

TEST(DrawForTest, PoissonizedConfigDrawsPoisson) {
  const Sampler sampler(uniform_distribution(4));
  const Histogram h =
      DrawFor(sampler, Corrected(2, Normalization::kPoissonized), 100, 3);
  EXPECT_DOUBLE_EQ(h.nominal_size(), 100);
  EXPECT_EQ(h, sampler.DrawPoissonized(100, 3));
  EXPECT_EQ(DrawFor(sampler, Corrected(2), 100, 3).total(), 100u);
}

}  // namespace
}  // namespace renyi
