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

#ifndef RENYI_ORACLE_H_
#define RENYI_ORACLE_H_

#include <cstdint>
#include <functional>

#include "renyi/distribution.h"
#include "renyi/estimators.h"
#include "renyi/histogram.h"

namespace renyi::oracle {

// Brute-force ground truth over the full outcome space of small instances.
// Nothing here calls the samplers; the estimators are evaluated on every
// histogram the sampling model can produce, weighted by its probability.

struct EnumerationBudget {
  std::uint64_t max_outcomes = 1'000'000;
  // Upper bound on the probability mass left out by Poisson truncation.
  double truncation_mass = 1e-10;

  // Throws Error(kInvalidArgument) unless max_outcomes >= 1 and
  // 0 < truncation_mass <= 1e-9.
  void Validate() const;
};

enum class SamplingModel {
  kMultinomial,  // exactly n draws
  kPoissonized,  // independent n_i ~ Poisson(n p_i)
};

// Calls visit(h, probability) for each outcome. Multinomial outcomes are
// the compositions of n into k parts; Poissonized coordinates are truncated
// at the smallest m whose upper tail is below truncation_mass / k. Throws
// Error(kBudgetExceeded) when the outcome count exceeds the budget. Returns
// the number of outcomes visited.
std::uint64_t ForEachOutcome(
    const Distribution& p, std::uint64_t n, SamplingModel model,
    const EnumerationBudget& budget,
    const std::function<void(const Histogram&, double)>& visit);

struct Moments {
  double mean = 0;
  double variance = 0;
  double total_mass = 0;  // 1 up to rounding, or >= 1 - truncation_mass
  std::uint64_t outcomes = 0;
};

// Sampling model follows the config: Poissonized for corrected/poissonized,
// multinomial otherwise.
SamplingModel ModelFor(const EstimatorConfig& config);

// Exact mean and variance of estimate_power_sum.
Moments exact_mean_and_variance(const Distribution& p, const Distribution& q,
                                std::uint64_t n, const EstimatorConfig& config,
                                const EnumerationBudget& budget = {});

// Same, under an explicitly chosen sampling model.
Moments exact_mean_and_variance(const Distribution& p, const Distribution& q,
                                std::uint64_t n, const EstimatorConfig& config,
                                SamplingModel model,
                                const EnumerationBudget& budget = {});

// Exact Pr[estimate undefined or |estimate - D_alpha(p||q)| > delta].
double exact_failure_probability(const Distribution& p, const Distribution& q,
                                 std::uint64_t n,
                                 const EstimatorConfig& config, double delta,
                                 const EnumerationBudget& budget = {});

// Closed-form upper bound on the variance of the corrected/poissonized
// power-sum estimator:
//
//   sum_{r=0}^{a-1} C(a, r) a^(a-r) n^-(a-r) sum_i p_i^(a+r) / q_i^(2a-2)
//
// It expands sum_i q_i^(2-2a) n^-2a lambda_i^a ((lambda_i + a)^a -
// lambda_i^a), lambda_i = n p_i, which dominates Var[n_i^(a)] termwise
// because C(a, j) j! <= a^j.
double variance_bound(const Distribution& p, const Distribution& q,
                      const DivergenceOrder& order, std::uint64_t n);

}  // namespace renyi::oracle

#endif  // RENYI_ORACLE_H_
