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

#ifndef RENYI_EXPERIMENT_H_
#define RENYI_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "renyi/distribution.h"
#include "renyi/divergence.h"
#include "renyi/estimators.h"
#include "renyi/histogram.h"

namespace renyi {

// Seed of trial t under a master seed.
inline std::uint64_t TrialSeed(std::uint64_t master_seed, std::uint64_t t) {
  return master_seed ^ t;
}

// Runs body(0) ... body(count - 1) on up to `threads` workers (0 means the
// hardware concurrency). Each index runs exactly once; callers write results
// into per-index slots so output order never depends on scheduling.
void ParallelFor(std::size_t count, const std::function<void(std::size_t)>& body,
                 unsigned threads = 0);

// Outcome of repeating an estimator on fresh samples.
struct FailureSummary {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;   // undefined, or off by more than delta
  std::uint64_t undefined = 0;
  double failure_probability = 0;
  double mean_abs_error_bits = 0;  // over defined estimates; NaN if none
};

// Trial t draws with TrialSeed(master_seed, t). With groups > 1 every trial
// is a median_amplify call seeded with master_seed ^ (t << 16), which keeps
// the per-group seeds (trial seed ^ g) of different trials disjoint.
FailureSummary measure_failure(const Sampler& p, const Distribution& q,
                               const EstimatorConfig& config, std::uint64_t n,
                               double delta, std::uint64_t trials,
                               std::uint64_t master_seed, unsigned groups = 1,
                               unsigned threads = 0);

// Sample mean and unbiased variance of a statistic, with standard errors.
struct SampleMoments {
  std::uint64_t trials = 0;
  double mean = 0;
  double variance = 0;
  double mean_se = 0;
  double variance_se = 0;
};

SampleMoments SummarizeSamples(std::span<const double> values);

// Monte Carlo moments of estimate_power_sum for each config, all evaluated
// on the same histograms. Histograms are drawn Poissonized when the first
// config is Poissonized.
std::vector<SampleMoments> measure_power_sum_moments(
    const Sampler& p, const Distribution& q,
    std::span<const EstimatorConfig> configs, std::uint64_t n,
    std::uint64_t trials, std::uint64_t master_seed);

// Geometric grid lo, ..., <= hi with `per_octave` points per doubling,
// rounded to integers and deduplicated.
std::vector<std::uint64_t> GeometricGrid(std::uint64_t lo, std::uint64_t hi,
                                         unsigned per_octave);

// How a sweep builds p and q at each alphabet size.
struct DistributionChoice {
  enum class Kind {
    kUniform,
    kSpike,          // parameter: exponent
    kAlmostUniform,  // parameter: ratio
    kUniformWitness,  // p' of witness_pair_uniform(q); sampled side only
    kSpikeWitness,    // p of witness_instance_spike; needs a spike q
  };
  Kind kind = Kind::kUniform;
  double parameter = 0;

  // "uniform", "spike:<c>", "almost_uniform:<ratio>", "witness",
  // "spike_witness". Throws Error(kParseError).
  static DistributionChoice Parse(std::string_view text);
  std::string ToString() const;
};

Distribution ResolveReference(const DistributionChoice& choice, std::size_t k,
                              std::uint64_t seed);

Distribution ResolveSampled(const DistributionChoice& choice,
                            const DistributionChoice& reference_choice,
                            const Distribution& q, const DivergenceOrder& order,
                            std::uint64_t seed);

struct SweepConfig {
  double alpha = 2;
  Method method = Method::kCorrected;
  Normalization normalization = Normalization::kExact;
  std::uint64_t k_min = 64;
  std::uint64_t k_max = 64;  // k doubles from k_min while <= k_max
  DistributionChoice p = {DistributionChoice::Kind::kUniformWitness, 0};
  DistributionChoice q = {DistributionChoice::Kind::kUniform, 0};
  std::uint64_t n_min = 2;
  std::uint64_t n_max = 4096;
  unsigned n_per_octave = 4;
  double delta = 0.5;
  double epsilon = 1.0 / 3.0;
  double slack = 0.25;
  std::uint64_t trials = 200;
  std::optional<std::uint64_t> master_seed;
  unsigned threads = 0;

  // Throws Error(kInvalidArgument) describing the first violation.
  void Validate() const;
  std::vector<std::uint64_t> KValues() const;
  std::vector<std::uint64_t> NValues() const;
};

struct SweepRow {
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  std::uint64_t trials = 0;
  double empirical_error_prob = 0;
  double mean_abs_error_bits = 0;
  double theorem1_lhs = 0;                    // NaN for non-integer alpha
  std::optional<std::uint64_t> sufficient_n;  // empty for non-integer alpha
  double implied_lower_n = 0;
};

// One row per (k, n), in increasing k then n.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

inline constexpr std::string_view kSweepCsvHeader =
    "k,n,trials,empirical_error_prob,mean_abs_error_bits,theorem1_lhs,"
    "sufficient_n,implied_lower_n";

void WriteSweepCsv(std::ostream& out, std::span<const SweepRow> rows);

// Per k, the smallest swept n whose empirical error probability is at most
// `threshold`; empty when no swept n qualifies.
std::map<std::uint64_t, std::optional<std::uint64_t>> EmpiricalComplexity(
    std::span<const SweepRow> rows, double threshold = 1.0 / 3.0);

}  // namespace renyi

#endif  // RENYI_EXPERIMENT_H_
