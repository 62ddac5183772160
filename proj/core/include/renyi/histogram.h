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

#ifndef RENYI_HISTOGRAM_H_
#define RENYI_HISTOGRAM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "renyi/distribution.h"

namespace renyi {

// Symbol counts n_i with total n = sum_i n_i.
//
// nominal_size is the sample size an estimator normalizes by. For a
// fixed-size draw it equals total(); for a Poissonized draw it is the Poisson
// mean, since the falling-power moments E[n_i^(a)] = (mean * p_i)^a are
// stated in terms of the mean rather than the realized total.
class Histogram {
 public:
  explicit Histogram(std::vector<std::uint64_t> counts);
  Histogram(std::vector<std::uint64_t> counts, double nominal_size);

  // Counts symbol indices; every index must be < k.
  static Histogram FromSymbols(std::span<const std::size_t> symbols,
                               std::size_t k);

  std::span<const std::uint64_t> counts() const { return counts_; }
  std::uint64_t operator[](std::size_t i) const { return counts_[i]; }
  std::size_t size() const { return counts_.size(); }
  std::uint64_t total() const { return total_; }
  double nominal_size() const { return nominal_size_; }

  friend bool operator==(const Histogram&, const Histogram&) = default;

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
  double nominal_size_ = 0;
};

using Rng = std::mt19937_64;

// Engine seeded deterministically from a 64-bit seed.
Rng MakeRng(std::uint64_t seed);

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double UniformUnit(Rng& rng);

// Inverse-CDF sampler over a precomputed cumulative array. Immutable after
// construction; one instance can serve many threads, each with its own Rng.
class Sampler {
 public:
  explicit Sampler(Distribution p);

  const Distribution& distribution() const { return p_; }

  std::size_t DrawSymbol(Rng& rng) const;

  // n i.i.d. symbols, counted.
  Histogram Draw(std::uint64_t n, std::uint64_t seed) const;

  // Independent n_i ~ Poisson(n_mean * p_i).
  Histogram DrawPoissonized(double n_mean, std::uint64_t seed) const;

 private:
  Distribution p_;
  std::vector<double> cumulative_;
  std::size_t last_positive_ = 0;
};

// Throws Error(kInvalidCount) for n == 0.
Histogram sample_histogram(const Distribution& p, std::uint64_t n,
                           std::uint64_t seed);

// Throws Error(kInvalidCount) for n_mean < 1.
Histogram sample_histogram_poissonized(const Distribution& p, double n_mean,
                                       std::uint64_t seed);

}  // namespace renyi

#endif  // RENYI_HISTOGRAM_H_
