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

#include "renyi/histogram.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "renyi/error.h"
#include "renyi/numeric.h"

namespace renyi {

Histogram::Histogram(std::vector<std::uint64_t> counts)
    : counts_(std::move(counts)),
      total_(std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0})),
      nominal_size_(static_cast<double>(total_)) {}

Histogram::Histogram(std::vector<std::uint64_t> counts, double nominal_size)
    : Histogram(std::move(counts)) {
  if (!(nominal_size > 0) || !std::isfinite(nominal_size)) {
    throw Error(ErrorCode::kInvalidCount, "nominal size must be positive");
  }
  nominal_size_ = nominal_size;
}

Histogram Histogram::FromSymbols(std::span<const std::size_t> symbols,
                                 std::size_t k) {
  std::vector<std::uint64_t> counts(k, 0);
  for (std::size_t s : symbols) {
    if (s >= k) {
      throw Error(ErrorCode::kInvalidArgument,
                  "symbol " + std::to_string(s) + " outside alphabet of size " +
                      std::to_string(k));
    }
    ++counts[s];
  }
  return Histogram(std::move(counts));
}

Rng MakeRng(std::uint64_t seed) { return Rng(MixSeed(seed)); }

double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Sampler::Sampler(Distribution p) : p_(std::move(p)) {
  cumulative_.resize(p_.size());
  double running = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    running += p_[i];
    cumulative_[i] = running;
    if (p_[i] > 0) last_positive_ = i;
  }
}

std::size_t Sampler::DrawSymbol(Rng& rng) const {
  const double u = UniformUnit(rng);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  // Rounding can leave the last cumulative entry just below one.
  if (it == cumulative_.end()) return last_positive_;
  return static_cast<std::size_t>(it - cumulative_.begin());
}

Histogram Sampler::Draw(std::uint64_t n, std::uint64_t seed) const {
  if (n == 0) throw Error(ErrorCode::kInvalidCount, "sample count is zero");
  Rng rng = MakeRng(seed);
  std::vector<std::uint64_t> counts(p_.size(), 0);
  for (std::uint64_t j = 0; j < n; ++j) ++counts[DrawSymbol(rng)];
  return Histogram(std::move(counts));
}

Histogram Sampler::DrawPoissonized(double n_mean, std::uint64_t seed) const {
  if (!(n_mean >= 1) || !std::isfinite(n_mean)) {
    throw Error(ErrorCode::kInvalidCount, "Poisson mean must be >= 1");
  }
  Rng rng = MakeRng(seed);
  std::vector<std::uint64_t> counts(p_.size(), 0);
  for (std::size_t i = 0; i < p_.size(); ++i) {
    const double rate = n_mean * p_[i];
    if (rate > 0) {
      std::poisson_distribution<std::uint64_t> poisson(rate);
      counts[i] = poisson(rng);
    }
  }
  return Histogram(std::move(counts), n_mean);
}

Histogram sample_histogram(const Distribution& p, std::uint64_t n,
                           std::uint64_t seed) {
  return Sampler(p).Draw(n, seed);
}

Histogram sample_histogram_poissonized(const Distribution& p, double n_mean,
                                       std::uint64_t seed) {
  return Sampler(p).DrawPoissonized(n_mean, seed);
}

}  // namespace renyi
