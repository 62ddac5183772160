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

#ifndef RENYI_ESTIMATORS_H_
#define RENYI_ESTIMATORS_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "renyi/distribution.h"
#include "renyi/divergence.h"
#include "renyi/histogram.h"

namespace renyi {

enum class Method { kPlugin, kCorrected };

// Divisor of the corrected estimator. kPoissonized divides by n^alpha,
// which is unbiased when the counts are independent Poissons with mean
// n p_i. kExact divides by the falling power n^(alpha), which is unbiased
// under fixed-n multinomial sampling.
enum class Normalization { kPoissonized, kExact };

std::string_view MethodName(Method method);
std::string_view NormalizationName(Normalization normalization);
Method ParseMethod(std::string_view name);
Normalization ParseNormalization(std::string_view name);

class EstimatorConfig {
 public:
  // Throws Error(kNonIntegerOrder) for the corrected method with a
  // non-integer alpha, and Error(kInvalidOrder) for alpha < 2 there.
  EstimatorConfig(Method method, Normalization normalization,
                  DivergenceOrder order);

  Method method() const { return method_; }
  Normalization normalization() const { return normalization_; }
  const DivergenceOrder& order() const { return order_; }

  // Whether histograms for this config are drawn Poissonized.
  bool poissonized() const {
    return method_ == Method::kCorrected &&
           normalization_ == Normalization::kPoissonized;
  }

 private:
  Method method_;
  Normalization normalization_;
  DivergenceOrder order_;
};

// m (m - 1) ... (m - a + 1); zero when m < a. Throws std::overflow_error if
// the product does not fit in 64 bits.
std::uint64_t falling_power(std::uint64_t m, unsigned a);

// Same product evaluated in floating point.
double falling_power_real(double m, unsigned a);

// Power-sum estimate from a histogram; may be exactly zero.
//
//   plugin:                 sum_i (n_i / n)^alpha q_i^(1 - alpha)
//   corrected, poissonized: sum_i q_i^(1 - alpha) n_i^(alpha) / N^alpha
//   corrected, exact:       sum_i q_i^(1 - alpha) n_i^(alpha) / n^(alpha)
//
// where n is the histogram total and N its nominal size.
double estimate_power_sum(const Histogram& h, const Distribution& q,
                          const EstimatorConfig& config);

// A divergence estimate in bits. An estimate is undefined when the
// power-sum estimate is zero, e.g. when every count is below alpha.
struct DivergenceEstimate {
  double power_sum = 0;
  std::optional<double> bits;

  bool defined() const { return bits.has_value(); }
};

DivergenceEstimate estimate_divergence(const Histogram& h,
                                       const Distribution& q,
                                       const EstimatorConfig& config);

// Median of `groups` independent estimates, group g drawn with seed
// (seed ^ g) and n_per_group samples (or Poisson mean n_per_group when the
// config is Poissonized). Undefined group estimates order below every
// defined one; the result is undefined if the median itself is.
// Throws Error(kEvenGroupCount) for an even or zero group count.
DivergenceEstimate median_amplify(const Sampler& p, const Distribution& q,
                                  const EstimatorConfig& config,
                                  std::uint64_t n_per_group, unsigned groups,
                                  std::uint64_t seed);

// Draws one histogram the way the config expects.
Histogram DrawFor(const Sampler& p, const EstimatorConfig& config,
                  std::uint64_t n, std::uint64_t seed);

}  // namespace renyi

#endif  // RENYI_ESTIMATORS_H_
