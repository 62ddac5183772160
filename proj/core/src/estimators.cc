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

#include "renyi/estimators.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "renyi/error.h"
#include "renyi/numeric.h"

namespace renyi {

std::string_view MethodName(Method method) {
  return method == Method::kPlugin ? "plugin" : "corrected";
}

std::string_view NormalizationName(Normalization normalization) {
  return normalization == Normalization::kPoissonized ? "poissonized"
                                                      : "exact";
}

Method ParseMethod(std::string_view name) {
  if (name == "plugin") return Method::kPlugin;
  if (name == "corrected") return Method::kCorrected;
  throw Error(ErrorCode::kParseError,
              "unknown method '" + std::string(name) + "'");
}

Normalization ParseNormalization(std::string_view name) {
  if (name == "poissonized") return Normalization::kPoissonized;
  if (name == "exact") return Normalization::kExact;
  throw Error(ErrorCode::kParseError,
              "unknown normalization '" + std::string(name) + "'");
}

EstimatorConfig::EstimatorConfig(Method method, Normalization normalization,
                                 DivergenceOrder order)
    : method_(method), normalization_(normalization), order_(order) {
  if (method_ == Method::kCorrected) {
    if (!order_.is_integer()) {
      throw Error(ErrorCode::kNonIntegerOrder,
                  "the corrected estimator needs an integer order");
    }
    if (order_.alpha() < 2) {
      throw Error(ErrorCode::kInvalidOrder,
                  "the corrected estimator needs order >= 2");
    }
  }
}

std::uint64_t falling_power(std::uint64_t m, unsigned a) {
  if (m < a) return 0;
  std::uint64_t result = 1;
  for (unsigned j = 0; j < a; ++j) {
    if (__builtin_mul_overflow(result, m - j, &result)) {
      throw std::overflow_error("falling power overflows 64 bits");
    }
  }
  return result;
}

double falling_power_real(double m, unsigned a) {
  if (m < a) return 0;
  double result = 1;
  for (unsigned j = 0; j < a; ++j) result *= m - j;
  return result;
}

double estimate_power_sum(const Histogram& h, const Distribution& q,
                          const EstimatorConfig& config) {
  if (h.size() != q.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "histogram has " + std::to_string(h.size()) +
                    " symbols, reference has " + std::to_string(q.size()));
  }
  if (!q.strictly_positive()) {
    throw Error(ErrorCode::kZeroReferenceMass,
                "reference symbol " + std::to_string(q.argmin()) +
                    " has zero mass");
  }
  const bool poissonized = config.poissonized();
  if (!poissonized && h.total() == 0) {
    throw Error(ErrorCode::kInvalidCount, "histogram is empty");
  }
  const double a = config.order().alpha();

  // Each term is numerator_i * q_i^(1-a) / divisor.
  double divisor = 0;
  if (config.method() == Method::kPlugin) {
    divisor = std::pow(static_cast<double>(h.total()), a);
  } else if (poissonized) {
    divisor = std::pow(h.nominal_size(), a);
  } else {
    divisor = falling_power_real(static_cast<double>(h.total()),
                                 config.order().integer());
    if (divisor == 0) return 0;  // fewer samples than the order
  }
  const double log_divisor = std::log(divisor);

  std::vector<std::size_t> support;
  std::vector<double> numerators;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double count = static_cast<double>(h[i]);
    const double numerator =
        config.method() == Method::kPlugin
            ? (count == 0 ? 0 : std::pow(count, a))
            : falling_power_real(count, config.order().integer());
    if (numerator == 0) continue;
    support.push_back(i);
    numerators.push_back(numerator);
  }
  if (support.empty()) return 0;

  std::vector<double> log_terms(support.size());
  for (std::size_t j = 0; j < support.size(); ++j) {
    log_terms[j] = std::log(numerators[j]) +
                   (1.0 - a) * std::log(q[support[j]]) - log_divisor;
  }
  const double max_term = *std::max_element(log_terms.begin(), log_terms.end());
  if (q.min() < 1e-100 || max_term > 700) {
    return std::exp(LogSumExp(log_terms));
  }
  std::vector<double> terms(support.size());
  for (std::size_t j = 0; j < support.size(); ++j) {
    terms[j] = numerators[j] * std::pow(q[support[j]], 1.0 - a) / divisor;
  }
  return SumAscending(std::move(terms));
}

DivergenceEstimate estimate_divergence(const Histogram& h,
                                       const Distribution& q,
                                       const EstimatorConfig& config) {
  DivergenceEstimate out;
  out.power_sum = estimate_power_sum(h, q, config);
  if (out.power_sum > 0) {
    out.bits = std::log2(out.power_sum) / (config.order().alpha() - 1.0);
  }
  return out;
}

Histogram DrawFor(const Sampler& p, const EstimatorConfig& config,
                  std::uint64_t n, std::uint64_t seed) {
  if (config.poissonized()) {
    return p.DrawPoissonized(static_cast<double>(n), seed);
  }
  return p.Draw(n, seed);
}

DivergenceEstimate median_amplify(const Sampler& p, const Distribution& q,
                                  const EstimatorConfig& config,
                                  std::uint64_t n_per_group, unsigned groups,
                                  std::uint64_t seed) {
  if (groups == 0 || groups % 2 == 0) {
    throw Error(ErrorCode::kEvenGroupCount,
                "median needs an odd group count, got " +
                    std::to_string(groups));
  }
  std::vector<DivergenceEstimate> estimates;
  estimates.reserve(groups);
  for (unsigned g = 0; g < groups; ++g) {
    estimates.push_back(estimate_divergence(
        DrawFor(p, config, n_per_group, seed ^ g), q, config));
  }
  constexpr double kUndefined = -std::numeric_limits<double>::infinity();
  const auto key = [&](const DivergenceEstimate& e) {
    return e.bits.value_or(kUndefined);
  };
  const auto mid = estimates.begin() + groups / 2;
  std::nth_element(estimates.begin(), mid, estimates.end(),
                   [&](const DivergenceEstimate& a, const DivergenceEstimate& b) {
                     return key(a) < key(b);
                   });
  return *mid;
}

}  // namespace renyi
