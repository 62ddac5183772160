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

#include "renyi/divergence.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "renyi/error.h"
#include "renyi/numeric.h"

namespace renyi {

namespace {

constexpr double kTinyReference = 1e-100;
constexpr double kLogOverflow = 700.0;

void CheckReference(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "p has " + std::to_string(p.size()) + " symbols, q has " +
                    std::to_string(q.size()));
  }
  if (!q.strictly_positive()) {
    throw Error(ErrorCode::kZeroReferenceMass,
                "reference symbol " + std::to_string(q.argmin()) +
                    " has zero mass");
  }
}

}  // namespace

DivergenceOrder::DivergenceOrder(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || !(alpha > 1.0)) {
    throw Error(ErrorCode::kInvalidOrder,
                "divergence order must be finite and > 1, got " +
                    std::to_string(alpha));
  }
  is_integer_ = std::floor(alpha) == alpha;
}

unsigned DivergenceOrder::integer() const {
  if (!is_integer_) {
    throw Error(ErrorCode::kNonIntegerOrder,
                "order " + std::to_string(alpha_) + " is not an integer");
  }
  return static_cast<unsigned>(alpha_);
}

PowerSum PowerSum::FromValue(double m) {
  if (!(m > 0) || !std::isfinite(m)) {
    throw Error(ErrorCode::kInvalidArgument,
                "power sum must be positive and finite");
  }
  return PowerSum(std::log(m));
}

PowerSum PowerSum::FromLog(double log_m) {
  if (std::isnan(log_m) || std::isinf(log_m)) {
    throw Error(ErrorCode::kInvalidArgument, "log power sum must be finite");
  }
  return PowerSum(log_m);
}

double PowerSum::value() const { return std::exp(log_value_); }

PowerSum power_sum(const Distribution& p, const Distribution& q,
                   const DivergenceOrder& order) {
  CheckReference(p, q);
  if (p == q) return PowerSum::FromLog(0.0);
  const double a = order.alpha();
  std::vector<double> log_terms;
  log_terms.reserve(p.size());
  bool log_space = q.min() < kTinyReference;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    const double t = a * std::log(p[i]) + (1.0 - a) * std::log(q[i]);
    if (std::fabs(t) > kLogOverflow) log_space = true;
    log_terms.push_back(t);
  }
  if (log_space) return PowerSum::FromLog(LogSumExp(log_terms));

  std::vector<double> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    terms.push_back(std::pow(p[i], a) * std::pow(q[i], 1.0 - a));
  }
  return PowerSum::FromValue(SumAscending(std::move(terms)));
}

double renyi_divergence(const Distribution& p, const Distribution& q,
                        const DivergenceOrder& order) {
  return divergence_from_power_sum(power_sum(p, q, order), order);
}

double renyi_entropy(const Distribution& p, const DivergenceOrder& order) {
  std::vector<double> terms;
  terms.reserve(p.size());
  for (double x : p.probs()) terms.push_back(std::pow(x, order.alpha()));
  return -std::log2(SumAscending(std::move(terms))) / (order.alpha() - 1.0);
}

double renyi_entropy_from_divergence(const Distribution& p,
                                     const DivergenceOrder& order) {
  const Distribution uniform = uniform_distribution(p.size());
  return std::log2(static_cast<double>(p.size())) -
         renyi_divergence(p, uniform, order);
}

double divergence_from_power_sum(const PowerSum& m,
                                 const DivergenceOrder& order) {
  return m.log() / std::numbers::ln2 / (order.alpha() - 1.0);
}

PowerSum power_sum_from_divergence(double bits, const DivergenceOrder& order) {
  return PowerSum::FromLog((order.alpha() - 1.0) * bits * std::numbers::ln2);
}

double additive_from_multiplicative_error(double delta_mult,
                                          const DivergenceOrder& order) {
  if (!(delta_mult > -1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "multiplicative error must exceed -1");
  }
  return std::log1p(delta_mult) / std::numbers::ln2 / (order.alpha() - 1.0);
}

double multiplicative_from_additive_error(double delta_add,
                                          const DivergenceOrder& order) {
  return std::expm1((order.alpha() - 1.0) * delta_add * std::numbers::ln2);
}

}  // namespace renyi
