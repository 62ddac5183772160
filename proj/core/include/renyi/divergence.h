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

#ifndef RENYI_DIVERGENCE_H_
#define RENYI_DIVERGENCE_H_

#include "renyi/distribution.h"

namespace renyi {

// Order alpha > 1 of a Renyi divergence.
class DivergenceOrder {
 public:
  // Throws Error(kInvalidOrder) unless alpha is finite and > 1.
  explicit DivergenceOrder(double alpha);

  double alpha() const { return alpha_; }
  bool is_integer() const { return is_integer_; }

  // Throws Error(kNonIntegerOrder) when !is_integer().
  unsigned integer() const;

 private:
  double alpha_;
  bool is_integer_;
};

// M = sum_i p_i^alpha q_i^(1 - alpha), held as its natural logarithm so that
// references with vanishing masses do not overflow.
class PowerSum {
 public:
  // Throws Error(kInvalidArgument) for m <= 0 or non-finite m.
  static PowerSum FromValue(double m);
  static PowerSum FromLog(double log_m);

  double value() const;
  double log() const { return log_value_; }

 private:
  explicit PowerSum(double log_value) : log_value_(log_value) {}
  double log_value_;
};

// Requires q strictly positive (kZeroReferenceMass) and matching sizes
// (kDimensionMismatch). Terms are summed smallest first; when a reference
// mass is below 1e-100 or a log-term exceeds 700 the sum switches to a
// max-shifted log-sum-exp.
PowerSum power_sum(const Distribution& p, const Distribution& q,
                   const DivergenceOrder& order);

// D_alpha(p || q) = log2(M) / (alpha - 1), in bits.
double renyi_divergence(const Distribution& p, const Distribution& q,
                        const DivergenceOrder& order);

// -log2(sum_i p_i^alpha) / (alpha - 1), in bits.
double renyi_entropy(const Distribution& p, const DivergenceOrder& order);

// The same quantity obtained as log2(k) - D_alpha(p || uniform).
double renyi_entropy_from_divergence(const Distribution& p,
                                     const DivergenceOrder& order);

double divergence_from_power_sum(const PowerSum& m,
                                 const DivergenceOrder& order);
PowerSum power_sum_from_divergence(double bits, const DivergenceOrder& order);

// A power sum known up to a factor (1 + delta_mult) has its divergence
// known up to log2(1 + delta_mult) / (alpha - 1) bits, which is
// delta_mult / ((alpha - 1) ln 2) to first order. Requires delta_mult > -1.
double additive_from_multiplicative_error(double delta_mult,
                                          const DivergenceOrder& order);

// Inverse: 2^((alpha - 1) delta_add) - 1.
double multiplicative_from_additive_error(double delta_add,
                                          const DivergenceOrder& order);

}  // namespace renyi

#endif  // RENYI_DIVERGENCE_H_
