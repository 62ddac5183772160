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

#include "renyi/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "renyi/error.h"
#include "renyi/numeric.h"

namespace renyi {

namespace {

// log of sum_{r=0}^{a-1} C(a, r) n^-(a-r) S_{a+r} / M^2 as a function of n,
// with the n-independent part of each term precomputed.
class UpperCondition {
 public:
  UpperCondition(const Distribution& p, const Distribution& q,
                 const DivergenceOrder& order)
      : a_(order.integer()) {
    if (a_ < 2) {
      throw Error(ErrorCode::kInvalidOrder,
                  "the sample-size condition needs an order >= 2");
    }
    const double log_m = power_sum(p, q, order).log();  // checks p against q
    const double weight = 2.0 * a_ - 2.0;
    log_coefficients_.reserve(a_);
    std::vector<double> logs;
    for (unsigned r = 0; r < a_; ++r) {
      logs.clear();
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        logs.push_back((a_ + r) * std::log(p[i]) - weight * std::log(q[i]));
      }
      log_coefficients_.push_back(std::log(Binomial(a_, r)) + LogSumExp(logs) -
                                  2.0 * log_m);
    }
  }

  double Evaluate(std::uint64_t n) const {
    if (n == 0) throw Error(ErrorCode::kInvalidCount, "n must be >= 1");
    const double log_n = std::log(static_cast<double>(n));
    std::vector<double> logs(a_);
    for (unsigned r = 0; r < a_; ++r) {
      logs[r] = log_coefficients_[r] - (a_ - r) * log_n;
    }
    return std::exp(LogSumExp(logs));
  }

 private:
  unsigned a_;
  std::vector<double> log_coefficients_;
};

}  // namespace

double sufficient_condition_lhs(const Distribution& p, const Distribution& q,
                                const DivergenceOrder& order,
                                std::uint64_t n) {
  return UpperCondition(p, q, order).Evaluate(n);
}

std::uint64_t sufficient_n(const Distribution& p, const Distribution& q,
                           const DivergenceOrder& order, double delta,
                           double epsilon, double slack) {
  if (!(delta > 0) || !(epsilon > 0 && epsilon < 1) || !(slack > 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "need delta > 0, 0 < epsilon < 1 and slack > 0");
  }
  const UpperCondition condition(p, q, order);
  const double target = slack * epsilon * delta * delta;
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;

  std::uint64_t hi = 1;
  while (condition.Evaluate(hi) > target) {
    if (hi >= kLimit) {
      throw std::overflow_error("sufficient sample size exceeds 2^62");
    }
    hi *= 2;
  }
  std::uint64_t lo = hi / 2 + 1;  // condition fails at hi / 2 (or hi == 1)
  if (hi == 1) return 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (condition.Evaluate(mid) <= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return hi;
}

double LowerBoundConstants::implied_n() const {
  return std::max(std::sqrt(c2), c1);
}

LowerBoundConstants lower_bound_constants(const Distribution& p,
                                          const Distribution& q,
                                          const DivergenceOrder& order,
                                          const PerturbationVector& v) {
  v.ValidateAgainst(p);
  if (!(v.magnitude() > 0)) {
    throw Error(ErrorCode::kZeroMagnitude, "perturbation is zero");
  }
  const double a = order.alpha();
  const double log_m = power_sum(p, q, order).log();
  // w_i = p_i^a q_i^(1-a) / M sums to one.
  double first = 0;
  std::vector<double> second;
  second.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    const double w =
        std::exp(a * std::log(p[i]) + (1.0 - a) * std::log(q[i]) - log_m);
    const double d = v.deltas()[i];
    first += d * w;
    second.push_back(d * d * w);
  }
  const double delta = v.magnitude();
  LowerBoundConstants out;
  out.c1_raw = a * first / delta;
  out.c1 = std::max(0.0, out.c1_raw);
  out.c2 = a * (a - 1.0) / 4.0 * SumAscending(std::move(second)) /
           (delta * delta);
  return out;
}

BoundReport make_bound_report(const Distribution& p, const Distribution& q,
                              const DivergenceOrder& order, std::uint64_t n,
                              double delta, double epsilon, double slack,
                              const PerturbationVector& v) {
  BoundReport report;
  report.upper_lhs = sufficient_condition_lhs(p, q, order, n);
  report.sufficient_n = sufficient_n(p, q, order, delta, epsilon, slack);
  const LowerBoundConstants constants = lower_bound_constants(p, q, order, v);
  report.c1 = constants.c1;
  report.c2 = constants.c2;
  report.lower_n = constants.implied_n();
  return report;
}

PerturbationVector uniform_witness_perturbation(const Distribution& q) {
  const std::size_t k = q.size();
  const double kd = static_cast<double>(k);
  const std::size_t target = q.argmin();
  std::vector<double> deltas(k, -kd / (4.0 * (kd - 1.0)));
  deltas[target] = kd / 4.0;
  double largest = 0;
  for (double d : deltas) largest = std::max(largest, std::fabs(d));
  // Shrink until every entry is within [-1/2, 1/2]; the constants are
  // invariant under this scaling.
  const double scale = std::min(1.0, 1.0 / (2.0 * largest));
  for (double& d : deltas) d *= scale;
  return PerturbationVector(uniform_distribution(k), std::move(deltas));
}

PerturbationVector balanced_perturbation(const Distribution& p,
                                         std::size_t target) {
  if (target >= p.size()) {
    throw Error(ErrorCode::kInvalidArgument, "target symbol out of range");
  }
  const double mass = p[target];
  if (!(mass > 0 && mass <= 0.5)) {
    throw Error(ErrorCode::kInvalidPerturbation,
                "balanced perturbation needs 0 < p[target] <= 1/2");
  }
  std::vector<double> deltas(p.size(), -mass / (2.0 * (1.0 - mass)));
  deltas[target] = 0.5;
  return PerturbationVector(p, std::move(deltas));
}

WitnessPair witness_pair_uniform(const Distribution& q,
                                 const DivergenceOrder& order) {
  Distribution p = uniform_distribution(q.size());
  const PerturbationVector v = uniform_witness_perturbation(q);
  Distribution p_prime = perturb(p, v);
  const double gap = std::fabs(renyi_divergence(p, q, order) -
                               renyi_divergence(p_prime, q, order));
  if (!(gap > 0)) {
    throw std::logic_error("witness pair has no divergence gap");
  }
  const LowerBoundConstants constants = lower_bound_constants(p, q, order, v);
  const double tv = total_variation(p, p_prime);
  return WitnessPair{std::move(p), std::move(p_prime), q, tv, gap,
                     constants.implied_n(), constants};
}

SpikeWitness witness_instance_spike(std::size_t k, double c,
                                    const DivergenceOrder& order) {
  if (k < 2) throw Error(ErrorCode::kTooFewSymbols, "spike needs k >= 2");
  const double kd = static_cast<double>(k);
  if (!(c > 0) || !std::isfinite(c) || !(std::pow(kd, -c) < 0.5)) {
    throw Error(ErrorCode::kInvalidFamily,
                "spike exponent must satisfy k^-c < 1/2");
  }
  const double a = order.alpha();
  const double d = c * (a - 1.0) / a;
  Distribution q = gen_family(family::Spike{k, c, 0});
  Distribution p = gen_family(family::Spike{k, d, 0});
  const PerturbationVector v = balanced_perturbation(p, 0);
  const LowerBoundConstants constants = lower_bound_constants(p, q, order, v);
  return SpikeWitness{std::move(p), std::move(q), c, d, constants,
                      constants.implied_n()};
}

}  // namespace renyi
