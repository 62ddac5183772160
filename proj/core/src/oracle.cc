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

#include "renyi/oracle.h"

#include <cmath>
#include <string>
#include <vector>

#include "renyi/divergence.h"
#include "renyi/error.h"
#include "renyi/numeric.h"

namespace renyi::oracle {

void EnumerationBudget::Validate() const {
  if (max_outcomes < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_outcomes must be >= 1");
  }
  if (!(truncation_mass > 0 && truncation_mass <= 1e-9)) {
    throw Error(ErrorCode::kInvalidArgument,
                "truncation_mass must lie in (0, 1e-9]");
  }
}

namespace {

void BudgetExceeded(double outcomes, std::uint64_t cap) {
  throw Error(ErrorCode::kBudgetExceeded,
              "enumeration needs " + std::to_string(outcomes) +
                  " outcomes, budget is " + std::to_string(cap));
}

std::uint64_t EnumerateMultinomial(
    const Distribution& p, std::uint64_t n, const EnumerationBudget& budget,
    const std::function<void(const Histogram&, double)>& visit) {
  const std::size_t k = p.size();
  const double outcomes =
      Binomial(static_cast<unsigned>(n + k - 1), static_cast<unsigned>(k - 1));
  if (outcomes > static_cast<double>(budget.max_outcomes)) {
    BudgetExceeded(outcomes, budget.max_outcomes);
  }

  std::vector<std::uint64_t> counts(k, 0);
  std::uint64_t visited = 0;
  // Assigns counts[i..k-1] given `remaining` draws and the probability
  // accumulated so far for counts[0..i-1].
  auto recurse = [&](auto& self, std::size_t i, std::uint64_t remaining,
                     double weight) -> void {
    if (i + 1 == k) {
      counts[i] = remaining;
      const double w = weight * std::pow(p[i], static_cast<double>(remaining));
      visit(Histogram(counts), w);
      ++visited;
      return;
    }
    for (std::uint64_t c = 0; c <= remaining; ++c) {
      counts[i] = c;
      const double w = weight *
                       Binomial(static_cast<unsigned>(remaining),
                                static_cast<unsigned>(c)) *
                       std::pow(p[i], static_cast<double>(c));
      self(self, i + 1, remaining - c, w);
    }
  };
  recurse(recurse, 0, n, 1.0);
  return visited;
}

// Poisson(rate) pmf on 0..m, with m the first point whose upper tail drops
// below tail_mass.
// Stops once the remaining tail is provably below tail_mass. Past the mode
// the pmf ratio is rate/(j+1) < 1, so the tail is bounded by a geometric
// series. 1 - cdf would cancel long before 1e-16.
std::vector<double> TruncatedPoisson(double rate, double tail_mass) {
  std::vector<double> pmf{std::exp(-rate)};
  const double hard_cap = rate + 60.0 * std::sqrt(rate) + 200.0;
  while (static_cast<double>(pmf.size()) < hard_cap) {
    const double ratio = rate / static_cast<double>(pmf.size());
    if (ratio < 1.0 && pmf.back() * ratio / (1.0 - ratio) < tail_mass) break;
    pmf.push_back(pmf.back() * ratio);
  }
  return pmf;
}

std::uint64_t EnumeratePoissonized(
    const Distribution& p, std::uint64_t n, const EnumerationBudget& budget,
    const std::function<void(const Histogram&, double)>& visit) {
  const std::size_t k = p.size();
  const double per_coordinate = budget.truncation_mass / static_cast<double>(k);
  std::vector<std::vector<double>> pmfs;
  double outcomes = 1;
  for (std::size_t i = 0; i < k; ++i) {
    pmfs.push_back(TruncatedPoisson(static_cast<double>(n) * p[i], per_coordinate));
    outcomes *= static_cast<double>(pmfs.back().size());
  }
  if (outcomes > static_cast<double>(budget.max_outcomes)) {
    BudgetExceeded(outcomes, budget.max_outcomes);
  }

  std::vector<std::uint64_t> counts(k, 0);
  std::uint64_t visited = 0;
  while (true) {
    double w = 1;
    for (std::size_t i = 0; i < k; ++i) w *= pmfs[i][counts[i]];
    visit(Histogram(counts, static_cast<double>(n)), w);
    ++visited;
    std::size_t i = 0;
    while (i < k && ++counts[i] == pmfs[i].size()) counts[i++] = 0;
    if (i == k) break;
  }
  return visited;
}

}  // namespace

std::uint64_t ForEachOutcome(
    const Distribution& p, std::uint64_t n, SamplingModel model,
    const EnumerationBudget& budget,
    const std::function<void(const Histogram&, double)>& visit) {
  budget.Validate();
  if (n == 0) throw Error(ErrorCode::kInvalidCount, "n must be >= 1");
  if (model == SamplingModel::kMultinomial) {
    return EnumerateMultinomial(p, n, budget, visit);
  }
  return EnumeratePoissonized(p, n, budget, visit);
}

SamplingModel ModelFor(const EstimatorConfig& config) {
  return config.poissonized() ? SamplingModel::kPoissonized
                              : SamplingModel::kMultinomial;
}

Moments exact_mean_and_variance(const Distribution& p, const Distribution& q,
                                std::uint64_t n, const EstimatorConfig& config,
                                const EnumerationBudget& budget) {
  return exact_mean_and_variance(p, q, n, config, ModelFor(config), budget);
}

Moments exact_mean_and_variance(const Distribution& p, const Distribution& q,
                                std::uint64_t n, const EstimatorConfig& config,
                                SamplingModel model,
                                const EnumerationBudget& budget) {
  Moments out;
  out.outcomes = ForEachOutcome(p, n, model, budget,
                                [&](const Histogram& h, double w) {
                                  out.mean += w * estimate_power_sum(h, q, config);
                                  out.total_mass += w;
                                });
  // Second pass around the known mean avoids E[X^2] - E[X]^2 cancellation.
  ForEachOutcome(p, n, model, budget, [&](const Histogram& h, double w) {
    const double dev = estimate_power_sum(h, q, config) - out.mean;
    out.variance += w * dev * dev;
  });
  return out;
}

double exact_failure_probability(const Distribution& p, const Distribution& q,
                                 std::uint64_t n,
                                 const EstimatorConfig& config, double delta,
                                 const EnumerationBudget& budget) {
  if (!(delta >= 0)) {
    throw Error(ErrorCode::kInvalidArgument, "delta must be >= 0");
  }
  const double truth = renyi_divergence(p, q, config.order());
  double failure = 0;
  ForEachOutcome(p, n, ModelFor(config), budget,
                 [&](const Histogram& h, double w) {
                   const DivergenceEstimate e = estimate_divergence(h, q, config);
                   if (!e.defined() || std::fabs(*e.bits - truth) > delta) {
                     failure += w;
                   }
                 });
  return failure;
}

double variance_bound(const Distribution& p, const Distribution& q,
                      const DivergenceOrder& order, std::uint64_t n) {
  const unsigned a = order.integer();
  if (a < 2) throw Error(ErrorCode::kInvalidOrder, "order must be >= 2");
  if (n == 0) throw Error(ErrorCode::kInvalidCount, "n must be >= 1");
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "p and q differ in size");
  }
  if (!q.strictly_positive()) {
    throw Error(ErrorCode::kZeroReferenceMass, "reference has a zero mass");
  }
  const double log_n = std::log(static_cast<double>(n));
  std::vector<double> terms;
  std::vector<double> inner;
  for (unsigned r = 0; r < a; ++r) {
    inner.clear();
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0) continue;
      inner.push_back((a + r) * std::log(p[i]) -
                      (2.0 * a - 2.0) * std::log(q[i]));
    }
    const double power = static_cast<double>(a - r);
    terms.push_back(std::log(Binomial(a, r)) + power * std::log(double(a)) -
                    power * log_n + LogSumExp(inner));
  }
  return std::exp(LogSumExp(terms));
}

}  // namespace renyi::oracle
