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

#include "cli/verify.h"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "renyi/distribution.h"
#include "renyi/divergence.h"
#include "renyi/estimators.h"
#include "renyi/histogram.h"
#include "renyi/oracle.h"

namespace renyi::cli {

namespace {

constexpr std::uint64_t kGridSeed = 20260101;
constexpr double kExactTolerance = 1e-12;
constexpr double kPoissonTolerance = 1e-9;
// Tail mass is weighted by c^alpha in the mean, so truncate deep.
constexpr double kTruncationMass = 1e-16;

bool Close(double value, double expected, double tolerance) {
  return std::fabs(value - expected) <=
         tolerance * std::max(1.0, std::fabs(expected));
}

Distribution RandomDistribution(std::size_t k, double floor, Rng& rng) {
  std::vector<double> w(k);
  for (double& x : w) x = floor + (1.0 - floor) * UniformUnit(rng);
  return make_distribution(w);
}

}  // namespace

std::vector<VerifyCheck> RunVerification(bool mutate_normalization) {
  std::vector<VerifyCheck> checks;
  Rng rng = MakeRng(kGridSeed);
  for (std::uint64_t k : {2, 3}) {
    for (std::uint64_t n : {3, 4, 6}) {
      for (unsigned alpha : {2u, 3u}) {
        const Distribution p = RandomDistribution(k, 0.0, rng);
        const Distribution q = RandomDistribution(k, 0.1, rng);
        const DivergenceOrder order(alpha);
        const EstimatorConfig exact(
            Method::kCorrected,
            mutate_normalization ? Normalization::kPoissonized
                                 : Normalization::kExact,
            order);
        const EstimatorConfig poissonized(Method::kCorrected,
                                          Normalization::kPoissonized, order);

        VerifyCheck c;
        c.k = k;
        c.n = n;
        c.alpha = alpha;
        c.power_sum = power_sum(p, q, order).value();
        c.exact_mean = oracle::exact_mean_and_variance(
                           p, q, n, exact, oracle::SamplingModel::kMultinomial)
                           .mean;
        const oracle::Moments pm =
            oracle::exact_mean_and_variance(
            p, q, n, poissonized, oracle::EnumerationBudget{1'000'000, kTruncationMass});
        c.poisson_mean = pm.mean;
        c.poisson_variance = pm.variance;
        c.variance_bound = oracle::variance_bound(p, q, order, n);
        c.unbiased = Close(c.exact_mean, c.power_sum, kExactTolerance);
        c.poisson_unbiased = Close(c.poisson_mean, c.power_sum, kPoissonTolerance);
        c.variance_ok = c.poisson_variance <= c.variance_bound;
        checks.push_back(c);
      }
    }
  }
  return checks;
}

bool PrintVerification(const std::vector<VerifyCheck>& checks,
                       std::ostream& out) {
  char line[256];
  std::snprintf(line, sizeof(line), "%3s %3s %5s %14s %14s %14s %14s %14s  %s\n",
                "k", "n", "alpha", "power_sum", "exact_mean", "poisson_mean",
                "poisson_var", "var_bound", "status");
  out << line;
  bool all = true;
  for (const VerifyCheck& c : checks) {
    std::snprintf(line, sizeof(line),
                  "%3llu %3llu %5u %14.10g %14.10g %14.10g %14.8g %14.8g  %s\n",
                  static_cast<unsigned long long>(c.k),
                  static_cast<unsigned long long>(c.n), c.alpha, c.power_sum,
                  c.exact_mean, c.poisson_mean, c.poisson_variance,
                  c.variance_bound, c.passed() ? "ok" : "FAIL");
    out << line;
    if (!c.passed()) {
      all = false;
      out << "  offending instance: k=" << c.k << " n=" << c.n
          << " alpha=" << c.alpha << (c.unbiased ? "" : " [fixed-n mean]")
          << (c.poisson_unbiased ? "" : " [poisson mean]")
          << (c.variance_ok ? "" : " [variance bound]") << '\n';
    }
  }
  out << checks.size() << " checks, " << (all ? "all passed" : "FAILED")
      << '\n';
  return all;
}

}  // namespace renyi::cli
