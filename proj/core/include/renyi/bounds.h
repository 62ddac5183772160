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

#ifndef RENYI_BOUNDS_H_
#define RENYI_BOUNDS_H_

#include <cstddef>
#include <cstdint>

#include "renyi/distribution.h"
#include "renyi/divergence.h"

namespace renyi {

// "n is large enough" is read as lhs(n) <= slack * epsilon * delta^2.
inline constexpr double kDefaultSlack = 0.25;

// Left-hand side of the sufficient sample-size condition for the corrected
// estimator:
//
//   sum_{r=0}^{a-1} C(a, r) n^-(a-r) S_{a+r} / M^2,
//   S_j = sum_i p_i^j / q_i^(2a-2),   M = sum_i p_i^a / q_i^(a-1).
//
// Evaluated in log space. Requires an integer order (kNonIntegerOrder),
// n >= 1 and a strictly positive q.
double sufficient_condition_lhs(const Distribution& p, const Distribution& q,
                                const DivergenceOrder& order, std::uint64_t n);

// Smallest n with sufficient_condition_lhs(n) <= slack * epsilon * delta^2,
// located by doubling and then bisection. Requires delta > 0,
// 0 < epsilon < 1 and slack > 0.
std::uint64_t sufficient_n(const Distribution& p, const Distribution& q,
                           const DivergenceOrder& order, double delta,
                           double epsilon, double slack = kDefaultSlack);

// Lower-bound constants for a perturbation of p.
//
//   C1 = a * (sum_i d_i p_i^a q_i^(1-a)) / M / delta
//   C2 = a (a - 1) / 4 * (sum_i d_i^2 p_i^a q_i^(1-a)) / M / delta^2
//
// with d_i the multiplicative perturbation entries and delta its magnitude.
// C1 may come out negative; `c1` is clamped at zero and `c1_raw` keeps the
// signed value.
struct LowerBoundConstants {
  double c1 = 0;
  double c1_raw = 0;
  double c2 = 0;

  // max(sqrt(C2), C1), with no hidden constant.
  double implied_n() const;
};

// Throws Error(kZeroMagnitude) for the zero perturbation.
LowerBoundConstants lower_bound_constants(const Distribution& p,
                                          const Distribution& q,
                                          const DivergenceOrder& order,
                                          const PerturbationVector& v);

struct BoundReport {
  double upper_lhs = 0;          // serialized as "theorem1_lhs"
  std::uint64_t sufficient_n = 0;
  double c1 = 0;
  double c2 = 0;
  double lower_n = 0;            // max(sqrt(c2), c1)
};

BoundReport make_bound_report(const Distribution& p, const Distribution& q,
                              const DivergenceOrder& order, std::uint64_t n,
                              double delta, double epsilon, double slack,
                              const PerturbationVector& v);

// Two distributions close in total variation whose divergences to q differ.
struct WitnessPair {
  Distribution p;
  Distribution p_prime;
  Distribution q;
  double tv = 0;
  double divergence_gap = 0;  // |D(p||q) - D(p'||q)| in bits
  double implied_n = 0;
  LowerBoundConstants constants;
};

// Perturbation of the uniform distribution that moves mass onto the least
// likely symbol of q: k/4 there and -k/(4(k-1)) elsewhere, multiplied by
// min(1, 1/(2 max|d_i|)) so that every entry stays >= -1/2.
PerturbationVector uniform_witness_perturbation(const Distribution& q);

// +1/2 on `target` and a constant elsewhere chosen so sum_i d_i p_i = 0.
// Requires 0 < p[target] <= 1/2 (kInvalidPerturbation otherwise). For a
// uniform p and target = argmin q this equals uniform_witness_perturbation.
PerturbationVector balanced_perturbation(const Distribution& p,
                                         std::size_t target);

// p uniform, p' = perturb(p, uniform_witness_perturbation(q)).
WitnessPair witness_pair_uniform(const Distribution& q,
                                 const DivergenceOrder& order);

// Reference with mass k^-c on symbol 0 and p with mass k^-d there, where
// d = c (a - 1) / a; both are uniform on the other symbols. The
// perturbation is +1/2 on symbol 0 and a constant elsewhere that balances
// it.
struct SpikeWitness {
  Distribution p;
  Distribution q;
  double c = 0;
  double d = 0;
  LowerBoundConstants constants;
  double implied_n = 0;
};

// Throws Error(kInvalidFamily) unless k >= 2, c > 0 and k^-c < 1/2, and
// Error(kInvalidPerturbation) when k^-d > 1/2 leaves no valid balance.
SpikeWitness witness_instance_spike(std::size_t k, double c,
                                    const DivergenceOrder& order);

}  // namespace renyi

#endif  // RENYI_BOUNDS_H_
