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


#include <cstdint>

#include <benchmark/benchmark.h>

#include "renyi/distribution.h"
#include "renyi/divergence.h"
#include "renyi/estimators.h"
#include "renyi/histogram.h"
#include "renyi/oracle.h"

namespace renyi {
namespace {

void BM_Draw(benchmark::State& state) {
  const Sampler sampler(uniform_distribution(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.Draw(1000, ++seed));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_Draw)->Range(64, 16384);

void BM_DrawPoissonized(benchmark::State& state) {
  const Sampler sampler(uniform_distribution(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.DrawPoissonized(1000, ++seed));
  }
}
BENCHMARK(BM_DrawPoissonized)->Range(64, 16384);

void BM_EstimatePowerSum(benchmark::State& state) {
  const std::size_t k = state.range(0);
  const unsigned alpha = static_cast<unsigned>(state.range(1));
  const Distribution q = gen_family(family::Spike{k, 2, 0});
  const Histogram h = sample_histogram(uniform_distribution(k), 4 * k, 1);
  const EstimatorConfig config(Method::kCorrected, Normalization::kExact,
                               DivergenceOrder(alpha));
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_power_sum(h, q, config));
  }
}
BENCHMARK(BM_EstimatePowerSum)->ArgsProduct({{256, 4096, 65536}, {2, 3}});

void BM_PowerSum(benchmark::State& state) {
  const std::size_t k = state.range(0);
  const Distribution p = uniform_distribution(k);
  const Distribution q = gen_family(family::Spike{k, 3, 0});
  const DivergenceOrder order(2.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(power_sum(p, q, order));
  }
}
BENCHMARK(BM_PowerSum)->Range(256, 65536);

void BM_OracleMultinomial(benchmark::State& state) {
  const Distribution p = make_distribution(std::vector<double>{1, 2, 3, 4});
  const Distribution q = uniform_distribution(4);
  const EstimatorConfig config(Method::kCorrected, Normalization::kExact,
                               DivergenceOrder(2));
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::exact_mean_and_variance(p, q, n, config));
  }
}
BENCHMARK(BM_OracleMultinomial)->Arg(8)->Arg(32)->Arg(64);

}  // namespace
}  // namespace renyi

BENCHMARK_MAIN();
