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

#include "renyi/numeric.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>

namespace renyi {

double LogSumExp(std::span<const double> log_terms) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (log_terms.empty()) return kNegInf;
  const double max_term = *std::max_element(log_terms.begin(), log_terms.end());
  if (max_term == kNegInf) return kNegInf;
  if (std::isinf(max_term)) return max_term;
  std::vector<double> shifted;
  shifted.reserve(log_terms.size());
  for (double t : log_terms) shifted.push_back(std::exp(t - max_term));
  return max_term + std::log(SumAscending(std::move(shifted)));
}

double SumAscending(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end(),
            [](double a, double b) { return std::fabs(a) < std::fabs(b); });
  return std::accumulate(terms.begin(), terms.end(), 0.0);
}

double Binomial(unsigned n, unsigned r) {
  if (r > n) return 0.0;
  r = std::min(r, n - r);
  double result = 1.0;
  for (unsigned j = 1; j <= r; ++j) {
    result = result * static_cast<double>(n - r + j) / static_cast<double>(j);
  }
  return std::round(result);
}

double LogLogSlope(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size() && x.size() >= 2);
  const double count = static_cast<double>(x.size());
  double mean_x = 0, mean_y = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += std::log(x[i]);
    mean_y += std::log(y[i]);
  }
  mean_x /= count;
  mean_y /= count;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mean_x;
    sxy += dx * (std::log(y[i]) - mean_y);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

double LowerMedian(std::vector<double> values) {
  assert(!values.empty());
  const auto mid = values.begin() + (values.size() - 1) / 2;
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

std::uint64_t MixSeed(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace renyi
