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

#ifndef RENYI_NUMERIC_H_
#define RENYI_NUMERIC_H_

#include <cstdint>
#include <span>
#include <vector>

namespace renyi {

// log(sum_i exp(x_i)), shifted by the maximum. Returns -inf for an empty
// input or when every entry is -inf.
double LogSumExp(std::span<const double> log_terms);

// Sum of nonnegative terms accumulated from the smallest magnitude upward.
double SumAscending(std::vector<double> terms);

// Binomial coefficient as a double; exact for the small arguments used here.
double Binomial(unsigned n, unsigned r);

// Least-squares slope of log(y) against log(x).
double LogLogSlope(std::span<const double> x, std::span<const double> y);

// Median of the values; for an even count, the lower middle element.
double LowerMedian(std::vector<double> values);

// splitmix64 finalizer. Used to whiten user seeds before they reach an
// engine, never to derive trial seeds (those are plain XORs).
std::uint64_t MixSeed(std::uint64_t seed);

}  // namespace renyi

#endif  // RENYI_NUMERIC_H_
