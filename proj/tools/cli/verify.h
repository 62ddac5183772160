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

#ifndef RENYI_TOOLS_CLI_VERIFY_H_
#define RENYI_TOOLS_CLI_VERIFY_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace renyi::cli {

// One small instance of the built-in oracle grid and what was measured.
struct VerifyCheck {
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  unsigned alpha = 0;
  double power_sum = 0;
  double exact_mean = 0;      // corrected/exact under fixed-n sampling
  double poisson_mean = 0;    // corrected/poissonized under Poisson sampling
  double poisson_variance = 0;
  double variance_bound = 0;
  bool unbiased = false;
  bool poisson_unbiased = false;
  bool variance_ok = false;

  bool passed() const { return unbiased && poisson_unbiased && variance_ok; }
};

// k in {2, 3} x n in {3, 4, 6} x alpha in {2, 3}, one seeded (p, q) each.
// With mutate_normalization the fixed-n check divides by n^alpha instead of
// the falling power, which must make it fail.
std::vector<VerifyCheck> RunVerification(bool mutate_normalization);

// Prints the table; returns true iff every check passed.
bool PrintVerification(const std::vector<VerifyCheck>& checks,
                       std::ostream& out);

}  // namespace renyi::cli

#endif  // RENYI_TOOLS_CLI_VERIFY_H_
