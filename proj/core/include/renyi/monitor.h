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

#ifndef RENYI_MONITOR_H_
#define RENYI_MONITOR_H_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "renyi/distribution.h"
#include "renyi/estimators.h"

namespace renyi {

struct MonitorConfig {
  std::uint64_t window_size = 10'000;
  std::uint64_t stride = 1'000;
  double threshold = 0.5;  // bits
  double alpha = 2;

  // Throws Error(kInvalidArgument) unless 1 <= stride <= window_size,
  // alpha >= 2 is an integer and threshold >= 0.
  void Validate() const;
};

struct MonitorRecord {
  std::uint64_t position = 0;  // valid symbols consumed so far
  std::optional<double> estimate_bits;
  bool alarm = false;
  std::uint64_t invalid_symbols = 0;  // rejected since the previous record
};

// Sliding-window divergence monitor against a fixed reference profile.
//
// Keeps the last window_size valid symbols. Once the window is full, and
// then every `stride` symbols, scores the window with the corrected
// estimator (exact normalization) and raises an alarm when the estimate
// exceeds the threshold or is undefined. Symbols outside the reference
// alphabet are counted, never stored.
class StreamMonitor {
 public:
  StreamMonitor(Distribution reference, MonitorConfig config);

  // Symbol indices outside [0, k) are counted as invalid.
  std::optional<MonitorRecord> Push(std::int64_t symbol);
  void PushInvalid() { ++invalid_since_record_; }

  const MonitorConfig& config() const { return config_; }

 private:
  MonitorRecord Score();

  Distribution reference_;
  MonitorConfig config_;
  EstimatorConfig estimator_;
  std::deque<std::size_t> window_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t consumed_ = 0;
  std::uint64_t invalid_since_record_ = 0;
};

}  // namespace renyi

#endif  // RENYI_MONITOR_H_
