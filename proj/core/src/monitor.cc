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

#include "renyi/monitor.h"

#include <cmath>

#include "renyi/error.h"

namespace renyi {

void MonitorConfig::Validate() const {
  if (window_size < 1 || stride < 1 || stride > window_size) {
    throw Error(ErrorCode::kInvalidArgument,
                "monitor needs 1 <= stride <= window_size");
  }
  if (!(threshold >= 0)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold must be >= 0");
  }
  EstimatorConfig(Method::kCorrected, Normalization::kExact,
                  DivergenceOrder(alpha));
}

StreamMonitor::StreamMonitor(Distribution reference, MonitorConfig config)
    : reference_(std::move(reference)),
      config_(config),
      estimator_(Method::kCorrected, Normalization::kExact,
                 DivergenceOrder(config.alpha)),
      counts_(reference_.size(), 0) {
  config_.Validate();
  if (!reference_.strictly_positive()) {
    throw Error(ErrorCode::kZeroReferenceMass,
                "monitor reference must be strictly positive");
  }
}

std::optional<MonitorRecord> StreamMonitor::Push(std::int64_t symbol) {
  if (symbol < 0 || static_cast<std::uint64_t>(symbol) >= reference_.size()) {
    ++invalid_since_record_;
    return std::nullopt;
  }
  const auto s = static_cast<std::size_t>(symbol);
  window_.push_back(s);
  ++counts_[s];
  if (window_.size() > config_.window_size) {
    --counts_[window_.front()];
    window_.pop_front();
  }
  ++consumed_;
  if (consumed_ < config_.window_size ||
      (consumed_ - config_.window_size) % config_.stride != 0) {
    return std::nullopt;
  }
  return Score();
}

MonitorRecord StreamMonitor::Score() {
  MonitorRecord record;
  record.position = consumed_;
  const DivergenceEstimate e =
      estimate_divergence(Histogram(counts_), reference_, estimator_);
  record.estimate_bits = e.bits;
  record.alarm = !e.defined() || *e.bits > config_.threshold;
  record.invalid_symbols = invalid_since_record_;
  invalid_since_record_ = 0;
  return record;
}

}  // namespace renyi
