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

#include "renyi/error.h"

namespace renyi {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooFewSymbols: return "too_few_symbols";
    case ErrorCode::kNegativeEntry: return "negative_entry";
    case ErrorCode::kZeroTotal: return "zero_total";
    case ErrorCode::kNonFinite: return "non_finite";
    case ErrorCode::kNotNormalized: return "not_normalized";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kZeroReferenceMass: return "zero_reference_mass";
    case ErrorCode::kInvalidOrder: return "invalid_order";
    case ErrorCode::kNonIntegerOrder: return "non_integer_order";
    case ErrorCode::kInvalidPerturbation: return "invalid_perturbation";
    case ErrorCode::kZeroMagnitude: return "zero_magnitude";
    case ErrorCode::kInvalidCount: return "invalid_count";
    case ErrorCode::kInvalidFamily: return "invalid_family";
    case ErrorCode::kEvenGroupCount: return "even_group_count";
    case ErrorCode::kBudgetExceeded: return "budget_exceeded";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kParseError: return "parse_error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace renyi
