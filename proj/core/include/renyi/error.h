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

#ifndef RENYI_ERROR_H_
#define RENYI_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace renyi {

// Every validation failure in the library is reported as an Error carrying
// one of these codes, so callers can tell e.g. a negative weight from an
// all-zero weight vector without parsing messages.
enum class ErrorCode {
  kTooFewSymbols,
  kNegativeEntry,
  kZeroTotal,
  kNonFinite,
  kNotNormalized,
  kDimensionMismatch,
  kZeroReferenceMass,
  kInvalidOrder,
  kNonIntegerOrder,
  kInvalidPerturbation,
  kZeroMagnitude,
  kInvalidCount,
  kInvalidFamily,
  kEvenGroupCount,
  kBudgetExceeded,
  kInvalidArgument,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace renyi

#endif  // RENYI_ERROR_H_
