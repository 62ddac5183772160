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

#ifndef RENYI_SERIALIZATION_H_
#define RENYI_SERIALIZATION_H_

#include <string>

#include "renyi/bounds.h"

namespace renyi {

// Numbers in every output format carry 12 significant digits.
std::string FormatNumber(double value);

// Rounds to 12 significant digits, so JSON writers that print the shortest
// round-trip representation stay within that precision.
double RoundSignificant(double value);

// Flat JSON objects. BoundReport keys: theorem1_lhs, sufficient_n, c1, c2,
// lower_n. WitnessPair keys: p, p_prime, q, tv, divergence_gap, implied_n.
std::string ToJson(const BoundReport& report);
std::string ToJson(const WitnessPair& pair);

// Rebuilds a witness pair from ToJson output; the stored scalars are kept
// as read so callers can recompute and compare them.
WitnessPair WitnessPairFromJson(const std::string& text);

}  // namespace renyi

#endif  // RENYI_SERIALIZATION_H_
