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

#include "renyi/distribution.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <system_error>

#include "renyi/error.h"
#include "renyi/histogram.h"
#include "renyi/numeric.h"

namespace renyi {

namespace {

void CheckEntries(std::span<const double> values, const char* what) {
  if (values.size() < 2) {
    throw Error(ErrorCode::kTooFewSymbols,
                std::string(what) + " needs at least two symbols, got " +
                    std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::kNonFinite, std::string(what) + " entry " +
                                             std::to_string(i) +
                                             " is not finite");
    }
    if (values[i] < 0) {
      throw Error(ErrorCode::kNegativeEntry, std::string(what) + " entry " +
                                                 std::to_string(i) +
                                                 " is negative");
    }
  }
}

}  // namespace

Distribution::Distribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  CheckEntries(probs_, "distribution");
  const double sum = SumAscending(probs_);
  if (std::fabs(sum - 1.0) > kSumTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "probabilities sum to " << sum;
    throw Error(ErrorCode::kNotNormalized, msg.str());
  }
}

std::size_t Distribution::argmin() const {
  return static_cast<std::size_t>(
      std::min_element(probs_.begin(), probs_.end()) - probs_.begin());
}

bool Distribution::strictly_positive() const {
  return std::all_of(probs_.begin(), probs_.end(),
                     [](double x) { return x > 0; });
}

Distribution make_distribution(std::span<const double> weights) {
  CheckEntries(weights, "weights");
  const double total = SumAscending({weights.begin(), weights.end()});
  if (total <= 0) {
    throw Error(ErrorCode::kZeroTotal, "weights are all zero");
  }
  std::vector<double> probs;
  probs.reserve(weights.size());
  for (double w : weights) probs.push_back(w / total);
  return Distribution(std::move(probs));
}

Distribution uniform_distribution(std::size_t k) {
  if (k < 2) {
    throw Error(ErrorCode::kTooFewSymbols, "uniform distribution needs k >= 2");
  }
  return Distribution(std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

double total_variation(const Distribution& p, const Distribution& p2) {
  if (p.size() != p2.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "total variation of distributions over " +
                    std::to_string(p.size()) + " and " +
                    std::to_string(p2.size()) + " symbols");
  }
  std::vector<double> diffs(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) diffs[i] = std::fabs(p[i] - p2[i]);
  return 0.5 * SumAscending(std::move(diffs));
}

PerturbationVector::PerturbationVector(const Distribution& base,
                                       std::vector<double> deltas)
    : deltas_(std::move(deltas)), magnitude_(0) {
  ValidateAgainst(base);
  std::vector<double> weighted(deltas_.size());
  for (std::size_t i = 0; i < deltas_.size(); ++i) {
    weighted[i] = base[i] * std::fabs(deltas_[i]);
  }
  magnitude_ = SumAscending(std::move(weighted));
}

void PerturbationVector::ValidateAgainst(const Distribution& base) const {
  if (deltas_.size() != base.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "perturbation has " + std::to_string(deltas_.size()) +
                    " entries for a distribution over " +
                    std::to_string(base.size()) + " symbols");
  }
  double balance = 0;
  for (std::size_t i = 0; i < deltas_.size(); ++i) {
    if (!std::isfinite(deltas_[i]) || deltas_[i] < kMinDelta) {
      throw Error(ErrorCode::kInvalidPerturbation,
                  "entry " + std::to_string(i) + " is below -1/2");
    }
    balance += deltas_[i] * base[i];
  }
  if (std::fabs(balance) > kBalanceTolerance) {
    std::ostringstream msg;
    msg << "sum_i delta_i p_i = " << balance << " is not zero";
    throw Error(ErrorCode::kInvalidPerturbation, msg.str());
  }
}

Distribution perturb(const Distribution& p, const PerturbationVector& v) {
  v.ValidateAgainst(p);
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = p[i] * (1.0 + v.deltas()[i]);
  }
  return Distribution(std::move(out));
}

namespace {

struct FamilyBuilder {
  Distribution operator()(const family::Uniform& u) const {
    return uniform_distribution(u.k);
  }

  Distribution operator()(const family::Spike& s) const {
    if (s.k < 2) {
      throw Error(ErrorCode::kTooFewSymbols, "spike family needs k >= 2");
    }
    if (!(s.exponent > 0) || !std::isfinite(s.exponent)) {
      throw Error(ErrorCode::kInvalidFamily, "spike exponent must be > 0");
    }
    if (s.position >= s.k) {
      throw Error(ErrorCode::kInvalidFamily, "spike position out of range");
    }
    const double spike = std::pow(static_cast<double>(s.k), -s.exponent);
    if (spike >= 1.0) {
      throw Error(ErrorCode::kInvalidFamily, "spike mass is not below one");
    }
    std::vector<double> probs(s.k, (1.0 - spike) / static_cast<double>(s.k - 1));
    probs[s.position] = spike;
    return Distribution(std::move(probs));
  }

  Distribution operator()(const family::AlmostUniform& a) const {
    if (a.k < 2) {
      throw Error(ErrorCode::kTooFewSymbols,
                  "almost-uniform family needs k >= 2");
    }
    if (!(a.ratio >= 1.0 && a.ratio <= 4.0)) {
      throw Error(ErrorCode::kInvalidFamily,
                  "almost-uniform ratio must lie in [1, 4]");
    }
    const double k = static_cast<double>(a.k);
    const double lo = 1.0 / (a.ratio * k);
    const double hi = a.ratio / k;
    Rng rng = MakeRng(a.seed);
    std::vector<double> weights(a.k);
    for (double& w : weights) w = lo + (hi - lo) * UniformUnit(rng);
    return make_distribution(weights);
  }
};

}  // namespace

Distribution gen_family(const FamilySpec& spec) {
  return std::visit(FamilyBuilder{}, spec);
}

Distribution parse_distribution(std::istream& in) {
  std::vector<double> probs;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const char* begin = line.data() + first;
    const char* end = line.data() + last + 1;
    if (*begin == '+') ++begin;
    double value = 0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_number) +
                      ": not a number: '" + line + "'");
    }
    probs.push_back(value);
  }
  return Distribution(std::move(probs));
}

Distribution read_distribution_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  }
  return parse_distribution(in);
}

}  // namespace renyi
