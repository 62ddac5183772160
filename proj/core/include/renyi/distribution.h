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

#ifndef RENYI_DISTRIBUTION_H_
#define RENYI_DISTRIBUTION_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <variant>
#include <vector>

namespace renyi {

// A probability mass function over the alphabet {0, ..., k-1}.
//
// Entries are nonnegative, sum to one within kSumTolerance, and k >= 2.
// Zero entries are allowed; reference distributions used as the second
// argument of a divergence must additionally be strictly positive, which is
// checked where that matters.
class Distribution {
 public:
  static constexpr double kSumTolerance = 1e-9;

  // Throws Error on any invariant violation; does not renormalize.
  explicit Distribution(std::vector<double> probs);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

  std::size_t argmin() const;
  double min() const { return probs_[argmin()]; }
  bool strictly_positive() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<double> probs_;
};

// weights / sum(weights). Distinct errors for fewer than two entries, a
// negative entry and an all-zero vector.
Distribution make_distribution(std::span<const double> weights);

Distribution uniform_distribution(std::size_t k);

// 1/2 * sum_i |p_i - p2_i|.
double total_variation(const Distribution& p, const Distribution& p2);

// Multiplicative perturbation p'_i = p_i (1 + delta_i) of a base
// distribution. Valid against its base when every delta_i >= -1/2 and
// sum_i delta_i p_i = 0; magnitude is sum_i p_i |delta_i|.
class PerturbationVector {
 public:
  static constexpr double kMinDelta = -0.5;
  static constexpr double kBalanceTolerance = 1e-12;

  // Validates against base; throws Error(kInvalidPerturbation).
  PerturbationVector(const Distribution& base, std::vector<double> deltas);

  std::span<const double> deltas() const { return deltas_; }
  double magnitude() const { return magnitude_; }
  std::size_t size() const { return deltas_.size(); }

  // Rechecks the invariants against another base of the same size.
  void ValidateAgainst(const Distribution& base) const;

 private:
  std::vector<double> deltas_;
  double magnitude_;
};

// p'_i = p_i (1 + delta_i). total_variation(p, result) == magnitude / 2.
Distribution perturb(const Distribution& p, const PerturbationVector& v);

namespace family {

struct Uniform {
  std::size_t k;
};

// Mass k^-exponent at `position`, the remainder spread evenly.
struct Spike {
  std::size_t k;
  double exponent;
  std::size_t position = 0;
};

// Independent masses drawn in [1/(ratio k), ratio/k], then renormalized.
struct AlmostUniform {
  std::size_t k;
  double ratio;
  std::uint64_t seed;
};

}  // namespace family

using FamilySpec =
    std::variant<family::Uniform, family::Spike, family::AlmostUniform>;

Distribution gen_family(const FamilySpec& spec);

// Text format: one probability per line, decimal or scientific notation.
// Blank lines and lines starting with '#' are skipped. The values must
// already form a valid Distribution.
Distribution parse_distribution(std::istream& in);
Distribution read_distribution_file(const std::filesystem::path& path);

}  // namespace renyi

#endif  // RENYI_DISTRIBUTION_H_
