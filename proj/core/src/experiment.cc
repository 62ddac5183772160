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

#include "renyi/experiment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "renyi/bounds.h"
#include "renyi/error.h"
#include "renyi/serialization.h"

namespace renyi {

void ParallelFor(std::size_t count, const std::function<void(std::size_t)>& body,
                 unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

FailureSummary measure_failure(const Sampler& p, const Distribution& q,
                               const EstimatorConfig& config, std::uint64_t n,
                               double delta, std::uint64_t trials,
                               std::uint64_t master_seed, unsigned groups,
                               unsigned threads) {
  if (trials == 0) throw Error(ErrorCode::kInvalidCount, "trials must be >= 1");
  const double truth = renyi_divergence(p.distribution(), q, config.order());
  std::vector<DivergenceEstimate> estimates(trials);
  ParallelFor(trials, [&](std::size_t t) {
    if (groups == 1) {
      const Histogram h = DrawFor(p, config, n, TrialSeed(master_seed, t));
      estimates[t] = estimate_divergence(h, q, config);
    } else {
      estimates[t] = median_amplify(p, q, config, n, groups,
                                    master_seed ^ (std::uint64_t{t} << 16));
    }
  }, threads);

  FailureSummary out;
  out.trials = trials;
  double abs_error = 0;
  std::uint64_t defined = 0;
  for (const DivergenceEstimate& e : estimates) {
    if (!e.defined()) {
      ++out.undefined;
      ++out.failures;
      continue;
    }
    const double err = std::fabs(*e.bits - truth);
    abs_error += err;
    ++defined;
    if (err > delta) ++out.failures;
  }
  out.failure_probability =
      static_cast<double>(out.failures) / static_cast<double>(trials);
  out.mean_abs_error_bits = defined == 0
                                ? std::numeric_limits<double>::quiet_NaN()
                                : abs_error / static_cast<double>(defined);
  return out;
}

SampleMoments SummarizeSamples(std::span<const double> values) {
  SampleMoments out;
  out.trials = values.size();
  if (values.empty()) return out;
  const double count = static_cast<double>(values.size());
  double sum = 0;
  for (double v : values) sum += v;
  out.mean = sum / count;
  double m2 = 0, m4 = 0;
  for (double v : values) {
    const double d = v - out.mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  if (values.size() < 2) return out;
  out.variance = m2 / (count - 1.0);
  out.mean_se = std::sqrt(out.variance / count);
  const double central2 = m2 / count;
  const double central4 = m4 / count;
  out.variance_se =
      std::sqrt(std::max(0.0, central4 - central2 * central2) / count);
  return out;
}

std::vector<SampleMoments> measure_power_sum_moments(
    const Sampler& p, const Distribution& q,
    std::span<const EstimatorConfig> configs, std::uint64_t n,
    std::uint64_t trials, std::uint64_t master_seed) {
  if (configs.empty()) return {};
  std::vector<std::vector<double>> values(configs.size(),
                                          std::vector<double>(trials));
  ParallelFor(trials, [&](std::size_t t) {
    const Histogram h = DrawFor(p, configs[0], n, TrialSeed(master_seed, t));
    for (std::size_t c = 0; c < configs.size(); ++c) {
      values[c][t] = estimate_power_sum(h, q, configs[c]);
    }
  });
  std::vector<SampleMoments> out;
  out.reserve(configs.size());
  for (const auto& v : values) out.push_back(SummarizeSamples(v));
  return out;
}

std::vector<std::uint64_t> GeometricGrid(std::uint64_t lo, std::uint64_t hi,
                                         unsigned per_octave) {
  if (lo == 0 || hi < lo || per_octave == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "geometric grid needs 1 <= lo <= hi and per_octave >= 1");
  }
  std::set<std::uint64_t> values;
  for (unsigned j = 0;; ++j) {
    const double x = static_cast<double>(lo) *
                     std::exp2(static_cast<double>(j) / per_octave);
    const auto v = static_cast<std::uint64_t>(std::llround(x));
    if (v > hi) break;
    values.insert(v);
  }
  return {values.begin(), values.end()};
}

DistributionChoice DistributionChoice::Parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  double parameter = 0;
  const bool has_parameter = colon != std::string_view::npos;
  if (has_parameter) {
    const std::string_view rest = text.substr(colon + 1);
    const auto [ptr, ec] =
        std::from_chars(rest.data(), rest.data() + rest.size(), parameter);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
      throw Error(ErrorCode::kParseError,
                  "bad family parameter in '" + std::string(text) + "'");
    }
  }
  using Kind = DistributionChoice::Kind;
  struct Entry {
    std::string_view name;
    Kind kind;
    bool needs_parameter;
  };
  static constexpr Entry kEntries[] = {
      {"uniform", Kind::kUniform, false},
      {"spike", Kind::kSpike, true},
      {"almost_uniform", Kind::kAlmostUniform, true},
      {"witness", Kind::kUniformWitness, false},
      {"spike_witness", Kind::kSpikeWitness, false},
  };
  for (const Entry& e : kEntries) {
    if (e.name != name) continue;
    if (e.needs_parameter != has_parameter) {
      throw Error(ErrorCode::kParseError,
                  "family '" + std::string(name) +
                      (e.needs_parameter ? "' needs a :<value> parameter"
                                         : "' takes no parameter"));
    }
    return DistributionChoice{e.kind, parameter};
  }
  throw Error(ErrorCode::kParseError,
              "unknown family '" + std::string(text) + "'");
}

std::string DistributionChoice::ToString() const {
  switch (kind) {
    case Kind::kUniform: return "uniform";
    case Kind::kSpike: return "spike:" + FormatNumber(parameter);
    case Kind::kAlmostUniform: return "almost_uniform:" + FormatNumber(parameter);
    case Kind::kUniformWitness: return "witness";
    case Kind::kSpikeWitness: return "spike_witness";
  }
  return "unknown";
}

Distribution ResolveReference(const DistributionChoice& choice, std::size_t k,
                              std::uint64_t seed) {
  using Kind = DistributionChoice::Kind;
  switch (choice.kind) {
    case Kind::kUniform:
      return gen_family(family::Uniform{k});
    case Kind::kSpike:
      return gen_family(family::Spike{k, choice.parameter, 0});
    case Kind::kAlmostUniform:
      return gen_family(family::AlmostUniform{k, choice.parameter, seed});
    case Kind::kUniformWitness:
    case Kind::kSpikeWitness:
      break;
  }
  throw Error(ErrorCode::kInvalidFamily,
              "'" + choice.ToString() + "' cannot serve as a reference");
}

Distribution ResolveSampled(const DistributionChoice& choice,
                            const DistributionChoice& reference_choice,
                            const Distribution& q, const DivergenceOrder& order,
                            std::uint64_t seed) {
  using Kind = DistributionChoice::Kind;
  switch (choice.kind) {
    case Kind::kUniformWitness:
      return witness_pair_uniform(q, order).p_prime;
    case Kind::kSpikeWitness:
      if (reference_choice.kind != Kind::kSpike) {
        throw Error(ErrorCode::kInvalidFamily,
                    "spike_witness needs a spike reference");
      }
      return witness_instance_spike(q.size(), reference_choice.parameter, order)
          .p;
    default:
      // Offset so p and q never share an almost-uniform draw.
      return ResolveReference(choice, q.size(), seed + 1);
  }
}

void SweepConfig::Validate() const {
  const auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, what);
  };
  EstimatorConfig(method, normalization, DivergenceOrder(alpha));
  if (k_min < 2 || k_max < k_min) fail("need 2 <= k_min <= k_max");
  if (n_min < 1 || n_max < n_min) fail("need 1 <= n_min <= n_max");
  if (n_per_octave < 1) fail("n_per_octave must be >= 1");
  if (!(delta > 0)) fail("delta must be > 0");
  if (!(epsilon > 0 && epsilon < 1)) fail("epsilon must lie in (0, 1)");
  if (!(slack > 0)) fail("slack must be > 0");
  if (trials < 1) fail("trials must be >= 1");
  if (!master_seed) fail("a master seed is required");
  if (p.kind != DistributionChoice::Kind::kUniformWitness &&
      p.kind != DistributionChoice::Kind::kSpikeWitness) {
    ResolveReference(p, k_min, 0);
  }
  ResolveReference(q, k_min, 0);
}

std::vector<std::uint64_t> SweepConfig::KValues() const {
  std::vector<std::uint64_t> ks;
  for (std::uint64_t k = k_min; k <= k_max; k *= 2) ks.push_back(k);
  return ks;
}

std::vector<std::uint64_t> SweepConfig::NValues() const {
  return GeometricGrid(n_min, n_max, n_per_octave);
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.Validate();
  const DivergenceOrder order(config.alpha);
  const EstimatorConfig estimator(config.method, config.normalization, order);
  const std::uint64_t seed = *config.master_seed;
  const bool integer_order = order.is_integer() && order.alpha() >= 2;

  std::vector<SweepRow> rows;
  for (std::uint64_t k : config.KValues()) {
    const Distribution q = ResolveReference(config.q, k, seed);
    const Sampler sampler(ResolveSampled(config.p, config.q, q, order, seed));
    const double implied = witness_pair_uniform(q, order).implied_n;
    std::optional<std::uint64_t> enough;
    if (integer_order) {
      enough = sufficient_n(sampler.distribution(), q, order, config.delta,
                            config.epsilon, config.slack);
    }
    for (std::uint64_t n : config.NValues()) {
      const FailureSummary s =
          measure_failure(sampler, q, estimator, n, config.delta,
                          config.trials, seed, 1, config.threads);
      SweepRow row;
      row.k = k;
      row.n = n;
      row.trials = s.trials;
      row.empirical_error_prob = s.failure_probability;
      row.mean_abs_error_bits = s.mean_abs_error_bits;
      row.theorem1_lhs =
          integer_order
              ? sufficient_condition_lhs(sampler.distribution(), q, order, n)
              : std::numeric_limits<double>::quiet_NaN();
      row.sufficient_n = enough;
      row.implied_lower_n = implied;
      rows.push_back(row);
    }
  }
  return rows;
}

void WriteSweepCsv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << r.k << ',' << r.n << ',' << r.trials << ','
        << FormatNumber(r.empirical_error_prob) << ','
        << FormatNumber(r.mean_abs_error_bits) << ','
        << FormatNumber(r.theorem1_lhs) << ','
        << (r.sufficient_n ? std::to_string(*r.sufficient_n) : "nan") << ','
        << FormatNumber(r.implied_lower_n) << '\n';
  }
}

std::map<std::uint64_t, std::optional<std::uint64_t>> EmpiricalComplexity(
    std::span<const SweepRow> rows, double threshold) {
  std::map<std::uint64_t, std::optional<std::uint64_t>> out;
  for (const SweepRow& r : rows) {
    auto& best = out[r.k];
    if (r.empirical_error_prob <= threshold && (!best || r.n < *best)) {
      best = r.n;
    }
  }
  return out;
}

}  // namespace renyi
