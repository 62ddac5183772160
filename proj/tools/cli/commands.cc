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

#include "cli/commands.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "cli/verify.h"
#include "json.hpp"
#include "renyi/bounds.h"
#include "renyi/distribution.h"
#include "renyi/divergence.h"
#include "renyi/error.h"
#include "renyi/estimators.h"
#include "renyi/experiment.h"
#include "renyi/histogram.h"
#include "renyi/monitor.h"
#include "renyi/serialization.h"

namespace renyi::cli {

namespace {

using Json = nlohmann::ordered_json;

Json Number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return RoundSignificant(value);
}

std::string_view Trim(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

template <typename Int>
std::optional<Int> ParseInteger(std::string_view text) {
  Int value{};
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return {};
  return value;
}

// One nonnegative symbol index per line; '#' lines and blanks skipped.
Histogram ReadSamples(const std::string& path, std::size_t k) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::vector<std::size_t> symbols;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto symbol = ParseInteger<std::size_t>(text);
    if (!symbol) {
      throw Error(ErrorCode::kParseError,
                  path + ":" + std::to_string(line_number) +
                      ": not a symbol index: '" + line + "'");
    }
    symbols.push_back(*symbol);
  }
  if (symbols.empty()) {
    throw Error(ErrorCode::kInvalidCount, path + " contains no samples");
  }
  return Histogram::FromSymbols(symbols, k);
}

// A distribution given either as a file or as a family spec at size k.
struct DistributionSource {
  std::string file;
  std::string family;

  bool given() const { return !file.empty() || !family.empty(); }
};

Distribution ResolveQ(const DistributionSource& source, std::uint64_t k,
                      std::uint64_t seed) {
  if (!source.file.empty()) return read_distribution_file(source.file);
  if (source.family.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no reference distribution given");
  }
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "--k must be >= 2");
  return ResolveReference(DistributionChoice::Parse(source.family), k, seed);
}

Distribution ResolveP(const DistributionSource& source,
                      const DistributionSource& q_source, const Distribution& q,
                      const DivergenceOrder& order, std::uint64_t seed) {
  if (!source.file.empty()) return read_distribution_file(source.file);
  const DistributionChoice q_choice =
      q_source.family.empty() ? DistributionChoice{}
                              : DistributionChoice::Parse(q_source.family);
  return ResolveSampled(DistributionChoice::Parse(source.family), q_choice, q,
                        order, seed);
}

void AddOrderOptions(CLI::App* cmd, double& alpha, std::string& method,
                     std::string& normalization) {
  cmd->add_option("--alpha", alpha, "Divergence order (> 1)")
      ->capture_default_str();
  cmd->add_option("--method", method, "plugin | corrected")
      ->capture_default_str();
  cmd->add_option("--normalization", normalization,
                  "exact | poissonized (corrected method only)")
      ->capture_default_str();
}

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
  std::string q_file;
  std::string samples;
  DistributionSource p;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  double alpha = 2;
  std::string method = "corrected";
  std::string normalization = "exact";
  unsigned groups = 1;
};

int RunEstimate(const EstimateArgs& a, bool seeded, std::ostream& out,
                std::ostream& err) {
  const Distribution q = read_distribution_file(a.q_file);
  const DivergenceOrder order(a.alpha);
  const EstimatorConfig config(ParseMethod(a.method),
                               ParseNormalization(a.normalization), order);

  const int sources = !a.samples.empty() + a.p.given();
  if (sources != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "give exactly one of --samples, --p, --p-family");
  }
  DivergenceEstimate estimate;
  std::uint64_t n = 0;
  if (!a.samples.empty()) {
    const Histogram h = ReadSamples(a.samples, q.size());
    n = h.total();
    estimate = estimate_divergence(h, q, config);
  } else {
    if (a.n == 0) throw Error(ErrorCode::kInvalidCount, "--n must be >= 1");
    if (!seeded) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--seed is required when sampling");
    }
    const Sampler sampler(ResolveP(a.p, {}, q, order, a.seed));
    if (sampler.distribution().size() != q.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "p and q differ in size");
    }
    n = a.n;
    if (a.groups == 1) {
      estimate = estimate_divergence(DrawFor(sampler, config, a.n, a.seed), q,
                                     config);
    } else {
      estimate = median_amplify(sampler, q, config, a.n, a.groups, a.seed);
    }
  }
  if (!estimate.defined()) {
    err << "undefined estimate: the power-sum estimate is zero because every "
           "symbol count is below alpha = "
        << a.alpha << '\n';
    return kExitUndefined;
  }
  Json j;
  j["estimate_bits"] = Number(*estimate.bits);
  j["method"] = MethodName(config.method());
  j["n"] = n;
  j["alpha"] = Number(a.alpha);
  out << j.dump() << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------- sweep

struct SweepArgs {
  SweepConfig config;
  std::string method = "corrected";
  std::string normalization = "exact";
  std::string p_family = "witness";
  std::string q_family = "uniform";
  std::uint64_t seed = 0;
  std::string output;
};

int RunSweep(SweepArgs a, bool seeded, std::ostream& out) {
  a.config.method = ParseMethod(a.method);
  a.config.normalization = ParseNormalization(a.normalization);
  a.config.p = DistributionChoice::Parse(a.p_family);
  a.config.q = DistributionChoice::Parse(a.q_family);
  if (seeded) a.config.master_seed = a.seed;
  const std::vector<SweepRow> rows = run_sweep(a.config);
  if (a.output.empty()) {
    WriteSweepCsv(out, rows);
  } else {
    std::ofstream file(a.output);
    if (!file) throw Error(ErrorCode::kParseError, "cannot write " + a.output);
    WriteSweepCsv(file, rows);
  }
  return kExitOk;
}

// -------------------------------------------------------------- lowerbound

struct LowerBoundArgs {
  DistributionSource q;
  std::uint64_t k = 0;
  double alpha = 2;
  double spike = 0;
  bool check = false;
  std::uint64_t trials = 200;
  double delta = 0.5;
  std::uint64_t seed = 0;
};

int RunLowerBound(const LowerBoundArgs& a, bool seeded, std::ostream& out) {
  const DivergenceOrder order(a.alpha);
  if (a.spike > 0) {
    const SpikeWitness w = witness_instance_spike(a.k, a.spike, order);
    Json j;
    j["p"] = Json::array();
    j["q"] = Json::array();
    for (double x : w.p.probs()) j["p"].push_back(Number(x));
    for (double x : w.q.probs()) j["q"].push_back(Number(x));
    j["c"] = Number(w.c);
    j["d"] = Number(w.d);
    j["c1"] = Number(w.constants.c1);
    j["c2"] = Number(w.constants.c2);
    j["implied_n"] = Number(w.implied_n);
    out << j.dump() << '\n';
    return kExitOk;
  }

  const Distribution q = ResolveQ(a.q, a.k, a.seed);
  const WitnessPair pair = witness_pair_uniform(q, order);
  Json j = Json::parse(ToJson(pair));
  if (a.check) {
    if (!seeded) {
      throw Error(ErrorCode::kInvalidArgument, "--check requires --seed");
    }
    const EstimatorConfig config(Method::kCorrected, Normalization::kExact,
                                 order);
    const auto n = static_cast<std::uint64_t>(
        std::max<long long>(1, std::llround(pair.implied_n / 10.0)));
    const double fail_p =
        measure_failure(Sampler(pair.p), q, config, n, a.delta, a.trials, a.seed)
            .failure_probability;
    const double fail_p_prime = measure_failure(Sampler(pair.p_prime), q,
                                                config, n, a.delta, a.trials,
                                                a.seed)
                                    .failure_probability;
    j["check_n"] = n;
    j["check_trials"] = a.trials;
    j["check_failure_p"] = Number(fail_p);
    j["check_failure_p_prime"] = Number(fail_p_prime);
    j["check_passed"] = std::max(fail_p, fail_p_prime) > 1.0 / 3.0;
  }
  out << j.dump() << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------ bounds

struct BoundsArgs {
  DistributionSource p;
  DistributionSource q;
  std::uint64_t k = 0;
  double alpha = 2;
  std::uint64_t n = 1000;
  double delta = 0.5;
  double epsilon = 1.0 / 3.0;
  double slack = kDefaultSlack;
  std::uint64_t seed = 0;
};

int RunBounds(const BoundsArgs& a, std::ostream& out) {
  const DivergenceOrder order(a.alpha);
  const Distribution q = ResolveQ(a.q, a.k, a.seed);
  if (!a.p.given()) {
    throw Error(ErrorCode::kInvalidArgument, "give --p or --p-family");
  }
  const Distribution p = ResolveP(a.p, a.q, q, order, a.seed);
  const PerturbationVector v = balanced_perturbation(p, q.argmin());
  out << ToJson(make_bound_report(p, q, order, a.n, a.delta, a.epsilon,
                                  a.slack, v))
      << '\n';
  return kExitOk;
}

// ----------------------------------------------------------------- monitor

struct MonitorArgs {
  std::string reference;
  std::string input;
  MonitorConfig config;
};

int RunMonitor(const MonitorArgs& a, std::istream& stdin_stream,
               std::ostream& out) {
  StreamMonitor monitor(read_distribution_file(a.reference), a.config);
  std::ifstream file;
  if (!a.input.empty()) {
    file.open(a.input);
    if (!file) throw Error(ErrorCode::kParseError, "cannot open " + a.input);
  }
  std::istream& in = a.input.empty() ? stdin_stream : file;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view text = Trim(line);
    if (text.empty()) continue;
    std::optional<MonitorRecord> record;
    if (const auto symbol = ParseInteger<std::int64_t>(text)) {
      record = monitor.Push(*symbol);
    } else {
      monitor.PushInvalid();
    }
    if (!record) continue;
    Json j;
    j["position"] = record->position;
    j["estimate_bits"] = record->estimate_bits ? Number(*record->estimate_bits)
                                               : Json(nullptr);
    j["alarm"] = record->alarm;
    j["invalid_symbols"] = record->invalid_symbols;
    out << j.dump() << '\n';
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Renyi divergence estimation against a known reference"};
  app.set_config("--config", "", "key = value config file; flags win");
  app.require_subcommand(1);
  app.fallthrough();

  EstimateArgs estimate;
  auto* estimate_cmd =
      app.add_subcommand("estimate", "Estimate D_alpha(p || q) from samples");
  estimate_cmd->add_option("--q", estimate.q_file, "Reference distribution file")
      ->required();
  estimate_cmd->add_option("--samples", estimate.samples,
                           "Sample file, one symbol index per line");
  estimate_cmd->add_option("--p", estimate.p.file,
                           "Distribution file to draw samples from");
  estimate_cmd->add_option("--p-family", estimate.p.family,
                           "uniform | spike:<c> | almost_uniform:<r> | witness");
  estimate_cmd->add_option("--n", estimate.n, "Samples to draw");
  auto* estimate_seed =
      estimate_cmd->add_option("--seed", estimate.seed, "Sampling seed");
  estimate_cmd->add_option("--groups", estimate.groups,
                           "Odd number of median-trick groups")
      ->capture_default_str();
  AddOrderOptions(estimate_cmd, estimate.alpha, estimate.method,
                  estimate.normalization);

  SweepArgs sweep;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Error probability over k and n grids (CSV)");
  AddOrderOptions(sweep_cmd, sweep.config.alpha, sweep.method,
                  sweep.normalization);
  sweep_cmd->add_option("--k-min", sweep.config.k_min)->capture_default_str();
  sweep_cmd->add_option("--k-max", sweep.config.k_max, "k doubles up to this")
      ->capture_default_str();
  sweep_cmd->add_option("--n-min", sweep.config.n_min)->capture_default_str();
  sweep_cmd->add_option("--n-max", sweep.config.n_max)->capture_default_str();
  sweep_cmd->add_option("--n-per-octave", sweep.config.n_per_octave)
      ->capture_default_str();
  sweep_cmd->add_option("--p-family", sweep.p_family)->capture_default_str();
  sweep_cmd->add_option("--q-family", sweep.q_family)->capture_default_str();
  sweep_cmd->add_option("--delta", sweep.config.delta, "Accuracy in bits")
      ->capture_default_str();
  sweep_cmd->add_option("--epsilon", sweep.config.epsilon)
      ->capture_default_str();
  sweep_cmd->add_option("--slack", sweep.config.slack)->capture_default_str();
  sweep_cmd->add_option("--trials", sweep.config.trials)->capture_default_str();
  sweep_cmd->add_option("--threads", sweep.config.threads,
                        "Worker threads (0: hardware concurrency)");
  auto* sweep_seed =
      sweep_cmd->add_option("--seed", sweep.seed, "Master seed (required)");
  sweep_cmd->add_option("--output", sweep.output, "CSV path (default stdout)");

  LowerBoundArgs lower;
  auto* lower_cmd = app.add_subcommand(
      "lowerbound", "Witness pair certifying a sample-size lower bound");
  lower_cmd->add_option("--q", lower.q.file, "Reference distribution file");
  lower_cmd->add_option("--q-family", lower.q.family,
                        "uniform | spike:<c> | almost_uniform:<r>");
  lower_cmd->add_option("--k", lower.k, "Alphabet size for --q-family/--spike");
  lower_cmd->add_option("--alpha", lower.alpha)->capture_default_str();
  lower_cmd->add_option("--spike", lower.spike,
                        "Emit the spike-reference instance with exponent c");
  lower_cmd->add_flag("--check", lower.check,
                      "Run the distinguishing experiment at n = implied_n/10");
  lower_cmd->add_option("--trials", lower.trials)->capture_default_str();
  lower_cmd->add_option("--delta", lower.delta)->capture_default_str();
  auto* lower_seed = lower_cmd->add_option("--seed", lower.seed);

  BoundsArgs bounds;
  auto* bounds_cmd =
      app.add_subcommand("bounds", "Upper-bound condition and lower-bound constants");
  bounds_cmd->add_option("--p", bounds.p.file);
  bounds_cmd->add_option("--p-family", bounds.p.family);
  bounds_cmd->add_option("--q", bounds.q.file);
  bounds_cmd->add_option("--q-family", bounds.q.family);
  bounds_cmd->add_option("--k", bounds.k);
  bounds_cmd->add_option("--alpha", bounds.alpha)->capture_default_str();
  bounds_cmd->add_option("--n", bounds.n)->capture_default_str();
  bounds_cmd->add_option("--delta", bounds.delta)->capture_default_str();
  bounds_cmd->add_option("--epsilon", bounds.epsilon)->capture_default_str();
  bounds_cmd->add_option("--slack", bounds.slack)->capture_default_str();
  bounds_cmd->add_option("--seed", bounds.seed)->capture_default_str();

  bool mutate = false;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check estimators against exact enumeration");
  verify_cmd->add_flag("--mutate-normalization", mutate)->group("");

  MonitorArgs monitor;
  auto* monitor_cmd =
      app.add_subcommand("monitor", "Sliding-window divergence alarms on a stream");
  monitor_cmd->add_option("--reference", monitor.reference)->required();
  monitor_cmd->add_option("--input", monitor.input, "Stream file (default stdin)");
  monitor_cmd->add_option("--window", monitor.config.window_size)
      ->capture_default_str();
  monitor_cmd->add_option("--stride", monitor.config.stride)
      ->capture_default_str();
  monitor_cmd->add_option("--threshold", monitor.config.threshold, "Bits")
      ->capture_default_str();
  monitor_cmd->add_option("--alpha", monitor.config.alpha)
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*estimate_cmd) {
      return RunEstimate(estimate, estimate_seed->count() > 0, out, err);
    }
    if (*sweep_cmd) return RunSweep(sweep, sweep_seed->count() > 0, out);
    if (*lower_cmd) return RunLowerBound(lower, lower_seed->count() > 0, out);
    if (*bounds_cmd) return RunBounds(bounds, out);
    if (*verify_cmd) {
      return PrintVerification(RunVerification(mutate), out) ? kExitOk
                                                             : kExitInputError;
    }
    if (*monitor_cmd) return RunMonitor(monitor, in, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace renyi::cli
