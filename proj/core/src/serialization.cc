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

#include "renyi/serialization.h"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "renyi/error.h"

namespace renyi {

namespace {

using nlohmann::json;

json Number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return RoundSignificant(value);
}

json Probabilities(const Distribution& d) {
  json out = json::array();
  for (double x : d.probs()) out.push_back(Number(x));
  return out;
}

Distribution ProbabilitiesFrom(const json& j) {
  return Distribution(j.get<std::vector<double>>());
}

}  // namespace

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

double RoundSignificant(double value) {
  if (!std::isfinite(value)) return value;
  return std::stod(FormatNumber(value));
}

std::string ToJson(const BoundReport& report) {
  json j;
  j["theorem1_lhs"] = Number(report.upper_lhs);
  j["sufficient_n"] = report.sufficient_n;
  j["c1"] = Number(report.c1);
  j["c2"] = Number(report.c2);
  j["lower_n"] = Number(report.lower_n);
  return j.dump();
}

std::string ToJson(const WitnessPair& pair) {
  json j;
  j["p"] = Probabilities(pair.p);
  j["p_prime"] = Probabilities(pair.p_prime);
  j["q"] = Probabilities(pair.q);
  j["tv"] = Number(pair.tv);
  j["divergence_gap"] = Number(pair.divergence_gap);
  j["implied_n"] = Number(pair.implied_n);
  return j.dump();
}

WitnessPair WitnessPairFromJson(const std::string& text) {
  try {
    const json j = json::parse(text);
    return WitnessPair{ProbabilitiesFrom(j.at("p")),
                       ProbabilitiesFrom(j.at("p_prime")),
                       ProbabilitiesFrom(j.at("q")),
                       j.at("tv").get<double>(),
                       j.at("divergence_gap").get<double>(),
                       j.at("implied_n").get<double>(),
                       {}};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace renyi
