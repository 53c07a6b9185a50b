// Copyright 2026 The catport Authors
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

#pragma once

// Strict experiment configuration. Unknown keys and type mismatches are
// rejected with a diagnostic naming the key and its line.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "catport/protocol.hpp"

namespace catport {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SweepKind { kFidelity, kResidual };

struct ExperimentConfig {
  double alpha = 3.0;
  double beta = 3.0;
  double gamma = 3.0;
  Complex c_a{0.7071067811865476, 0.0};
  Complex c_b{0.7071067811865476, 0.0};
  FrequencyRow freq_ab;
  FrequencyRow freq_ta;
  std::string path = "ideal";  // ideal | homodyne
  RunMode mode = RunMode::kEnumerate;
  CollapseMode collapse = CollapseMode::kAuto;
  DisplacementPhase displacement_phase = DisplacementPhase::kQuarterPi;
  std::size_t dims = 0;  // 0: truncation rule
  BellLabel label = BellLabel::kPhiPlus;
  BellOperator op = BellOperator::kParityBDisplaceA;
  unsigned n = 0;
  unsigned m = 0;
  SweepKind sweep = SweepKind::kFidelity;
  std::vector<double> grid{2.0, 4.0, 8.0};
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::string out;  // empty: stdout
  std::string format = "csv";

  TargetState target() const { return {c_a, c_b, gamma}; }

  bool operator==(const ExperimentConfig&) const = default;
};

std::string_view operator_name(BellOperator op);
std::string_view sweep_name(SweepKind k);

/// Parses and validates; throws ConfigError.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

nlohmann::json to_json(const ExperimentConfig& cfg);
std::string serialize(const ExperimentConfig& cfg);

/// Range and consistency checks shared by the parser and CLI overrides.
void validate(const ExperimentConfig& cfg);

}  // namespace catport
