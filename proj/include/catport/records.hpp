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

// Machine-readable records. CSV: '.' decimal point regardless of locale, LF
// line endings, mandatory header row, shortest round-trip number formatting.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "catport/protocol.hpp"

namespace catport {

std::string format_number(double x);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  std::size_t rows() const { return rows_.size(); }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct RunContext {
  double alpha;
  double beta;
  TargetState target;
};

inline const std::vector<std::string> kTeleportColumns{
    "alpha", "beta",   "gamma",       "c_a_re",       "c_a_im",
    "c_b_re", "c_b_im", "path",       "branch",       "probability",
    "fidelity", "avg_fidelity", "inconclusive_rate", "seed"};

/// One row per branch plus a trailing "aggregate" row (probability column
/// holds the outcome-probability sum, fidelity column the average fidelity).
CsvTable teleport_table(const TeleportRun& run, const RunContext& ctx);
nlohmann::json teleport_json(const TeleportRun& run, const RunContext& ctx);

}  // namespace catport
