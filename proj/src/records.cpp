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

#include "catport/records.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "catport/json_io.hpp"

namespace catport {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  if (res.ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw std::invalid_argument("CSV row width mismatch");
  rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  emit(header_);
  for (const auto& r : rows_) emit(r);
  return out;
}

CsvTable teleport_table(const TeleportRun& run, const RunContext& ctx) {
  CsvTable table(kTeleportColumns);
  const auto& t = ctx.target;
  auto row = [&](const std::string& branch, double p, double f) {
    table.add_row({format_number(ctx.alpha), format_number(ctx.beta), format_number(t.gamma),
                   format_number(t.c_a.real()), format_number(t.c_a.imag()),
                   format_number(t.c_b.real()), format_number(t.c_b.imag()), run.path, branch,
                   format_number(p), format_number(f), format_number(run.average_fidelity),
                   format_number(run.inconclusive_rate), std::to_string(run.seed)});
  };
  for (const auto& b : run.branches) {
    row(b.outcome.name, b.outcome.probability, b.branch_fidelity);
  }
  row("aggregate", run.probability_sum, run.average_fidelity);
  return table;
}

nlohmann::json teleport_json(const TeleportRun& run, const RunContext& ctx) {
  nlohmann::json branches = nlohmann::json::array();
  for (const auto& b : run.branches) {
    nlohmann::json jb{{"branch", b.outcome.name},
                      {"eigen_bits", {b.outcome.eigen_bits.phi, b.outcome.eigen_bits.plus}},
                      {"probability", b.outcome.probability},
                      {"correction", correction_name(b.correction)},
                      {"fidelity", b.branch_fidelity},
                      {"collapsed_bob", to_json(b.outcome.collapsed_bob)},
                      {"bob_after", to_json(b.bob_after)}};
    if (b.outcome.signs) jb["signs"] = *b.outcome.signs;
    branches.push_back(std::move(jb));
  }
  return {{"path", run.path},
          {"mode", run.mode == RunMode::kEnumerate ? "enumerate" : "sample"},
          {"seed", run.seed},
          {"alpha", ctx.alpha},
          {"beta", ctx.beta},
          {"gamma", ctx.target.gamma},
          {"c_a", complex_to_json(ctx.target.c_a)},
          {"c_b", complex_to_json(ctx.target.c_b)},
          {"avg_fidelity", run.average_fidelity},
          {"inconclusive_rate", run.inconclusive_rate},
          {"probability_sum", run.probability_sum},
          {"branches", std::move(branches)}};
}

}  // namespace catport
