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

// Cross-module invariant suites behind `catport validate`.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "catport/protocol.hpp"

namespace catport {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct PipelineReport {
  std::size_t count = 0;
  double worst_infidelity = 0.0;
  double worst_leakage = 0.0;
};

/// Random two-mode states pushed through random sequences of displacement,
/// parity, rotation and cross-Kerr(pi) in both backends. Amplitudes stay
/// within |amp| <= 3; Fock dims follow the truncation rule unless `dim` > 0.
PipelineReport backend_equivalence(std::size_t count, std::uint64_t seed, std::size_t dim = 0);

/// Branch fidelities of the ideal path recomputed entirely in the Fock
/// backend: Lowdin vectors, partial contraction and corrections are dense.
std::array<double, 4> fock_ideal_branch_fidelities(
    const TargetState& target, double alpha, double beta, std::size_t dim = 0,
    DisplacementPhase phase = DisplacementPhase::kQuarterPi);

struct ValidationOptions {
  bool corrupt_truncation = false;  // negative control: dims = 3 at alpha = 2
  std::uint64_t seed = 7;
  std::size_t pipelines = 64;
};

std::vector<CheckResult> run_validation(const ValidationOptions& options = {});

/// Fixed-width pass/fail table.
std::string format_checks(const std::vector<CheckResult>& checks);

}  // namespace catport
