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

// Subcommand implementations. Each returns an exit code and the document to
// write (CSV or JSON); human-readable summaries go to `log`.

#include <cstdint>
#include <ostream>
#include <string>

#include "catport/config.hpp"
#include "catport/protocol.hpp"

namespace catport {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitConfigError = 2 };

struct CommandResult {
  int exit_code = kExitOk;
  std::string document;
};

/// splitmix64 of (seed, index); per-grid-point generator seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Draws `trials` outcomes from an enumerated run (branches plus, for the
/// ideal path, the inconclusive weight) and returns a run whose probability
/// column holds empirical frequencies and whose aggregates are sample means.
TeleportRun sample_run(const TeleportRun& enumerated, std::size_t trials, std::uint64_t seed);

CommandResult cmd_validate(bool corrupt_truncation, std::ostream& log);
CommandResult cmd_bell(const ExperimentConfig& cfg, std::ostream& log);
CommandResult cmd_eigen(const ExperimentConfig& cfg, std::ostream& log);
CommandResult cmd_teleport(const ExperimentConfig& cfg, std::ostream& log);
CommandResult cmd_sweep(const ExperimentConfig& cfg, std::ostream& log);
CommandResult cmd_homodyne(const ExperimentConfig& cfg, std::ostream& log);

/// Dispatches by name and maps configuration/precondition exceptions to
/// kExitConfigError with a diagnostic on `log`.
CommandResult run_command(const std::string& name, const ExperimentConfig& cfg,
                          std::ostream& log);

}  // namespace catport
