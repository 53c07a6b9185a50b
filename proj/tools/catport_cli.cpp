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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "catport/config.hpp"
#include "catport/lab.hpp"

using namespace catport;

namespace {

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::size_t> dims;
};

void add_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON experiment config")->check(CLI::ExistingFile);
  sub->add_option("--seed", f.seed, "RNG seed");
  sub->add_option("--out", f.out, "output path (default stdout)");
  sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--dims", f.dims, "Fock truncation override");
}

int emit(const CommandResult& res, const std::string& out_path) {
  if (res.document.empty()) return res.exit_code;
  if (out_path.empty()) {
    std::cout << res.document << std::flush;
    return res.exit_code;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  out << res.document;
  if (!out) {
    std::cerr << "config error: cannot write '" << out_path << "'\n";
    return kExitConfigError;
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catport: coherent-state teleportation laboratory"};
  app.require_subcommand(1, 1);

  Flags flags;
  bool corrupt = false;
  auto* validate_cmd = app.add_subcommand("validate", "run the invariant suites");
  validate_cmd->add_flag("--self-test-corrupt-truncation", corrupt,
                         "negative control: dims=3 at alpha=2");
  add_flags(validate_cmd, flags);
  for (const char* name : {"bell", "eigen", "teleport", "sweep", "homodyne"}) {
    add_flags(app.add_subcommand(name, std::string(name) + " experiment"), flags);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  ExperimentConfig cfg;
  try {
    if (!flags.config.empty()) cfg = load_config(flags.config);
    if (flags.seed) cfg.seed = *flags.seed;
    if (flags.out) cfg.out = *flags.out;
    if (flags.format) cfg.format = *flags.format;
    if (flags.dims) cfg.dims = *flags.dims;
    validate(cfg);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << '\n';
    return kExitConfigError;
  }

  const CommandResult res =
      name == "validate" ? cmd_validate(corrupt, std::cerr) : run_command(name, cfg, std::cerr);
  return emit(res, cfg.out);
}
