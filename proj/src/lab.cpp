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

#include "catport/lab.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <variant>

#include "catport/errors.hpp"
#include "catport/fock.hpp"
#include "catport/records.hpp"
#include "catport/validation.hpp"

namespace catport {

namespace {

using Cell = std::variant<double, std::string, std::uint64_t>;

// Rows rendered either as CSV or as a JSON array of objects.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<Cell> row) { rows_.push_back(std::move(row)); }

  std::string render(const std::string& format) const {
    if (format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& row : rows_) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < header_.size(); ++i) {
          std::visit([&](const auto& v) { obj[header_[i]] = v; }, row[i]);
        }
        arr.push_back(std::move(obj));
      }
      return arr.dump(2) + "\n";
    }
    CsvTable csv(header_);
    for (const auto& row : rows_) {
      std::vector<std::string> cells;
      for (const auto& c : row) {
        if (auto d = std::get_if<double>(&c)) {
          cells.push_back(format_number(*d));
        } else if (auto s = std::get_if<std::string>(&c)) {
          cells.push_back(*s);
        } else {
          cells.push_back(std::to_string(std::get<std::uint64_t>(c)));
        }
      }
      csv.add_row(std::move(cells));
    }
    return csv.str();
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) return std::numeric_limits<double>::quiet_NaN();
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const auto n = static_cast<double>(x.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string render_run(const TeleportRun& run, const RunContext& ctx, const std::string& format) {
  if (format == "json") return teleport_json(run, ctx).dump(2) + "\n";
  return teleport_table(run, ctx).str();
}

void summarize(const TeleportRun& run, std::ostream& log) {
  log << "path " << run.path << ": avg_fidelity " << format_number(run.average_fidelity)
      << ", inconclusive_rate " << format_number(run.inconclusive_rate) << ", seed " << run.seed
      << '\n';
}

HomodyneOptions homodyne_options(const ExperimentConfig& cfg) {
  HomodyneOptions o;
  o.ab_row = cfg.freq_ab;
  o.ta_row = cfg.freq_ta;
  o.collapse = cfg.collapse;
  o.phase = cfg.displacement_phase;
  o.fock_dim = cfg.dims;
  return o;
}

TeleportRun enumerate(const ExperimentConfig& cfg, const TargetState& target, double alpha,
                      double beta) {
  if (cfg.path == "homodyne") {
    return run_teleport_homodyne(target, alpha, beta, homodyne_options(cfg)).run;
  }
  IdealOptions o;
  o.seed = cfg.seed;
  o.phase = cfg.displacement_phase;
  return run_teleport_ideal(target, alpha, beta, o);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

TeleportRun sample_run(const TeleportRun& enumerated, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  std::vector<double> weights;
  for (const auto& b : enumerated.branches) weights.push_back(b.outcome.probability);
  const bool has_inconclusive = enumerated.path == "ideal";
  if (has_inconclusive) weights.push_back(enumerated.inconclusive_rate);
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) throw DegenerateStateError("no outcome has positive probability");
  for (double& w : weights) w /= total;

  std::vector<std::size_t> counts(weights.size(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) ++counts[sample_index(weights, rng)];

  TeleportRun out;
  out.path = enumerated.path;
  out.mode = RunMode::kSample;
  out.seed = seed;
  const auto n = static_cast<double>(trials);
  for (std::size_t k = 0; k < enumerated.branches.size(); ++k) {
    ProtocolResult r = enumerated.branches[k];
    r.outcome.probability = static_cast<double>(counts[k]) / n;
    out.average_fidelity += r.outcome.probability * r.branch_fidelity;
    out.probability_sum += r.outcome.probability;
    out.branches.push_back(std::move(r));
  }
  if (has_inconclusive) {
    ProtocolResult r;
    r.outcome.name = "inconclusive";
    r.outcome.probability = static_cast<double>(counts.back()) / n;
    out.inconclusive_rate = r.outcome.probability;
    out.probability_sum += r.outcome.probability;
    out.branches.push_back(std::move(r));
  }
  return out;
}

CommandResult cmd_validate(bool corrupt_truncation, std::ostream& log) {
  ValidationOptions o;
  o.corrupt_truncation = corrupt_truncation;
  const auto checks = run_validation(o);
  CommandResult res;
  res.document = format_checks(checks);
  for (const auto& c : checks) {
    if (!c.passed) {
      res.exit_code = kExitCheckFailed;
      log << "check failed: " << c.name << '\n';
    }
  }
  if (res.exit_code == kExitOk) log << "all " << checks.size() << " checks passed\n";
  return res;
}

CommandResult cmd_bell(const ExperimentConfig& cfg, std::ostream& log) {
  CommandResult res;
  const auto gen = generate_from_dynamics(cfg.freq_ab.omega_a_over_chi,
                                          cfg.freq_ab.omega_b_over_chi, cfg.alpha, cfg.beta);
  log << "(" << cfg.freq_ab.omega_a_over_chi << "chi, " << cfg.freq_ab.omega_b_over_chi
      << "chi) -> " << label_name(gen.label) << ", fidelity " << format_number(gen.match_fidelity)
      << '\n';
  if (cfg.dims > 0) {
    const auto start = to_fock(CoherentSuperposition::product({cfg.alpha, cfg.beta}), cfg.dims);
    const auto evolved = evolve(start, {cfg.freq_ab.omega_a_over_chi,
                                        cfg.freq_ab.omega_b_over_chi, 1.0, std::numbers::pi});
    const double f =
        fidelity(evolved, to_fock(make_quasi_bell(gen.label, cfg.alpha, cfg.beta), cfg.dims));
    log << "fock dims " << cfg.dims << ": fidelity " << format_number(f) << '\n';
    if (f < 1.0 - 1e-8) res.exit_code = kExitCheckFailed;
  }

  const QuasiBellSet set(cfg.alpha, cfg.beta);
  const auto closed = quasi_bell_gram_closed_form(cfg.alpha, cfg.beta);
  Table t({"alpha", "beta", "row", "col", "re", "im", "closed_form_re", "closed_form_im"});
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Complex g = set.gram()(i, j);
      const Complex c = closed(i, j);
      worst = std::max(worst, std::abs(g - c));
      t.add({cfg.alpha, cfg.beta, std::string(label_name(kBellLabels[i])),
             std::string(label_name(kBellLabels[j])), g.real(), g.imag(), c.real(), c.imag()});
    }
  }
  log << "gram max |diff| vs closed form " << format_number(worst) << '\n';
  if (worst > 1e-12) res.exit_code = kExitCheckFailed;
  res.document = t.render(cfg.format);
  return res;
}

CommandResult cmd_eigen(const ExperimentConfig& cfg, std::ostream& log) {
  Table t({"amplitude", "label", "operator", "n", "m", "displacement_phase", "expectation_re",
           "expectation_im", "predicted_re", "predicted_im", "residual", "decoded"});
  const DisplacementQuantum q{cfg.n, cfg.m};
  for (double a : cfg.grid) {
    for (auto l : kBellLabels) {
      const Complex pbda =
          bell_expectation(l, BellOperator::kParityBDisplaceA, q, a, a, cfg.displacement_phase);
      const Complex padb =
          bell_expectation(l, BellOperator::kParityADisplaceB, q, a, a, cfg.displacement_phase);
      const auto decoded = label_from_bits(decode_eigenvalues(pbda, padb, q));
      for (auto op : {BellOperator::kParityBDisplaceA, BellOperator::kParityADisplaceB}) {
        const Complex e = op == BellOperator::kParityBDisplaceA ? pbda : padb;
        const Complex p = predicted_eigenvalue(l, op, q);
        t.add({a, std::string(label_name(l)), std::string(operator_name(op)),
               std::uint64_t{cfg.n}, std::uint64_t{cfg.m},
               std::string(phase_name(cfg.displacement_phase)), e.real(), e.imag(), p.real(),
               p.imag(), std::max(0.0, 1.0 - std::abs(std::conj(p) * e)),
               std::string(label_name(decoded))});
      }
    }
  }
  log << "eigen expectations over " << cfg.grid.size() << " amplitudes\n";
  return {kExitOk, t.render(cfg.format)};
}

CommandResult cmd_teleport(const ExperimentConfig& cfg, std::ostream& log) {
  const auto target = cfg.target();
  const RunContext ctx{cfg.alpha, cfg.beta, target};
  CommandResult res;
  auto run = enumerate(cfg, target, cfg.alpha, cfg.beta);
  summarize(run, log);
  if (cfg.path == "ideal" && cfg.dims > 0) {
    const auto dense = fock_ideal_branch_fidelities(target, cfg.alpha, cfg.beta, cfg.dims,
                                                    cfg.displacement_phase);
    double worst = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      worst = std::max(worst, std::abs(dense[k] - run.branches[k].branch_fidelity));
    }
    log << "fock dims " << cfg.dims << ": max branch-fidelity diff " << format_number(worst)
        << '\n';
    if (worst > 1e-8) res.exit_code = kExitCheckFailed;
  }
  if (cfg.mode == RunMode::kSample) {
    run = sample_run(run, cfg.trials, cfg.seed);
    log << "sampled " << cfg.trials << " trials: ";
    summarize(run, log);
  }
  res.document = render_run(run, ctx, cfg.format);
  return res;
}

CommandResult cmd_homodyne(const ExperimentConfig& cfg, std::ostream& log) {
  const auto target = cfg.target();
  const auto h = run_teleport_homodyne(target, cfg.alpha, cfg.beta, homodyne_options(cfg));
  CommandResult res;
  log << "three-mode structure fidelity " << format_number(h.structure_fidelity) << ", collapse "
      << collapse_name(h.collapse_used) << '\n';
  for (const auto& m : h.mapping) {
    log << "  T" << (m.signs[0] > 0 ? '+' : '-') << "A" << (m.signs[1] > 0 ? '+' : '-') << " -> "
        << correction_name(m.correction) << '\n';
  }
  log << "sign error T " << format_number(h.misclassification_t) << ", A "
      << format_number(h.misclassification_a) << '\n';
  summarize(h.run, log);
  const bool default_rows = cfg.freq_ab == FrequencyRow{} && cfg.freq_ta == FrequencyRow{};
  if (default_rows && (h.structure_fidelity < 1.0 - 1e-10 || !h.mapping_matches_reference)) {
    log << "check failed: homodyne structure\n";
    res.exit_code = kExitCheckFailed;
  }
  auto run = h.run;
  if (cfg.mode == RunMode::kSample) run = sample_run(run, cfg.trials, cfg.seed);
  res.document = render_run(run, {cfg.alpha, cfg.beta, target}, cfg.format);
  return res;
}

CommandResult cmd_sweep(const ExperimentConfig& cfg, std::ostream& log) {
  const auto& grid = cfg.grid;
  if (grid.empty()) throw ConfigError("config error: key 'grid': must not be empty");
  CommandResult res;
  if (cfg.sweep == SweepKind::kResidual) {
    const DisplacementQuantum q{cfg.n, cfg.m};
    std::vector<double> residual, lo, hi;
    for (double a : grid) {
      residual.push_back(eigen_residual(cfg.label, cfg.op, q, a, a, cfg.displacement_phase));
      double mn = std::numeric_limits<double>::infinity();
      double mx = 0.0;
      for (auto l : kBellLabels) {
        for (auto op : {BellOperator::kParityBDisplaceA, BellOperator::kParityADisplaceB}) {
          const double r = eigen_residual(l, op, q, a, a, cfg.displacement_phase);
          mn = std::min(mn, r);
          mx = std::max(mx, r);
        }
      }
      lo.push_back(mn);
      hi.push_back(mx);
    }
    const double s = loglog_slope(grid, residual);
    Table t({"sweep", "amplitude", "label", "operator", "n", "m", "displacement_phase",
             "residual", "min_residual", "max_residual", "slope", "seed"});
    for (std::size_t i = 0; i < grid.size(); ++i) {
      t.add({std::string("residual"), grid[i], std::string(label_name(cfg.label)),
             std::string(operator_name(cfg.op)), std::uint64_t{cfg.n}, std::uint64_t{cfg.m},
             std::string(phase_name(cfg.displacement_phase)), residual[i], lo[i], hi[i], s,
             derive_seed(cfg.seed, i)});
    }
    log << "residual sweep: log-log slope " << format_number(s) << '\n';
    res.document = t.render(cfg.format);
    return res;
  }

  std::vector<TeleportRun> runs;
  std::vector<double> infidelity;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    TargetState target = cfg.target();
    target.gamma = grid[i];
    auto run = enumerate(cfg, target, grid[i], grid[i]);
    const std::uint64_t seed = derive_seed(cfg.seed, i);
    if (cfg.mode == RunMode::kSample) {
      run = sample_run(run, cfg.trials, seed);
    } else {
      run.seed = seed;
    }
    infidelity.push_back(1.0 - run.average_fidelity);
    runs.push_back(std::move(run));
  }
  const double s = loglog_slope(grid, infidelity);
  Table t({"sweep", "amplitude", "path", "c_a_re", "c_a_im", "c_b_re", "c_b_im", "avg_fidelity",
           "infidelity", "inconclusive_rate", "probability_sum", "slope", "seed"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& r = runs[i];
    t.add({std::string("fidelity"), grid[i], cfg.path, cfg.c_a.real(), cfg.c_a.imag(),
           cfg.c_b.real(), cfg.c_b.imag(), r.average_fidelity, infidelity[i],
           r.inconclusive_rate, r.probability_sum, s, r.seed});
  }
  log << "fidelity sweep: 1-F log-log slope " << format_number(s) << '\n';
  res.document = t.render(cfg.format);
  return res;
}

CommandResult run_command(const std::string& name, const ExperimentConfig& cfg,
                          std::ostream& log) {
  try {
    validate(cfg);
    if (name == "bell") return cmd_bell(cfg, log);
    if (name == "eigen") return cmd_eigen(cfg, log);
    if (name == "teleport") return cmd_teleport(cfg, log);
    if (name == "sweep") return cmd_sweep(cfg, log);
    if (name == "homodyne") return cmd_homodyne(cfg, log);
    if (name == "validate") return cmd_validate(false, log);
    log << "config error: unknown command '" << name << "'\n";
    return {kExitConfigError, {}};
  } catch (const ConfigError& e) {
    log << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    log << "config error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    log << "config error: " << e.what() << '\n';
  }
  return {kExitConfigError, {}};
}

}  // namespace catport
