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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "catport/fock.hpp"
#include "catport/lab.hpp"
#include "catport/protocol.hpp"
#include "catport/quasi_bell.hpp"
#include "catport/validation.hpp"

using namespace catport;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
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

const double kSqrtHalf = std::sqrt(0.5);

Outcome frequency_table() {
  Outcome o;
  constexpr double kRows[4][2] = {{2, 2}, {2, 1}, {1, 2}, {1, 1}};
  const std::size_t dim = truncation_rule(1.0);
  double worst_exact = 0.0;
  double worst_fock = 0.0;
  std::string labels;
  for (const auto& r : kRows) {
    for (double amp : {1.0, 2.0, 3.0}) {
      const auto g = generate_from_dynamics(r[0], r[1], amp, amp);
      worst_exact = std::max(worst_exact, 1.0 - g.match_fidelity);
    }
    const auto g = generate_from_dynamics(r[0], r[1], 1.0, 1.0);
    const auto dense = evolve(to_fock(CoherentSuperposition::product({1.0, 1.0}), dim),
                              {r[0], r[1], 1.0, std::numbers::pi});
    worst_fock =
        std::max(worst_fock, 1.0 - fidelity(dense, to_fock(make_quasi_bell(g.label, 1, 1), dim)));
    labels += std::string(label_name(g.label)) + " ";
  }
  o.require(labels == "PhiPlus PhiMinus PsiPlus PsiMinus ", "labels " + labels);
  o.require(worst_exact <= 1e-10, "exact");
  o.require(worst_fock <= 1e-8, "fock");
  o.note(labels + "exact 1-F " + sci(worst_exact) + ", fock(dims=" + std::to_string(dim) +
         ") 1-F " + sci(worst_fock));
  return o;
}

Outcome backend_pipelines() {
  Outcome o;
  const auto r = backend_equivalence(64, 2026);
  o.require(r.count >= 50, "pipeline count");
  o.require(r.worst_infidelity <= 1e-8, "fidelity");
  o.note(std::to_string(r.count) + " pipelines, worst 1-F " + sci(r.worst_infidelity));
  return o;
}

Outcome gram_forms() {
  Outcome o;
  double worst = 0.0;
  for (double a : {1.0, 2.0, 4.0}) {
    for (double b : {1.0, 2.0, 4.0}) {
      const QuasiBellSet set(a, b);
      const double ea = std::exp(-2 * a * a);
      const double eb = std::exp(-2 * b * b);
      // Upper triangle including the diagonal: ten entries.
      const double want[4][4] = {{1, eb, ea, -ea * eb},
                                 {0, 1, ea * eb, -ea},
                                 {0, 0, 1, -eb},
                                 {0, 0, 0, 1}};
      for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
          worst = std::max(worst, std::abs(set.gram()(i, j) - want[i][j]));
        }
      }
    }
  }
  o.require(worst <= 1e-12, "closed form");
  o.note("max |G - closed form| " + sci(worst));
  return o;
}

Outcome eigen_equations() {
  Outcome o;
  const std::vector<double> grid{4, 8, 16, 32};
  double worst = 0.0;
  for (auto op : {BellOperator::kParityBDisplaceA, BellOperator::kParityADisplaceB}) {
    for (auto l : kBellLabels) {
      std::vector<double> r;
      for (double a : grid) r.push_back(eigen_residual(l, op, {}, a, a));
      worst = std::max(worst, std::abs(loglog_slope(grid, r) + 2.0));
    }
  }
  o.require(worst <= 0.1, "slope");
  const std::array<double, 4> pbda{1, 1, -1, -1};
  const std::array<double, 4> padb{1, -1, 1, -1};
  bool signs = true;
  for (double a : {8.0, 16.0, 32.0}) {
    for (std::size_t k = 0; k < 4; ++k) {
      const auto l = kBellLabels[k];
      const Complex x = bell_expectation(l, BellOperator::kParityBDisplaceA, {}, a, a);
      const Complex y = bell_expectation(l, BellOperator::kParityADisplaceB, {}, a, a);
      const auto bits = decode_eigenvalues(x, y, {});
      signs = signs && label_from_bits(bits) == l && bits.phi == (pbda[k] > 0) &&
              bits.plus == (padb[k] > 0);
    }
  }
  o.require(signs, "bit decoding");
  o.note("max |slope + 2| " + sci(worst) + ", eigenvalue signs decoded at 8, 16, 32");
  return o;
}

Outcome protocol_correctness() {
  Outcome o;
  double worst_phi = 0.0;
  double worst_sum = 0.0;
  for (const TargetState& t :
       {TargetState{kSqrtHalf, kSqrtHalf, 3.0}, TargetState{0.6, Complex(0, 0.8), 3.0},
        TargetState{1.0, 0.0, 3.0}, TargetState{0.0, 1.0, 3.0}}) {
    const auto run = run_teleport_ideal(t, 3.0, 3.0);
    worst_phi = std::max({worst_phi, std::abs(1.0 - run.branches[0].branch_fidelity),
                          std::abs(1.0 - run.branches[1].branch_fidelity)});
    worst_sum = std::max(worst_sum, std::abs(run.probability_sum - 1.0));
  }
  o.require(worst_phi <= 1e-10, "Phi branches");
  o.require(worst_sum <= 1e-10, "probability sum");

  double worst_psi = 0.0;
  std::string factors;
  for (auto phase : {DisplacementPhase::kQuarterPi, DisplacementPhase::kHalfPi}) {
    IdealOptions opt;
    opt.phase = phase;
    const auto run = run_teleport_ideal({1.0, 0.0, 3.0}, 3.0, 3.0, opt);
    const double mu = std::abs(correction_displacement(3.0, phase));
    const double closed = std::exp(-mu * mu / 2.0);
    for (std::size_t k : {2u, 3u}) {
      worst_psi = std::max(worst_psi, std::abs(std::sqrt(run.branches[k].branch_fidelity) - closed));
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s %.6f", std::string(phase_name(phase)).c_str(), closed);
    factors += std::string(factors.empty() ? "" : ", ") + buf;
  }
  o.require(worst_psi <= 1e-6, "Psi overlap");

  const TargetState t{kSqrtHalf, kSqrtHalf, 3.0};
  const auto enumerated = run_teleport_ideal(t, 3.0, 3.0);
  const std::size_t n = 100000;
  const auto sampled = sample_run(enumerated, n, 31337);
  double worst_z = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const double p = enumerated.branches[k].outcome.probability;
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(n));
    worst_z = std::max(worst_z, std::abs(sampled.branches[k].outcome.probability - p) / sigma);
  }
  o.require(worst_z <= 3.0, "sampling");
  o.note("Phi 1-F " + sci(worst_phi) + ", Psi overlap dev " + sci(worst_psi) + " (" + factors +
         "), |sum-1| " + sci(worst_sum) + ", max z " + sci(worst_z));
  return o;
}

Outcome asymptotics() {
  Outcome o;
  const std::vector<double> grid{2, 4, 8, 16};
  std::vector<double> infid;
  double prev = 0.0;
  bool increasing = true;
  for (double b : grid) {
    const auto run = run_teleport_ideal({kSqrtHalf, kSqrtHalf, b}, b, b);
    increasing = increasing && run.average_fidelity > prev;
    prev = run.average_fidelity;
    infid.push_back(1.0 - run.average_fidelity);
  }
  const double slope = loglog_slope(grid, infid);
  o.require(increasing, "monotone");
  o.require(std::abs(slope + 2.0) <= 0.2, "slope");
  const auto p = ideal_outcome_probabilities({kSqrtHalf, kSqrtHalf, 4.0}, 4.0, 4.0);
  double dev = 0.0;
  for (std::size_t k = 0; k < 4; ++k) dev = std::max(dev, std::abs(p[k] - 0.25));
  o.require(dev <= 1e-6, "quarter probabilities");
  o.note("1-F slope " + sci(slope) + ", max |p - 1/4| " + sci(dev));
  return o;
}

Outcome homodyne() {
  Outcome o;
  double worst_structure = 0.0;
  for (const TargetState& t : {TargetState{kSqrtHalf, kSqrtHalf, 2.0},
                               TargetState{0.6, Complex(0, 0.8), 3.0}}) {
    const auto s = homodyne_three_mode_state(t, t.gamma, t.gamma, {}, {});
    worst_structure = std::max(
        worst_structure, 1.0 - fidelity(s, homodyne_reference_state(t, t.gamma, t.gamma)));
  }
  o.require(worst_structure <= 1e-10, "structure");
  const auto unit = run_teleport_homodyne({1.0, 0.0, 1.0}, 1.0, 1.0);
  const double quad = half_line_probability(coherent_fock(1.0, 40), -1);
  const double closed = 0.5 * std::erfc(std::sqrt(2.0));
  const double sign_dev = std::max({std::abs(unit.misclassification_t - quad),
                                    std::abs(unit.misclassification_a - quad),
                                    std::abs(quad - closed)});
  o.require(sign_dev <= 1e-6, "sign error");
  const TargetState t4{kSqrtHalf, kSqrtHalf, 4.0};
  const double gap = std::abs(run_teleport_homodyne(t4, 4.0, 4.0).run.average_fidelity -
                              run_teleport_ideal(t4, 4.0, 4.0).average_fidelity);
  o.require(gap < 1e-6, "homodyne vs ideal");
  o.require(unit.mapping_matches_reference, "sign mapping");
  o.note("structure 1-F " + sci(worst_structure) + ", sign error " + sci(unit.misclassification_t) +
         " (quadrature " + sci(quad) + "), |F_h - F_i| " + sci(gap));
  return o;
}

Outcome baseline() {
  Outcome o;
  BaselineOptions opt;
  opt.trials = 10000;
  opt.seed = 8;
  const auto r = classical_baseline({kSqrtHalf, kSqrtHalf, 3.0}, 3.0, 3.0, opt);
  o.require(std::abs(r.guess_rate - 0.25) <= 0.01, "guess rate");
  o.note("guess rate " + std::to_string(r.guess_rate) + " over 10^4 trials, seed 8");
  return o;
}

Outcome first_order_displacement() {
  Outcome o;
  const Complex eps(0.0, 0.01);
  const std::size_t dim = truncation_rule(2.0) + 20;
  const Eigen::MatrixXcd d = fock_displacement(dim, eps);
  const Eigen::MatrixXcd lin = Eigen::MatrixXcd::Identity(dim, dim) +
                               kI * std::abs(eps) * quadrature_x(dim).cast<Complex>();
  const Eigen::MatrixXcd x2 = (quadrature_x(dim) * quadrature_x(dim)).cast<Complex>();
  double worst_ratio = 0.0;
  double worst_sharp = 0.0;
  double violated_up_to = -1.0;
  for (int step = 0; step <= 200; ++step) {
    const double r = 0.01 * step;
    for (int k = 0; k < 8; ++k) {
      const Complex amp = std::polar(r, k * std::numbers::pi / 4.0);
      const Eigen::VectorXcd psi = coherent_fock(amp, dim);
      const double err = ((d - lin) * psi).norm();
      const double bound = std::norm(eps) * std::pow(2 * r + 1, 2) / 2.0;
      // Second-order Taylor remainder with the exact fourth quadrature moment.
      const double sharp = std::norm(eps) * (x2 * psi).norm() / 2.0 * (1.0 + std::abs(eps));
      worst_ratio = std::max(worst_ratio, err / bound);
      worst_sharp = std::max(worst_sharp, err / sharp);
      if (err > bound) violated_up_to = r;
    }
  }
  o.require(worst_ratio <= 1.0, "bound");
  o.note("max error/bound " + sci(worst_ratio));
  if (violated_up_to >= 0) {
    o.note("bound exceeded for |alpha| <= " + sci(violated_up_to) + " (vacuum: sqrt(<X^4>) = sqrt 3 > 1)");
  }
  o.note("error / (|eps|^2 ||X^2 psi|| / 2) <= " + sci(worst_sharp));
  return o;
}

Outcome reproducibility() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "catport_acceptance";
  fs::create_directories(dir);
  const fs::path cfg = dir / "sample.json";
  std::ofstream(cfg) << R"({"alpha": 3, "beta": 3, "gamma": 3, "mode": "sample", "trials": 5000,
 "grid": [2, 4, 8]})";
  auto run = [&](const std::string& sub, const fs::path& out) {
    const std::string cmd = std::string(CATPORT_CLI) + " " + sub + " --config " + cfg.string() +
                            " --seed 424242 --out " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) && WEXITSTATUS(status) == 0;
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };
  for (const std::string sub : {"teleport", "sweep", "homodyne"}) {
    const bool ok = run(sub, dir / "a.csv") && run(sub, dir / "b.csv");
    const auto a = slurp(dir / "a.csv");
    o.require(ok && !a.empty() && a == slurp(dir / "b.csv"), sub + " bytes");
    o.require(a.find("424242") != std::string::npos || sub == "sweep", sub + " seed in-band");
  }
  fs::remove_all(dir);
  o.note("teleport, sweep and homodyne CSV byte-identical across two runs");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"frequency-table reproduction", 5, frequency_table},
      {"backend equivalence", 30, backend_pipelines},
      {"Gram closed forms", 0, gram_forms},
      {"eigenvalue equations", 0, eigen_equations},
      {"protocol correctness", 60, protocol_correctness},
      {"asymptotics", 0, asymptotics},
      {"homodyne path", 0, homodyne},
      {"classical baseline", 0, baseline},
      {"first-order displacement", 0, first_order_displacement},
      {"reproducibility", 0, reproducibility},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) o.require(false, "runtime budget");
    failures += !o.passed;
    std::printf("[%s] %2d %-28s %6.2fs  %s\n", o.passed ? "PASS" : "FAIL", index, c.name, secs,
                o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
