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

#include "catport/validation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "catport/fock.hpp"

namespace catport {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << x;
  return os.str();
}

Complex random_in_disk(std::mt19937_64& rng, double radius) {
  const double r = radius * std::sqrt(uniform01(rng));
  const double t = 2.0 * std::numbers::pi * uniform01(rng);
  return std::polar(r, t);
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CheckResult check(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

CheckResult truncation_check(bool corrupt) {
  double worst = 0.0;
  std::string where;
  for (double a : {0.5, 1.0, 2.0, 3.0, 4.0}) {
    const std::size_t dim = (corrupt && a == 2.0) ? 3 : truncation_rule(a);
    const auto v = to_fock(CoherentSuperposition::coherent(a), dim);
    if (v.leakage() > worst) {
      worst = v.leakage();
      where = "alpha=" + fmt(a) + " dims=" + std::to_string(dim);
    }
  }
  return check("truncation-leakage", worst < 1e-10, "worst " + fmt(worst) + " at " + where);
}

CheckResult overlap_check(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t dim = truncation_rule(3.0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Complex a = random_in_disk(rng, 3.0);
    const Complex b = random_in_disk(rng, 3.0);
    const Complex exact = coherent_overlap(a, b);
    const Complex dense = coherent_fock(a, dim).dot(coherent_fock(b, dim));
    worst = std::max(worst, std::abs(exact - dense));
  }
  return check("overlap-kernel-vs-fock", worst < 1e-9, "max |diff| " + fmt(worst));
}

CoherentSuperposition random_state(std::mt19937_64& rng, std::size_t modes, double radius) {
  std::vector<CoherentTerm> terms;
  const std::size_t count = 1 + static_cast<std::size_t>(uniform01(rng) * 3.0);
  for (std::size_t t = 0; t < count; ++t) {
    CoherentTerm term;
    term.coeff = Complex(uniform01(rng) - 0.5, uniform01(rng) - 0.5);
    for (std::size_t m = 0; m < modes; ++m) term.amps.push_back(random_in_disk(rng, radius));
    terms.push_back(std::move(term));
  }
  return normalize(CoherentSuperposition(modes, std::move(terms)));
}

CheckResult composition_check(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst_comp = 0.0;
  double worst_conj = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto s = random_state(rng, 1, 1.5);
    const Complex a = random_in_disk(rng, 1.0);
    const Complex b = random_in_disk(rng, 1.0);
    // D(a) D(b) = exp(i Im(a conj b)) D(a + b)
    const auto lhs = apply_displacement(apply_displacement(s, 0, b), 0, a);
    const auto rhs =
        std::polar(1.0, std::imag(a * std::conj(b))) * apply_displacement(s, 0, a + b);
    worst_comp = std::max(worst_comp, norm(lhs - rhs));
    // P D(a) P = D(-a)
    const auto conj = apply_parity(apply_displacement(apply_parity(s, 0), 0, a), 0);
    worst_conj = std::max(worst_conj, norm(conj - apply_displacement(s, 0, -a)));
  }
  return check("displacement-composition", worst_comp < 1e-12 && worst_conj < 1e-12,
               "composition " + fmt(worst_comp) + ", parity conjugation " + fmt(worst_conj));
}

CheckResult parity_table_check() {
  double worst = 0.0;
  for (double amp : {0.5, 1.0, 2.0}) {
    for (auto l : kBellLabels) {
      for (auto mode : {BellMode::kA, BellMode::kB}) {
        const auto c = verify_parity_action(l, mode, amp, amp);
        worst = std::max(worst, std::abs(c.relative - static_cast<double>(c.predicted.sign)));
      }
    }
  }
  return check("parity-action-table", worst < 1e-12, "max deviation " + fmt(worst));
}

std::vector<CheckResult> table_checks(bool corrupt, std::string& labels) {
  constexpr std::array<std::array<double, 2>, 4> kRows{{{2, 2}, {2, 1}, {1, 2}, {1, 1}}};
  double worst_exact = 0.0;
  double worst_fock = 0.0;
  std::ostringstream os;
  const std::size_t dim = corrupt ? 3 : truncation_rule(1.0);
  for (const auto& row : kRows) {
    const auto g = generate_from_dynamics(row[0], row[1], 1.0, 1.0);
    worst_exact = std::max(worst_exact, 1.0 - g.match_fidelity);
    const auto start = to_fock(CoherentSuperposition::product({1.0, 1.0}), dim);
    const auto evolved = evolve(start, {row[0], row[1], 1.0, std::numbers::pi});
    const auto expected = to_fock(make_quasi_bell(g.label, 1.0, 1.0), dim);
    worst_fock = std::max(worst_fock, 1.0 - fidelity(evolved, expected));
    os << "(" << row[0] << "chi," << row[1] << "chi)->" << label_name(g.label) << " ";
  }
  labels = os.str();
  return {check("frequency-table-exact", worst_exact < 1e-10,
                labels + "infidelity " + fmt(worst_exact)),
          check("frequency-table-fock", worst_fock < 1e-8,
                "dims=" + std::to_string(dim) + " infidelity " + fmt(worst_fock))};
}

CheckResult gram_check() {
  double worst = 0.0;
  for (double a : {1.0, 2.0, 4.0}) {
    for (double b : {1.0, 2.0, 4.0}) {
      const QuasiBellSet set(a, b);
      worst = std::max(worst, (set.gram() - quasi_bell_gram_closed_form(a, b)).cwiseAbs().maxCoeff());
    }
  }
  return check("gram-closed-form", worst < 1e-12, "max |diff| " + fmt(worst));
}

CheckResult permutation_check() {
  double worst = 0.0;
  std::string map;
  for (const auto& p : permutation_identities(1.5, 2.5)) {
    worst = std::max(worst, 1.0 - p.fidelity);
    map += std::string(label_name(p.source)) + "->" + std::string(label_name(p.match)) + "' ";
  }
  return check("mode-swap-identities", worst < 1e-12, map + "infidelity " + fmt(worst));
}

CheckResult eigen_scaling_check() {
  const std::vector<double> grid{4.0, 8.0, 16.0, 32.0};
  double worst_slope_dev = 0.0;
  bool decoded = true;
  for (auto op : {BellOperator::kParityBDisplaceA, BellOperator::kParityADisplaceB}) {
    for (auto l : kBellLabels) {
      std::vector<double> r;
      for (double a : grid) r.push_back(eigen_residual(l, op, {}, a, a));
      worst_slope_dev = std::max(worst_slope_dev, std::abs(slope(grid, r) + 2.0));
    }
  }
  for (double a : {8.0, 16.0, 32.0}) {
    for (auto l : kBellLabels) {
      const auto bits = decode_eigenvalues(
          bell_expectation(l, BellOperator::kParityBDisplaceA, {}, a, a),
          bell_expectation(l, BellOperator::kParityADisplaceB, {}, a, a), {});
      decoded = decoded && label_from_bits(bits) == l;
    }
  }
  return check("eigen-residual-scaling", worst_slope_dev < 0.1 && decoded,
               "max |slope + 2| " + fmt(worst_slope_dev) + (decoded ? ", bits decoded" : ", bits wrong"));
}

CheckResult completeness_check(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double amp = 1.0 + 3.0 * uniform01(rng);
    const Complex ca = random_in_disk(rng, 1.0);
    Complex cb = std::polar(std::sqrt(1.0 - std::norm(ca)), 2.0 * std::numbers::pi * uniform01(rng));
    const auto p = ideal_outcome_probabilities({ca, cb, amp}, amp, amp);
    double sum = 0.0;
    for (double x : p) sum += x;
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return check("outcome-completeness", worst < 1e-10, "max |sum - 1| " + fmt(worst));
}

CheckResult engine_vs_fock_check() {
  const TargetState target{Complex(0.6, 0.0), Complex(0.0, 0.8), 1.5};
  const auto run = run_teleport_ideal(target, 1.5, 1.5);
  const auto dense = fock_ideal_branch_fidelities(target, 1.5, 1.5);
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    worst = std::max(worst, std::abs(run.branches[k].branch_fidelity - dense[k]));
  }
  return check("branch-fidelity-vs-fock", worst < 1e-8, "max |diff| " + fmt(worst));
}

CheckResult homodyne_check() {
  const TargetState target{Complex(0.8, 0.0), Complex(0.6, 0.0), 2.0};
  const auto s = homodyne_three_mode_state(target, 2.0, 2.0, {}, {});
  const double f = fidelity(s, homodyne_reference_state(target, 2.0, 2.0));
  const auto mapping = derive_sign_mapping(2.0, 2.0, 2.0, {}, {});
  std::string desc;
  for (const auto& m : mapping) {
    desc += std::string("T") + (m.signs[0] > 0 ? "+" : "-") + "A" + (m.signs[1] > 0 ? "+" : "-") + "->" +
            std::string(correction_name(m.correction)) + " ";
  }
  return check("homodyne-structure", 1.0 - f < 1e-10, desc + "infidelity " + fmt(1.0 - f));
}

}  // namespace

PipelineReport backend_equivalence(std::size_t count, std::uint64_t seed, std::size_t dim) {
  constexpr double kMaxAmp = 3.0;
  std::mt19937_64 rng(seed);
  const std::size_t d = dim ? dim : truncation_rule(kMaxAmp);
  PipelineReport report;
  for (std::size_t p = 0; p < count; ++p) {
    auto exact = random_state(rng, 2, 1.5);
    auto dense = to_fock(exact, d);
    report.worst_leakage = std::max(report.worst_leakage, dense.leakage());
    const std::size_t steps = 4 + static_cast<std::size_t>(uniform01(rng) * 3.0);
    for (std::size_t s = 0; s < steps; ++s) {
      const auto kind = static_cast<int>(uniform01(rng) * 4.0);
      const std::size_t mode = uniform01(rng) < 0.5 ? 0 : 1;
      if (kind == 0) {
        const Complex eps = random_in_disk(rng, 0.6);
        const auto moved = apply_displacement(exact, mode, eps);
        if (moved.max_abs_amplitude() > kMaxAmp) continue;
        exact = moved;
        dense = apply_mode_operator(dense, mode, fock_displacement(d, eps));
      } else if (kind == 1) {
        exact = apply_parity(exact, mode);
        dense = apply_mode_operator(dense, mode, fock_parity(d));
      } else if (kind == 2) {
        const double theta = 2.0 * std::numbers::pi * uniform01(rng);
        exact = apply_rotation(exact, mode, theta);
        dense = apply_mode_operator(dense, mode, fock_rotation(d, theta));
      } else {
        exact = apply_cross_kerr_pi(exact, 0, 1);
        dense = apply_cross_kerr(dense, 0, 1, std::numbers::pi);
      }
    }
    const double f = fidelity(to_fock(exact, d), dense);
    report.worst_infidelity = std::max(report.worst_infidelity, 1.0 - f);
    ++report.count;
  }
  return report;
}

std::array<double, 4> fock_ideal_branch_fidelities(const TargetState& target, double alpha,
                                                   double beta, std::size_t dim,
                                                   DisplacementPhase phase) {
  const double amp = std::max({alpha, beta, target.gamma});
  const std::size_t d = dim ? dim : truncation_rule(amp + 1.0);
  const auto di = static_cast<Eigen::Index>(d);

  // Initial state (a, T, b) built from dense single-mode vectors.
  const Eigen::VectorXcd a_p = coherent_fock(alpha, d);
  const Eigen::VectorXcd a_m = coherent_fock(-alpha, d);
  const Eigen::VectorXcd b_p = coherent_fock(beta, d);
  const Eigen::VectorXcd b_m = coherent_fock(-beta, d);
  const Eigen::VectorXcd g_p = coherent_fock(target.gamma, d);
  const Eigen::VectorXcd g_m = coherent_fock(-target.gamma, d);
  const Eigen::VectorXcd cat_bp = 0.5 * (b_p + b_m);
  const Eigen::VectorXcd cat_bm = 0.5 * (b_p - b_m);
  const Eigen::VectorXcd tgt = target.c_a * g_p + target.c_b * g_m;
  auto kron = [](const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
    Eigen::VectorXcd out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out.segment(i * y.size(), y.size()) = x(i) * y;
    return out;
  };
  const Eigen::VectorXcd psi =
      kron(kron(a_p, tgt), cat_bp) + kron(kron(a_m, tgt), cat_bm);

  // Quasi-Bell vectors on (a, T) with amplitudes (alpha, gamma), then Lowdin.
  const Eigen::VectorXcd gc_p = 0.5 * (g_p + g_m);
  const Eigen::VectorXcd gc_m = 0.5 * (g_p - g_m);
  std::array<Eigen::VectorXcd, 4> bell{kron(a_p, gc_p) + kron(a_m, gc_m),
                                       kron(a_p, gc_p) - kron(a_m, gc_m),
                                       kron(a_p, gc_m) + kron(a_m, gc_p),
                                       kron(a_p, gc_m) - kron(a_m, gc_p)};
  for (auto& v : bell) v.normalize();
  Eigen::Matrix4cd gram;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) gram(i, j) = bell[i].dot(bell[j]);
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(gram);
  const Eigen::Matrix4cd inv_sqrt = eig.eigenvectors() *
                                    eig.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
                                    eig.eigenvectors().adjoint();

  const Eigen::Map<const Eigen::MatrixXcd> psi_mat(psi.data(), di, di * di);
  const Eigen::VectorXcd ideal = to_fock(target.encoded_on(beta), d).data().normalized();
  const Eigen::MatrixXcd disp = fock_displacement(d, correction_displacement(beta, phase));
  const Eigen::MatrixXcd par = fock_parity(d);

  std::array<double, 4> out{};
  for (int k = 0; k < 4; ++k) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(di * di);
    for (int j = 0; j < 4; ++j) e += inv_sqrt(j, k) * bell[j];
    Eigen::VectorXcd bob = psi_mat * e.conjugate();
    switch (correction_for(kBellLabels[k])) {
      case CorrectionLabel::kIdentity: break;
      case CorrectionLabel::kParity: bob = par * bob; break;
      case CorrectionLabel::kDisp: bob = disp * bob; break;
      case CorrectionLabel::kParityDisp: bob = par * (disp * bob); break;
    }
    const double n = bob.norm();
    out[k] = n > 0 ? std::norm(ideal.dot(bob / n)) : 0.0;
  }
  return out;
}

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
  std::vector<CheckResult> out;
  out.push_back(truncation_check(options.corrupt_truncation));
  out.push_back(overlap_check(options.seed));
  const auto pipes = backend_equivalence(options.pipelines, options.seed);
  out.push_back(check("backend-equivalence", pipes.count >= 50 && pipes.worst_infidelity < 1e-8,
                      std::to_string(pipes.count) + " pipelines, worst infidelity " +
                          fmt(pipes.worst_infidelity)));
  out.push_back(composition_check(options.seed + 1));
  out.push_back(parity_table_check());
  std::string labels;
  for (auto& c : table_checks(options.corrupt_truncation, labels)) out.push_back(std::move(c));
  out.push_back(gram_check());
  out.push_back(permutation_check());
  out.push_back(eigen_scaling_check());
  out.push_back(completeness_check(options.seed + 2));
  out.push_back(engine_vs_fock_check());
  out.push_back(homodyne_check());
  return out;
}

std::string format_checks(const std::vector<CheckResult>& checks) {
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  std::ostringstream os;
  for (const auto& c : checks) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << c.name
       << (c.passed ? "PASS  " : "FAIL  ") << c.detail << '\n';
  }
  return os.str();
}

}  // namespace catport
