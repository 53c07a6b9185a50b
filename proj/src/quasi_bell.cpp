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

#include "catport/quasi_bell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "catport/errors.hpp"

namespace catport {
namespace {

constexpr double kPi = std::numbers::pi;

double parity_sign(unsigned k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// Rotation by pi * ratio; integral ratios map to exact sign flips so the
// table states come out without rounding noise in their amplitudes.
CoherentSuperposition rotate_by_pi_multiple(const CoherentSuperposition& s, std::size_t mode,
                                            double ratio) {
  const double k = std::round(ratio);
  if (std::abs(ratio - k) < 1e-12) {
    return (static_cast<long long>(k) % 2 == 0) ? s : apply_parity(s, mode);
  }
  return apply_rotation(s, mode, kPi * ratio);
}

int table_index(double ratio) {
  if (std::abs(ratio - 2.0) < 1e-12) return 0;
  if (std::abs(ratio - 1.0) < 1e-12) return 1;
  return -1;
}

}  // namespace

std::string_view label_name(BellLabel l) {
  switch (l) {
    case BellLabel::kPhiPlus: return "PhiPlus";
    case BellLabel::kPhiMinus: return "PhiMinus";
    case BellLabel::kPsiPlus: return "PsiPlus";
    case BellLabel::kPsiMinus: return "PsiMinus";
  }
  return "?";
}

std::optional<BellLabel> parse_label(std::string_view name) {
  for (auto l : kBellLabels) {
    if (label_name(l) == name) return l;
  }
  return std::nullopt;
}

CoherentSuperposition make_cat(Complex lam, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("cat sign must be +1 or -1");
  return CoherentSuperposition(
      1, {CoherentTerm{0.5, {lam}}, CoherentTerm{0.5 * static_cast<double>(sign), {-lam}}});
}

CoherentSuperposition make_quasi_bell(BellLabel label, Complex alpha, Complex beta) {
  const auto plus = make_cat(beta, +1);
  const auto minus = make_cat(beta, -1);
  const auto a = CoherentSuperposition::coherent(alpha);
  const auto na = CoherentSuperposition::coherent(-alpha);
  switch (label) {
    case BellLabel::kPhiPlus: return normalize(tensor(a, plus) + tensor(na, minus));
    case BellLabel::kPhiMinus: return normalize(tensor(a, plus) - tensor(na, minus));
    case BellLabel::kPsiPlus: return normalize(tensor(a, minus) + tensor(na, plus));
    case BellLabel::kPsiMinus: return normalize(tensor(a, minus) - tensor(na, plus));
  }
  throw std::invalid_argument("unknown Bell label");
}

Eigen::Matrix4cd quasi_bell_gram_closed_form(double alpha, double beta) {
  const double a = std::exp(-2.0 * alpha * alpha);
  const double b = std::exp(-2.0 * beta * beta);
  Eigen::Matrix4d g;
  // clang-format off
  g <<  1.0,    b,      a,     -a * b,
        b,      1.0,    a * b, -a,
        a,      a * b,  1.0,   -b,
       -a * b, -a,     -b,      1.0;
  // clang-format on
  return g.cast<Complex>();
}

QuasiBellSet::QuasiBellSet(double alpha, double beta)
    : alpha_(alpha),
      beta_(beta),
      states_{make_quasi_bell(BellLabel::kPhiPlus, alpha, beta),
              make_quasi_bell(BellLabel::kPhiMinus, alpha, beta),
              make_quasi_bell(BellLabel::kPsiPlus, alpha, beta),
              make_quasi_bell(BellLabel::kPsiMinus, alpha, beta)} {
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw std::invalid_argument("quasi-Bell amplitudes must be positive and finite");
  }
  gram_ = gram_matrix(states_);
}

CoherentSuperposition evolve_pi_over_chi(const CoherentSuperposition& s, std::size_t mode_a,
                                         std::size_t mode_b, double omega_a_over_chi,
                                         double omega_b_over_chi) {
  auto out = rotate_by_pi_multiple(s, mode_a, omega_a_over_chi);
  out = rotate_by_pi_multiple(out, mode_b, omega_b_over_chi);
  return apply_cross_kerr_pi(out, mode_a, mode_b);
}

BellLabel frequency_table_label(double omega_a_over_chi, double omega_b_over_chi) {
  const int ia = table_index(omega_a_over_chi);
  const int ib = table_index(omega_b_over_chi);
  if (ia < 0 || ib < 0) {
    throw UnsupportedConfigurationError(
        "frequencies (" + std::to_string(omega_a_over_chi) + ", " +
        std::to_string(omega_b_over_chi) + ") chi are not in the table {chi, 2 chi}");
  }
  static constexpr BellLabel table[2][2] = {{BellLabel::kPhiPlus, BellLabel::kPhiMinus},
                                            {BellLabel::kPsiPlus, BellLabel::kPsiMinus}};
  return table[ia][ib];
}

GeneratedState generate_from_dynamics(double omega_a_over_chi, double omega_b_over_chi,
                                      double alpha, double beta) {
  const BellLabel label = frequency_table_label(omega_a_over_chi, omega_b_over_chi);
  auto state = evolve_pi_over_chi(CoherentSuperposition::product({alpha, beta}), 0, 1,
                                  omega_a_over_chi, omega_b_over_chi);
  const double f = fidelity(state, make_quasi_bell(label, alpha, beta));
  if (f < 1.0 - 1e-10) {
    throw std::logic_error("evolved state does not match " + std::string(label_name(label)));
  }
  return {std::move(state), label, f};
}

ParityAction parity_action_table(BellLabel label, BellMode mode) {
  using L = BellLabel;
  if (mode == BellMode::kA) {
    switch (label) {
      case L::kPhiPlus: return {L::kPsiPlus, +1};
      case L::kPhiMinus: return {L::kPsiMinus, -1};
      case L::kPsiPlus: return {L::kPhiPlus, +1};
      case L::kPsiMinus: return {L::kPhiMinus, -1};
    }
  } else {
    switch (label) {
      case L::kPhiPlus: return {L::kPhiMinus, +1};
      case L::kPhiMinus: return {L::kPhiPlus, +1};
      case L::kPsiPlus: return {L::kPsiMinus, -1};
      case L::kPsiMinus: return {L::kPsiPlus, -1};
    }
  }
  throw std::invalid_argument("unknown Bell label");
}

ParityCheck verify_parity_action(BellLabel label, BellMode mode, double alpha, double beta) {
  const ParityAction predicted = parity_action_table(label, mode);
  const auto flipped =
      apply_parity(make_quasi_bell(label, alpha, beta), mode == BellMode::kA ? 0 : 1);
  const auto expected = make_quasi_bell(predicted.label, alpha, beta);
  return {predicted, overlap(expected, flipped), fidelity(expected, flipped)};
}

std::string_view phase_name(DisplacementPhase p) {
  return p == DisplacementPhase::kQuarterPi ? "quarter_pi" : "half_pi";
}

std::optional<DisplacementPhase> parse_phase(std::string_view name) {
  if (name == "quarter_pi") return DisplacementPhase::kQuarterPi;
  if (name == "half_pi") return DisplacementPhase::kHalfPi;
  return std::nullopt;
}

Complex quantized_displacement(Complex amp, unsigned k, DisplacementPhase phase) {
  const double r = std::abs(amp);
  if (!(r > 0.0)) throw std::invalid_argument("displacement quantum needs a nonzero amplitude");
  const double scale = phase == DisplacementPhase::kQuarterPi ? 0.5 : 1.0;
  const double theta = (static_cast<double>(k) + 0.5) * kPi * scale;
  return kI * (amp / r) * (theta / r);
}

CoherentSuperposition combined_op(const CoherentSuperposition& state, BellOperator which,
                                  DisplacementQuantum q, Complex alpha, Complex beta,
                                  DisplacementPhase phase) {
  if (state.num_modes() != 2) throw DimensionError("Bell operators act on two-mode states");
  if (which == BellOperator::kParityBDisplaceA) {
    const Complex eps = quantized_displacement(alpha, q.n, phase);
    return apply_parity(apply_displacement(state, 0, eps), 1);
  }
  const Complex lam = quantized_displacement(beta, q.m, phase);
  return apply_parity(apply_displacement(state, 1, lam), 0);
}

Complex predicted_eigenvalue(BellLabel label, BellOperator which, DisplacementQuantum q) {
  const bool phi = label == BellLabel::kPhiPlus || label == BellLabel::kPhiMinus;
  const bool plus = label == BellLabel::kPhiPlus || label == BellLabel::kPsiPlus;
  if (which == BellOperator::kParityBDisplaceA) {
    return kI * parity_sign(q.n) * (phi ? 1.0 : -1.0);
  }
  return kI * parity_sign(q.m) * (plus ? 1.0 : -1.0);
}

Complex bell_expectation(BellLabel label, BellOperator which, DisplacementQuantum q,
                         double alpha, double beta, DisplacementPhase phase) {
  const auto s = make_quasi_bell(label, alpha, beta);
  return overlap(s, combined_op(s, which, q, alpha, beta, phase));
}

double eigen_residual(BellLabel label, BellOperator which, DisplacementQuantum q, double alpha,
                      double beta, DisplacementPhase phase) {
  const Complex eig = predicted_eigenvalue(label, which, q);
  const Complex e = bell_expectation(label, which, q, alpha, beta, phase);
  return std::max(0.0, 1.0 - std::abs(std::conj(eig) * e));
}

EigenBits decode_eigenvalues(Complex pbda, Complex padb, DisplacementQuantum q) {
  return {(pbda * parity_sign(q.n)).imag() > 0.0, (padb * parity_sign(q.m)).imag() > 0.0};
}

EigenBits bits_of(BellLabel label) {
  return {label == BellLabel::kPhiPlus || label == BellLabel::kPhiMinus,
          label == BellLabel::kPhiPlus || label == BellLabel::kPsiPlus};
}

BellLabel label_from_bits(EigenBits bits) {
  if (bits.phi) return bits.plus ? BellLabel::kPhiPlus : BellLabel::kPhiMinus;
  return bits.plus ? BellLabel::kPsiPlus : BellLabel::kPsiMinus;
}

std::array<PermutationMatch, 4> permutation_identities(double alpha, double beta) {
  static constexpr std::array<std::size_t, 2> kSwap{1, 0};
  std::array<PermutationMatch, 4> out{};
  for (auto source : kBellLabels) {
    const auto swapped = permute_modes(make_quasi_bell(source, alpha, beta), kSwap);
    PermutationMatch best{source, source, 0.0, -1.0};
    for (auto candidate : kBellLabels) {
      const auto other = make_quasi_bell(candidate, beta, alpha);
      const Complex rel = overlap(other, swapped);
      const double f = std::norm(rel);
      if (f > best.fidelity) best = {source, candidate, rel, f};
    }
    out[index_of(source)] = best;
  }
  return out;
}

}  // namespace catport
