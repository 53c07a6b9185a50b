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

// The four entangled coherent ("quasi-Bell") states on two modes (a, b),
// their generation by cross-Kerr dynamics at t = pi/chi, and the combined
// parity x displacement operators that act as Bell operators on them.
//
//   Phi(+/-) = |alpha>|beta_+> +/- |-alpha>|beta_->
//   Psi(+/-) = |alpha>|beta_-> +/- |-alpha>|beta_+>
//   |beta_(+/-)> = (|beta> +/- |-beta>) / 2

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include <Eigen/Dense>

#include "catport/coherent.hpp"

namespace catport {

enum class BellLabel { kPhiPlus, kPhiMinus, kPsiPlus, kPsiMinus };

inline constexpr std::array<BellLabel, 4> kBellLabels{BellLabel::kPhiPlus, BellLabel::kPhiMinus,
                                                      BellLabel::kPsiPlus, BellLabel::kPsiMinus};

constexpr std::size_t index_of(BellLabel l) { return static_cast<std::size_t>(l); }
std::string_view label_name(BellLabel l);
std::optional<BellLabel> parse_label(std::string_view name);

/// (|lam> + sign |-lam>) / 2. Not normalized.
CoherentSuperposition make_cat(Complex lam, int sign);

/// Normalized two-mode quasi-Bell state (mode 0 = a, mode 1 = b).
CoherentSuperposition make_quasi_bell(BellLabel label, Complex alpha, Complex beta);

/// Signed Gram entries for real amplitudes, e.g. <Phi+|Phi-> = exp(-2 beta^2),
/// <Phi+|Psi-> = -exp(-2 alpha^2 - 2 beta^2).
Eigen::Matrix4cd quasi_bell_gram_closed_form(double alpha, double beta);

class QuasiBellSet {
 public:
  QuasiBellSet(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const CoherentSuperposition& state(BellLabel l) const { return states_[index_of(l)]; }
  std::span<const CoherentSuperposition> states() const { return states_; }
  const Eigen::Matrix4cd& gram() const { return gram_; }

 private:
  double alpha_;
  double beta_;
  std::array<CoherentSuperposition, 4> states_;
  Eigen::Matrix4cd gram_;
};

/// Exact t = pi/chi evolution of modes (mode_a, mode_b) under
/// w_a n_a + w_b n_b + chi n_a n_b, with frequencies given in units of chi.
CoherentSuperposition evolve_pi_over_chi(const CoherentSuperposition& s, std::size_t mode_a,
                                         std::size_t mode_b, double omega_a_over_chi,
                                         double omega_b_over_chi);

/// Label produced by the frequency table; throws UnsupportedConfigurationError
/// unless each ratio is 1 or 2.
BellLabel frequency_table_label(double omega_a_over_chi, double omega_b_over_chi);

struct GeneratedState {
  CoherentSuperposition state;
  BellLabel label;
  double match_fidelity;  // against make_quasi_bell(label, alpha, beta)
};

/// Evolves |alpha>|beta> to t = pi/chi and identifies the resulting label.
GeneratedState generate_from_dynamics(double omega_a_over_chi, double omega_b_over_chi,
                                      double alpha, double beta);

enum class BellMode { kA, kB };

struct ParityAction {
  BellLabel label;
  int sign;
};

/// P_a Phi(+/-) = +/- Psi(+/-),  P_a Psi(+/-) = +/- Phi(+/-),
/// P_b Phi(+/-) = Phi(-/+),      P_b Psi(+/-) = -Psi(-/+).
ParityAction parity_action_table(BellLabel label, BellMode mode);

struct ParityCheck {
  ParityAction predicted;
  Complex relative;  // <predicted state | P state>; equals the sign when the table holds
  double fidelity;
};

ParityCheck verify_parity_action(BellLabel label, BellMode mode, double alpha, double beta);

enum class BellOperator { kParityBDisplaceA, kParityADisplaceB };

/// How the displacement quantum is tied to the amplitude it acts against.
///  - kQuarterPi: Im(eps conj(alpha)) = (n + 1/2) pi / 2. The relative phase
///    picked up between |alpha> and |-alpha> is then (n + 1/2) pi once the
///    overlap phase of the displaced coherent state is included, so the
///    quasi-Bell states become eigenvectors with eigenvalues +/- i as the
///    amplitude grows.
///  - kHalfPi: Im(eps conj(alpha)) = (n + 1/2) pi. The displacement then acts
///    as -1 on span{|alpha>, |-alpha>} in the large-amplitude limit.
enum class DisplacementPhase { kQuarterPi, kHalfPi };

std::string_view phase_name(DisplacementPhase p);
std::optional<DisplacementPhase> parse_phase(std::string_view name);

struct DisplacementQuantum {
  unsigned n = 0;
  unsigned m = 0;
};

/// eps with Im(eps conj(amp)) = (k + 1/2) pi * {1/2, 1}, directed orthogonally
/// to amp's phase. For real positive amp this is i (k + 1/2) pi f / amp.
Complex quantized_displacement(Complex amp, unsigned k, DisplacementPhase phase);

/// P_b D_a(eps) or P_a D_b(lambda) on a two-mode state; displacement acts first.
CoherentSuperposition combined_op(const CoherentSuperposition& state, BellOperator which,
                                  DisplacementQuantum q, Complex alpha, Complex beta,
                                  DisplacementPhase phase = DisplacementPhase::kQuarterPi);

/// i(-1)^n on Phi, -i(-1)^n on Psi for P_b D_a; +/- i(-1)^m for P_a D_b.
Complex predicted_eigenvalue(BellLabel label, BellOperator which, DisplacementQuantum q);

/// <s| Op |s> for the normalized quasi-Bell state s.
Complex bell_expectation(BellLabel label, BellOperator which, DisplacementQuantum q,
                         double alpha, double beta,
                         DisplacementPhase phase = DisplacementPhase::kQuarterPi);

/// 1 - |<s| conj(eig) Op |s>|, clamped at zero.
double eigen_residual(BellLabel label, BellOperator which, DisplacementQuantum q, double alpha,
                      double beta, DisplacementPhase phase = DisplacementPhase::kQuarterPi);

/// Two classical bits carried by the Bell measurement.
struct EigenBits {
  bool phi;   // P_b D_a eigenvalue +i(-1)^n: Phi family; -i(-1)^n: Psi family
  bool plus;  // P_a D_b eigenvalue +i(-1)^m: "+" member; -i(-1)^m: "-" member

  bool operator==(const EigenBits&) const = default;
};

EigenBits decode_eigenvalues(Complex pbda, Complex padb, DisplacementQuantum q);
EigenBits bits_of(BellLabel label);
BellLabel label_from_bits(EigenBits bits);

struct PermutationMatch {
  BellLabel source;   // state built with amplitudes (alpha, beta)
  BellLabel match;    // best-matching state with amplitudes (beta, alpha) after swapping modes
  Complex relative;   // overlap between the two normalized states
  double fidelity;
};

/// Swaps the two modes of each quasi-Bell state and finds which state of the
/// (beta, alpha) set it equals.
std::array<PermutationMatch, 4> permutation_identities(double alpha, double beta);

}  // namespace catport
