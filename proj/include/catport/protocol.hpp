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

// Teleportation of c_a|gamma> + c_b|-gamma> through the entangled coherent
// resource |alpha>_a|beta_+>_b + |-alpha>_a|beta_->_b.
//
// Mode layout of the ideal path is (a, T, b): Alice's resource mode, the
// target, Bob's mode. The homodyne path uses (T, A, B).

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "catport/coherent.hpp"
#include "catport/quasi_bell.hpp"

namespace catport {

struct TargetState {
  Complex c_a{1.0, 0.0};
  Complex c_b{0.0, 0.0};
  double gamma = 1.0;

  /// Throws unless |c_a|^2 + |c_b|^2 = 1 (to 1e-9) and gamma > 0.
  void validate() const;
  /// normalize(c_a|gamma> + c_b|-gamma>); |+-gamma> overlap, so the logical
  /// coefficients alone do not fix the physical norm.
  CoherentSuperposition realized() const;
  /// The same logical state written on amplitude `amp` (Bob's ideal output).
  CoherentSuperposition encoded_on(double amp) const;
};

enum class CorrectionLabel { kIdentity, kParity, kDisp, kParityDisp };

inline constexpr std::array<CorrectionLabel, 4> kCorrectionLabels{
    CorrectionLabel::kIdentity, CorrectionLabel::kParity, CorrectionLabel::kDisp,
    CorrectionLabel::kParityDisp};

std::string_view correction_name(CorrectionLabel c);

/// Phi+ -> Identity, Phi- -> Parity, Psi+ -> Disp, Psi- -> ParityDisp.
CorrectionLabel correction_for(BellLabel label);

/// mu with Im(mu beta) = pi/4 (kQuarterPi) or pi/2 (kHalfPi).
Complex correction_displacement(double beta, DisplacementPhase phase);

/// Identity, P, i D(mu), i P D(mu) on a single-mode state.
CoherentSuperposition apply_correction(const CoherentSuperposition& bob, CorrectionLabel label,
                                       double beta,
                                       DisplacementPhase phase = DisplacementPhase::kQuarterPi);

/// Initial three-mode state on (a, T, b).
CoherentSuperposition initial_state(const TargetState& target, double alpha, double beta);

struct ExpansionComponent {
  BellLabel label;
  CoherentSuperposition bob{1};  // normalized Bob factor
  Complex coefficient;        // weight of quasi-Bell(label) (x) bob in the initial state
};

struct InitialExpansion {
  std::array<ExpansionComponent, 4> components;
  double residual;        // || initial - sum_k B_k (x) coefficient_k bob_k ||
  double gram_condition;  // condition number of the (a, T) quasi-Bell Gram matrix
};

/// Expands the initial state over the quasi-Bell states of modes (a, T),
/// built with amplitudes (alpha, gamma), by solving the Gram system.
InitialExpansion expand_initial(const TargetState& target, double alpha, double beta);

inline constexpr double kMaxGramCondition = 1e12;

/// Symmetric (Lowdin) orthonormalization of a quasi-Bell quadruple, used as
/// the Bell measurement. Effects are the projectors onto the orthonormalized
/// vectors plus an inconclusive remainder I - sum_k |e_k><e_k|.
class LowdinMeasurement {
 public:
  explicit LowdinMeasurement(const QuasiBellSet& set);

  const CoherentSuperposition& effect_vector(BellLabel l) const { return effects_[index_of(l)]; }
  double condition_number() const { return condition_; }
  const Eigen::Matrix4cd& gram_sqrt() const { return sqrt_; }
  const Eigen::Matrix4cd& gram_inv_sqrt() const { return inv_sqrt_; }

  struct Probabilities {
    std::array<double, 4> conclusive;
    double inconclusive;
  };

  /// Outcome probabilities for a two-mode state (need not be normalized; the
  /// probabilities are relative to its squared norm).
  Probabilities probabilities(const CoherentSuperposition& state) const;

  /// Unnormalized post-measurement state of the modes not in `measured`.
  CoherentSuperposition collapse(BellLabel l, const CoherentSuperposition& state,
                                 std::span<const std::size_t> measured) const;

 private:
  std::array<CoherentSuperposition, 4> effects_;
  Eigen::Matrix4cd sqrt_;
  Eigen::Matrix4cd inv_sqrt_;
  double condition_;
};

struct MeasurementOutcome {
  std::string name;                   // Bell label, sign pair such as "T+A-", or "inconclusive"
  std::optional<BellLabel> bell_label;
  std::optional<std::array<int, 2>> signs;  // homodyne (sign_T, sign_A)
  EigenBits eigen_bits{};
  double probability = 0.0;
  CoherentSuperposition collapsed_bob{1};  // normalized pure Bob component of this outcome
};

struct ProtocolResult {
  MeasurementOutcome outcome;
  CorrectionLabel correction = CorrectionLabel::kIdentity;
  CoherentSuperposition bob_after{1};
  double branch_fidelity = 0.0;
};

enum class RunMode { kEnumerate, kSample };

struct TeleportRun {
  std::string path;  // "ideal" or "homodyne"
  RunMode mode = RunMode::kEnumerate;
  std::uint64_t seed = 0;
  std::vector<ProtocolResult> branches;
  double average_fidelity = 0.0;  // sum_k p_k F_k over the enumerated outcomes
  double inconclusive_rate = 0.0;
  double probability_sum = 0.0;  // conclusive + inconclusive
};

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double uniform01(std::mt19937_64& rng);

/// Index drawn from nonnegative weights summing to ~1; the last index absorbs rounding.
std::size_t sample_index(std::span<const double> weights, std::mt19937_64& rng);

struct IdealOptions {
  RunMode mode = RunMode::kEnumerate;
  std::uint64_t seed = 0;
  DisplacementPhase phase = DisplacementPhase::kQuarterPi;
};

/// Bell measurement on (a, T) by Lowdin POVM, Bob correction from the decoded
/// bits. Enumerate returns all four branches; sample returns the drawn one.
/// Aggregates always come from the full enumeration.
TeleportRun run_teleport_ideal(const TargetState& target, double alpha, double beta,
                               const IdealOptions& options = {});

/// Per-outcome probabilities of the ideal path, conclusive labels first then
/// the inconclusive weight.
std::array<double, 5> ideal_outcome_probabilities(const TargetState& target, double alpha,
                                                  double beta);

struct FrequencyRow {
  double omega_a_over_chi = 2.0;
  double omega_b_over_chi = 2.0;

  bool operator==(const FrequencyRow&) const = default;
};

enum class CollapseMode { kAuto, kAnalytic, kFockProjector, kBranch };

std::string_view collapse_name(CollapseMode c);
std::optional<CollapseMode> parse_collapse(std::string_view name);

struct HomodyneOptions {
  FrequencyRow ab_row;  // entangles A with B
  FrequencyRow ta_row;  // entangles T with A (T plays the "a" role of the table)
  CollapseMode collapse = CollapseMode::kAuto;
  DisplacementPhase phase = DisplacementPhase::kQuarterPi;
  std::size_t fock_dim = 0;  // kFockProjector only; 0 selects truncation_rule
};

struct SignPairMapping {
  std::array<int, 2> signs;  // (sign_T, sign_A)
  Eigen::Matrix2cd action;   // (c_a, c_b) -> coefficients of (|beta>, |-beta>)
  CorrectionLabel correction;
};

struct HomodyneRun {
  TeleportRun run;
  CoherentSuperposition three_mode_state{3};  // modes (T, A, B), normalized
  double structure_fidelity = 0.0;            // against homodyne_reference_state
  std::array<SignPairMapping, 4> mapping{};
  bool mapping_matches_reference = false;
  double misclassification_t = 0.0;  // P(X_T < 0) for |gamma>
  double misclassification_a = 0.0;  // P(X_A < 0) for |alpha>
  CollapseMode collapse_used = CollapseMode::kAnalytic;
};

/// <x| P_sign |y> for real coherent amplitudes and X = a + a^dag:
/// (1/2) exp(-(x - y)^2 / 2) erfc(-sign (x + y) / sqrt 2).
double half_line_kernel(double x, double y, int sign);

/// A-B entangled at t = pi/chi, then T-A at t = pi/chi, target on T.
CoherentSuperposition homodyne_three_mode_state(const TargetState& target, double alpha,
                                                double beta, const FrequencyRow& ab_row,
                                                const FrequencyRow& ta_row);

/// (1/2){|g>|a>(Ca|b>+Cb|-b>) + |g>|-a>(Ca|b>-Cb|-b>)
///       + |-g>|a>(Ca|-b>+Cb|b>) + |-g>|-a>(-Ca|-b>+Cb|b>)}, normalized.
CoherentSuperposition homodyne_reference_state(const TargetState& target, double alpha,
                                               double beta);

/// Derives the sign-pair -> correction table from the three-mode expansion.
std::array<SignPairMapping, 4> derive_sign_mapping(double alpha, double beta, double gamma,
                                                   const FrequencyRow& ab_row,
                                                   const FrequencyRow& ta_row);

HomodyneRun run_teleport_homodyne(const TargetState& target, double alpha, double beta,
                                  const HomodyneOptions& options = {});

struct BaselineOptions {
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  bool random_targets = false;  // draw (c_a, c_b) uniformly on the Bloch sphere per trial
  DisplacementPhase phase = DisplacementPhase::kQuarterPi;
};

struct BaselineResult {
  double guess_rate;
  double average_fidelity;
  std::size_t trials;
  std::uint64_t seed;
};

/// Bob applies a uniformly random correction with no classical message.
BaselineResult classical_baseline(const TargetState& target, double alpha, double beta,
                                  const BaselineOptions& options);

}  // namespace catport
