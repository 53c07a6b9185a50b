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

#include "catport/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "catport/errors.hpp"
#include "catport/fock.hpp"

namespace catport {
namespace {

constexpr std::array<std::size_t, 2> kAliceModes{0, 1};  // (a, T) in the ideal layout
constexpr std::array<std::size_t, 3> kABTtoATB{0, 2, 1};

struct GramRoots {
  Eigen::Matrix4cd sqrt;
  Eigen::Matrix4cd inv_sqrt;
  Eigen::Matrix4cd inv;
  double condition;
};

GramRoots gram_roots(const Eigen::Matrix4cd& g) {
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(g);
  const Eigen::Vector4d vals = eig.eigenvalues();
  const double lo = vals.minCoeff();
  const double hi = vals.maxCoeff();
  if (!(lo > 0.0) || hi / lo > kMaxGramCondition) {
    throw DegenerateBasisError("quasi-Bell Gram matrix is ill-conditioned (condition " +
                               std::to_string(lo > 0.0 ? hi / lo : INFINITY) + ")");
  }
  const Eigen::Matrix4cd& v = eig.eigenvectors();
  const Eigen::Vector4d s = vals.cwiseSqrt();
  return {v * s.cast<Complex>().asDiagonal() * v.adjoint(),
          v * s.cwiseInverse().cast<Complex>().asDiagonal() * v.adjoint(),
          v * vals.cwiseInverse().cast<Complex>().asDiagonal() * v.adjoint(), hi / lo};
}

CoherentSuperposition linear_combination(std::span<const CoherentSuperposition> states,
                                         const Eigen::Ref<const Eigen::Vector4cd>& weights) {
  CoherentSuperposition acc(states.front().num_modes());
  for (std::size_t j = 0; j < states.size(); ++j) {
    acc = acc + weights(static_cast<Eigen::Index>(j)) * states[j];
  }
  return acc;
}

// Clamps tiny negative round-off; fidelities of empty branches are zero.
double safe_fidelity(const CoherentSuperposition& a, const CoherentSuperposition& b) {
  if (a.empty() || b.empty() || norm(a) < 1e-150 || norm(b) < 1e-150) return 0.0;
  return fidelity(a, b);
}

int sign_of(Complex z) { return z.real() >= 0.0 ? 1 : -1; }

bool is_real(Complex z) { return std::abs(z.imag()) <= 1e-12 * std::max(1.0, std::abs(z)); }

std::string sign_pair_name(int st, int sa) {
  return std::string("T") + (st > 0 ? "+" : "-") + "A" + (sa > 0 ? "+" : "-");
}

}  // namespace

void TargetState::validate() const {
  const double n2 = std::norm(c_a) + std::norm(c_b);
  if (std::abs(n2 - 1.0) > 1e-9) {
    throw std::invalid_argument("target coefficients must satisfy |c_a|^2 + |c_b|^2 = 1");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("target amplitude gamma must be positive");
  }
}

CoherentSuperposition TargetState::realized() const { return encoded_on(gamma); }

CoherentSuperposition TargetState::encoded_on(double amp) const {
  return normalize(CoherentSuperposition(1, {CoherentTerm{c_a, {amp}}, CoherentTerm{c_b, {-amp}}}));
}

std::string_view correction_name(CorrectionLabel c) {
  switch (c) {
    case CorrectionLabel::kIdentity: return "Identity";
    case CorrectionLabel::kParity: return "Parity";
    case CorrectionLabel::kDisp: return "Disp";
    case CorrectionLabel::kParityDisp: return "ParityDisp";
  }
  return "?";
}

CorrectionLabel correction_for(BellLabel label) {
  switch (label) {
    case BellLabel::kPhiPlus: return CorrectionLabel::kIdentity;
    case BellLabel::kPhiMinus: return CorrectionLabel::kParity;
    case BellLabel::kPsiPlus: return CorrectionLabel::kDisp;
    case BellLabel::kPsiMinus: return CorrectionLabel::kParityDisp;
  }
  throw std::invalid_argument("unknown Bell label");
}

Complex correction_displacement(double beta, DisplacementPhase phase) {
  return quantized_displacement(beta, 0, phase);
}

CoherentSuperposition apply_correction(const CoherentSuperposition& bob, CorrectionLabel label,
                                       double beta, DisplacementPhase phase) {
  if (bob.num_modes() != 1) throw DimensionError("corrections act on Bob's single mode");
  switch (label) {
    case CorrectionLabel::kIdentity: return bob;
    case CorrectionLabel::kParity: return apply_parity(bob, 0);
    case CorrectionLabel::kDisp:
      return kI * apply_displacement(bob, 0, correction_displacement(beta, phase));
    case CorrectionLabel::kParityDisp:
      return kI * apply_parity(apply_displacement(bob, 0, correction_displacement(beta, phase)), 0);
  }
  throw std::invalid_argument("unknown correction");
}

CoherentSuperposition initial_state(const TargetState& target, double alpha, double beta) {
  target.validate();
  const auto resource = make_quasi_bell(BellLabel::kPhiPlus, alpha, beta);  // modes (a, b)
  return permute_modes(tensor(resource, target.realized()), kABTtoATB);
}

InitialExpansion expand_initial(const TargetState& target, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw std::invalid_argument("amplitudes must be positive");
  const auto psi = initial_state(target, alpha, beta);
  const QuasiBellSet basis(alpha, target.gamma);
  const GramRoots roots = gram_roots(basis.gram());

  std::array<CoherentSuperposition, 4> projections{
      CoherentSuperposition(1), CoherentSuperposition(1), CoherentSuperposition(1),
      CoherentSuperposition(1)};
  for (auto l : kBellLabels) projections[index_of(l)] = contract(basis.state(l), psi, kAliceModes);

  InitialExpansion out{};
  CoherentSuperposition rebuilt(3);
  for (auto l : kBellLabels) {
    const auto k = static_cast<Eigen::Index>(index_of(l));
    const auto bob = linear_combination(projections, roots.inv.row(k).transpose());
    rebuilt = rebuilt + tensor(basis.state(l), bob);
    const double n = norm(bob);
    out.components[index_of(l)] = {l, n > 0.0 ? normalize(bob) : bob, Complex(n)};
  }
  out.residual = norm(psi - rebuilt);
  out.gram_condition = roots.condition;
  return out;
}

LowdinMeasurement::LowdinMeasurement(const QuasiBellSet& set)
    : effects_{CoherentSuperposition(2), CoherentSuperposition(2), CoherentSuperposition(2),
               CoherentSuperposition(2)} {
  const GramRoots roots = gram_roots(set.gram());
  sqrt_ = roots.sqrt;
  inv_sqrt_ = roots.inv_sqrt;
  condition_ = roots.condition;
  for (std::size_t k = 0; k < 4; ++k) {
    effects_[k] = linear_combination(set.states(), inv_sqrt_.col(static_cast<Eigen::Index>(k)));
  }
}

LowdinMeasurement::Probabilities LowdinMeasurement::probabilities(
    const CoherentSuperposition& state) const {
  const double total = overlap(state, state).real();
  if (!(total > 0.0)) throw DegenerateStateError("measurement of a zero-norm state");
  Probabilities p{};
  CoherentSuperposition projected(state.num_modes());
  for (std::size_t k = 0; k < 4; ++k) {
    const Complex amp = overlap(effects_[k], state);
    p.conclusive[k] = std::norm(amp) / total;
    projected = projected + amp * effects_[k];
  }
  const auto rest = state - projected;
  p.inconclusive = rest.empty() ? 0.0 : overlap(rest, rest).real() / total;
  return p;
}

CoherentSuperposition LowdinMeasurement::collapse(BellLabel l, const CoherentSuperposition& state,
                                                  std::span<const std::size_t> measured) const {
  return contract(effect_vector(l), state, measured);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t sample_index(std::span<const double> weights, std::mt19937_64& rng) {
  const double u = uniform01(rng);
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    last_positive = i;
    acc += weights[i];
    if (u < acc) return i;
  }
  return last_positive;
}

namespace {

struct IdealBranches {
  std::array<CoherentSuperposition, 4> bob;  // unnormalized collapsed Bob states
  std::array<double, 4> probability;
  double inconclusive;
};

IdealBranches measure_ideal(const TargetState& target, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw std::invalid_argument("amplitudes must be positive");
  const auto psi = initial_state(target, alpha, beta);
  const LowdinMeasurement povm(QuasiBellSet(alpha, target.gamma));
  IdealBranches out{{CoherentSuperposition(1), CoherentSuperposition(1), CoherentSuperposition(1),
                     CoherentSuperposition(1)},
                    {},
                    0.0};
  CoherentSuperposition projected(3);
  for (auto l : kBellLabels) {
    const auto k = index_of(l);
    out.bob[k] = povm.collapse(l, psi, kAliceModes);
    out.probability[k] = out.bob[k].empty() ? 0.0 : overlap(out.bob[k], out.bob[k]).real();
    projected = projected + tensor(povm.effect_vector(l), out.bob[k]);
  }
  const auto rest = psi - projected;
  out.inconclusive = rest.empty() ? 0.0 : overlap(rest, rest).real();
  return out;
}

ProtocolResult ideal_branch(const IdealBranches& m, BellLabel l, const CoherentSuperposition& ideal,
                            double beta, DisplacementPhase phase) {
  const auto k = index_of(l);
  ProtocolResult r;
  r.outcome.name = std::string(label_name(l));
  r.outcome.bell_label = l;
  r.outcome.eigen_bits = bits_of(l);
  r.outcome.probability = m.probability[k];
  if (m.probability[k] > 1e-300) r.outcome.collapsed_bob = normalize(m.bob[k]);
  r.correction = correction_for(l);
  r.bob_after = r.outcome.collapsed_bob.empty()
                    ? r.outcome.collapsed_bob
                    : apply_correction(r.outcome.collapsed_bob, r.correction, beta, phase);
  r.branch_fidelity = safe_fidelity(r.bob_after, ideal);
  return r;
}

}  // namespace

std::array<double, 5> ideal_outcome_probabilities(const TargetState& target, double alpha,
                                                  double beta) {
  const auto m = measure_ideal(target, alpha, beta);
  return {m.probability[0], m.probability[1], m.probability[2], m.probability[3], m.inconclusive};
}

TeleportRun run_teleport_ideal(const TargetState& target, double alpha, double beta,
                               const IdealOptions& options) {
  const auto m = measure_ideal(target, alpha, beta);
  const auto ideal = target.encoded_on(beta);

  TeleportRun run;
  run.path = "ideal";
  run.mode = options.mode;
  run.seed = options.seed;
  run.inconclusive_rate = m.inconclusive;
  run.probability_sum = m.inconclusive;
  std::vector<ProtocolResult> all;
  for (auto l : kBellLabels) {
    all.push_back(ideal_branch(m, l, ideal, beta, options.phase));
    run.average_fidelity += all.back().outcome.probability * all.back().branch_fidelity;
    run.probability_sum += all.back().outcome.probability;
  }

  if (options.mode == RunMode::kEnumerate) {
    run.branches = std::move(all);
    return run;
  }
  std::mt19937_64 rng(options.seed);
  const std::array<double, 5> weights{m.probability[0], m.probability[1], m.probability[2],
                                      m.probability[3], m.inconclusive};
  const std::size_t drawn = sample_index(weights, rng);
  if (drawn < 4) {
    run.branches.push_back(std::move(all[drawn]));
  } else {
    ProtocolResult r;
    r.outcome.name = "inconclusive";
    r.outcome.probability = m.inconclusive;
    run.branches.push_back(std::move(r));
  }
  return run;
}

std::string_view collapse_name(CollapseMode c) {
  switch (c) {
    case CollapseMode::kAuto: return "auto";
    case CollapseMode::kAnalytic: return "analytic";
    case CollapseMode::kFockProjector: return "fock";
    case CollapseMode::kBranch: return "branch";
  }
  return "?";
}

std::optional<CollapseMode> parse_collapse(std::string_view name) {
  for (auto c : {CollapseMode::kAuto, CollapseMode::kAnalytic, CollapseMode::kFockProjector,
                 CollapseMode::kBranch}) {
    if (collapse_name(c) == name) return c;
  }
  return std::nullopt;
}

double half_line_kernel(double x, double y, int sign) {
  if (sign == 0) throw std::invalid_argument("half-line sign must be nonzero");
  const double s = sign > 0 ? 1.0 : -1.0;
  return 0.5 * std::exp(-0.5 * (x - y) * (x - y)) *
         std::erfc(-s * (x + y) / std::numbers::sqrt2);
}

CoherentSuperposition homodyne_three_mode_state(const TargetState& target, double alpha,
                                                double beta, const FrequencyRow& ab_row,
                                                const FrequencyRow& ta_row) {
  target.validate();
  frequency_table_label(ab_row.omega_a_over_chi, ab_row.omega_b_over_chi);
  frequency_table_label(ta_row.omega_a_over_chi, ta_row.omega_b_over_chi);
  auto s = tensor(target.realized(), CoherentSuperposition::product({alpha, beta}));
  s = evolve_pi_over_chi(s, 1, 2, ab_row.omega_a_over_chi, ab_row.omega_b_over_chi);
  s = evolve_pi_over_chi(s, 0, 1, ta_row.omega_a_over_chi, ta_row.omega_b_over_chi);
  return normalize(s);
}

CoherentSuperposition homodyne_reference_state(const TargetState& target, double alpha,
                                               double beta) {
  const Complex ca = target.c_a;
  const Complex cb = target.c_b;
  const double g = target.gamma;
  std::vector<CoherentTerm> terms{
      {0.5 * ca, {g, alpha, beta}},    {0.5 * cb, {g, alpha, -beta}},
      {0.5 * ca, {g, -alpha, beta}},   {-0.5 * cb, {g, -alpha, -beta}},
      {0.5 * ca, {-g, alpha, -beta}},  {0.5 * cb, {-g, alpha, beta}},
      {-0.5 * ca, {-g, -alpha, -beta}}, {0.5 * cb, {-g, -alpha, beta}},
  };
  return normalize(CoherentSuperposition(3, std::move(terms)));
}

std::array<SignPairMapping, 4> derive_sign_mapping(double alpha, double beta, double gamma,
                                                   const FrequencyRow& ab_row,
                                                   const FrequencyRow& ta_row) {
  // Bob's coefficients for each sign pair under the probes c = (1, 0) and (0, 1).
  std::array<SignPairMapping, 4> out{};
  std::array<CoherentSuperposition, 2> evolved{CoherentSuperposition(3),
                                               CoherentSuperposition(3)};
  for (int probe = 0; probe < 2; ++probe) {
    const double t_amp = probe == 0 ? gamma : -gamma;
    auto s = CoherentSuperposition::product({t_amp, alpha, beta});
    s = evolve_pi_over_chi(s, 1, 2, ab_row.omega_a_over_chi, ab_row.omega_b_over_chi);
    evolved[probe] = evolve_pi_over_chi(s, 0, 1, ta_row.omega_a_over_chi, ta_row.omega_b_over_chi);
  }
  std::size_t idx = 0;
  for (int st : {1, -1}) {
    for (int sa : {1, -1}) {
      SignPairMapping& m = out[idx++];
      m.signs = {st, sa};
      m.action.setZero();
      for (int probe = 0; probe < 2; ++probe) {
        for (const auto& t : evolved[probe].terms()) {
          if (sign_of(t.amps[0]) != st || sign_of(t.amps[1]) != sa) continue;
          m.action(sign_of(t.amps[2]) > 0 ? 0 : 1, probe) += t.coeff;
        }
      }
      const double scale = m.action.cwiseAbs().maxCoeff();
      if (!(scale > 0.0)) throw std::logic_error("empty homodyne branch");
      const Eigen::Matrix2cd a = m.action / scale;
      constexpr double tol = 1e-9;
      const bool diagonal = std::abs(a(0, 1)) < tol && std::abs(a(1, 0)) < tol;
      const bool anti = std::abs(a(0, 0)) < tol && std::abs(a(1, 1)) < tol;
      if (diagonal && std::abs(a(1, 1) - a(0, 0)) < tol) {
        m.correction = CorrectionLabel::kIdentity;
      } else if (diagonal && std::abs(a(1, 1) + a(0, 0)) < tol) {
        m.correction = CorrectionLabel::kDisp;
      } else if (anti && std::abs(a(0, 1) - a(1, 0)) < tol) {
        m.correction = CorrectionLabel::kParity;
      } else if (anti && std::abs(a(0, 1) + a(1, 0)) < tol) {
        m.correction = CorrectionLabel::kParityDisp;
      } else {
        throw std::logic_error("homodyne branch " + sign_pair_name(st, sa) +
                               " is not correctable by {I, P, D, PD}");
      }
    }
  }
  return out;
}

HomodyneRun run_teleport_homodyne(const TargetState& target, double alpha, double beta,
                                  const HomodyneOptions& options) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw std::invalid_argument("amplitudes must be positive");
  HomodyneRun out;
  out.three_mode_state =
      homodyne_three_mode_state(target, alpha, beta, options.ab_row, options.ta_row);
  out.structure_fidelity =
      fidelity(out.three_mode_state, homodyne_reference_state(target, alpha, beta));
  out.mapping = derive_sign_mapping(alpha, beta, target.gamma, options.ab_row, options.ta_row);
  static constexpr std::array<CorrectionLabel, 4> kReference{
      CorrectionLabel::kIdentity, CorrectionLabel::kDisp, CorrectionLabel::kParity,
      CorrectionLabel::kParityDisp};
  out.mapping_matches_reference = true;
  for (std::size_t i = 0; i < 4; ++i) {
    out.mapping_matches_reference &= out.mapping[i].correction == kReference[i];
  }
  out.misclassification_t = half_line_kernel(target.gamma, target.gamma, -1);
  out.misclassification_a = half_line_kernel(alpha, alpha, -1);

  CollapseMode mode = options.collapse;
  if (mode == CollapseMode::kAuto) {
    mode = std::max(alpha, target.gamma) <= 3.0 ? CollapseMode::kAnalytic : CollapseMode::kBranch;
  }
  out.collapse_used = mode;

  Eigen::MatrixXcd proj_plus;
  Eigen::MatrixXcd proj_minus;
  std::size_t dim = 0;
  if (mode == CollapseMode::kFockProjector) {
    dim = options.fock_dim ? options.fock_dim
                           : truncation_rule(std::max(alpha, target.gamma));
    if (dim % 2 == 1) ++dim;  // keeps the spectrum of X free of a zero eigenvalue
    proj_plus = half_line_projector(dim, +1).cast<Complex>();
    proj_minus = half_line_projector(dim, -1).cast<Complex>();
  }
  auto kernel = [&](Complex x, Complex y, int sign) -> Complex {
    switch (mode) {
      case CollapseMode::kAnalytic:
        if (!is_real(x) || !is_real(y)) {
          throw std::invalid_argument("analytic homodyne collapse needs real amplitudes");
        }
        return half_line_kernel(x.real(), y.real(), sign);
      case CollapseMode::kFockProjector: {
        const auto& p = sign > 0 ? proj_plus : proj_minus;
        return coherent_fock(x, dim).dot(p * coherent_fock(y, dim));
      }
      default:
        return (sign_of(x) == sign && sign_of(y) == sign) ? coherent_overlap(x, y) : Complex(0.0);
    }
  };

  const auto ideal = target.encoded_on(beta);
  const auto& terms = out.three_mode_state.terms();
  TeleportRun& run = out.run;
  run.path = "homodyne";
  for (const auto& m : out.mapping) {
    const int st = m.signs[0];
    const int sa = m.signs[1];
    std::vector<Complex> corrected_overlap;  // <ideal | U b_k>
    corrected_overlap.reserve(terms.size());
    for (const auto& t : terms) {
      const auto ub = apply_correction(CoherentSuperposition::coherent(t.amps[2]), m.correction,
                                       beta, options.phase);
      corrected_overlap.push_back(overlap(ideal, ub));
    }
    Complex prob = 0.0;
    Complex fid = 0.0;
    for (std::size_t j = 0; j < terms.size(); ++j) {
      for (std::size_t k = 0; k < terms.size(); ++k) {
        const Complex w = std::conj(terms[j].coeff) * terms[k].coeff *
                          kernel(terms[j].amps[0], terms[k].amps[0], st) *
                          kernel(terms[j].amps[1], terms[k].amps[1], sa);
        prob += w * coherent_overlap(terms[j].amps[2], terms[k].amps[2]);
        fid += w * corrected_overlap[k] * std::conj(corrected_overlap[j]);
      }
    }

    ProtocolResult r;
    r.outcome.name = sign_pair_name(st, sa);
    r.outcome.signs = m.signs;
    r.outcome.eigen_bits = {st > 0, sa > 0};
    r.outcome.probability = std::max(0.0, prob.real());
    std::vector<CoherentTerm> branch;
    for (const auto& t : terms) {
      if (sign_of(t.amps[0]) == st && sign_of(t.amps[1]) == sa) {
        branch.push_back({t.coeff, {t.amps[2]}});
      }
    }
    const CoherentSuperposition component(1, std::move(branch));
    if (!component.empty() && norm(component) > 1e-150) {
      r.outcome.collapsed_bob = normalize(component);
      r.bob_after = apply_correction(r.outcome.collapsed_bob, m.correction, beta, options.phase);
    }
    r.correction = m.correction;
    r.branch_fidelity =
        r.outcome.probability > 1e-300 ? std::clamp(fid.real() / prob.real(), 0.0, 1.0) : 0.0;
    run.average_fidelity += r.outcome.probability * r.branch_fidelity;
    run.probability_sum += r.outcome.probability;
    run.branches.push_back(std::move(r));
  }
  return out;
}

BaselineResult classical_baseline(const TargetState& target, double alpha, double beta,
                                  const BaselineOptions& options) {
  if (options.trials == 0) throw std::invalid_argument("baseline needs at least one trial");
  std::mt19937_64 rng(options.seed);

  struct Table {
    std::array<double, 5> weights;
    std::array<std::array<double, 4>, 4> fidelity;  // [branch][correction]
  };
  auto build = [&](const TargetState& t) {
    const auto m = measure_ideal(t, alpha, beta);
    const auto ideal = t.encoded_on(beta);
    Table tab{{m.probability[0], m.probability[1], m.probability[2], m.probability[3],
               m.inconclusive},
              {}};
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t c = 0; c < 4; ++c) {
        tab.fidelity[k][c] =
            m.probability[k] > 1e-300
                ? safe_fidelity(apply_correction(normalize(m.bob[k]), kCorrectionLabels[c], beta,
                                                 options.phase),
                                ideal)
                : 0.0;
      }
    }
    return tab;
  };

  std::optional<Table> fixed;
  if (!options.random_targets) fixed = build(target);

  std::size_t hits = 0;
  double fid_sum = 0.0;
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    Table tab;
    if (fixed) {
      tab = *fixed;
    } else {
      const double cos_theta = 2.0 * uniform01(rng) - 1.0;
      const double phi = 2.0 * std::numbers::pi * uniform01(rng);
      const double theta = std::acos(cos_theta);
      TargetState t{std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi), target.gamma};
      tab = build(t);
    }
    const std::size_t branch = sample_index(tab.weights, rng);
    const auto guess = std::min<std::size_t>(3, static_cast<std::size_t>(4.0 * uniform01(rng)));
    if (branch < 4) {
      if (kCorrectionLabels[guess] == correction_for(kBellLabels[branch])) ++hits;
      fid_sum += tab.fidelity[branch][guess];
    }
  }
  const double n = static_cast<double>(options.trials);
  return {static_cast<double>(hits) / n, fid_sum / n, options.trials, options.seed};
}

}  // namespace catport
