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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "catport/errors.hpp"
#include "catport/fock.hpp"
#include "catport/quasi_bell.hpp"

namespace catport {
namespace {

using enum BellLabel;

TEST(Labels, NamesRoundTrip) {
  for (auto l : kBellLabels) EXPECT_EQ(parse_label(label_name(l)), l);
  EXPECT_FALSE(parse_label("Phi").has_value());
}

TEST(Cat, VacuumMerge) {
  const auto c = make_cat(0.0, +1);
  ASSERT_EQ(c.terms().size(), 1u);
  EXPECT_EQ(c.terms()[0].coeff, Complex(1.0));
}

TEST(Cat, NormSquared) {
  const auto c = make_cat(1.0, +1);
  EXPECT_NEAR(std::pow(norm(c), 2), (1.0 + std::exp(-2.0)) / 2.0, 1e-15);
  EXPECT_NEAR(std::pow(norm(c), 2), 0.5676676, 1e-7);
  EXPECT_NEAR(std::pow(to_fock(c, 40).norm(), 2), 0.5676676, 1e-7);
}

TEST(Cat, OddCatVanishesAtZero) {
  EXPECT_TRUE(make_cat(0.0, -1).empty());
  EXPECT_THROW(normalize(make_cat(0.0, -1)), DegenerateStateError);
}

TEST(QuasiBell, ZeroAmplitudeCollapsesTheSet) {
  // Each state stays nonzero (one cat is always the vacuum), but all four
  // coincide up to sign, so the set cannot serve as a basis.
  for (auto l : kBellLabels) {
    const auto s = make_quasi_bell(l, 0.0, 0.0);
    EXPECT_NEAR(fidelity(s, CoherentSuperposition::product({0.0, 0.0})), 1.0, 1e-15);
  }
  EXPECT_THROW(QuasiBellSet(0.0, 0.0), std::invalid_argument);
}

TEST(QuasiBell, NormalizedAndOverlaps) {
  for (auto l : kBellLabels) EXPECT_NEAR(norm(make_quasi_bell(l, 2.0, 2.0)), 1.0, 1e-12);
  EXPECT_NEAR(overlap(make_quasi_bell(kPhiPlus, 2.0, 2.0), make_quasi_bell(kPhiMinus, 2.0, 2.0))
                  .real(),
              std::exp(-8.0), 1e-15);
}

TEST(QuasiBell, RegroupingIdentity) {
  // |a>|b+> + |-a>|b-> equals |a+>|b> + |a->|-b>.
  for (double a : {0.5, 1.0, 2.5}) {
    for (double b : {0.7, 2.0}) {
      const auto lhs = tensor(CoherentSuperposition::coherent(a), make_cat(b, +1)) +
                       tensor(CoherentSuperposition::coherent(-a), make_cat(b, -1));
      const auto rhs = tensor(make_cat(a, +1), CoherentSuperposition::coherent(b)) +
                       tensor(make_cat(a, -1), CoherentSuperposition::coherent(-b));
      EXPECT_NEAR(fidelity(lhs, rhs), 1.0, 1e-12);
      EXPECT_LT(norm(lhs - rhs), 1e-12);
    }
  }
}

TEST(QuasiBell, AsymptoticOrthogonality) {
  const QuasiBellSet set(4.0, 4.0);
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) worst = std::max(worst, std::abs(set.gram()(i, j)));
    }
  }
  EXPECT_NEAR(worst, std::exp(-32.0), 1e-16);
  EXPECT_NEAR(worst, 1.27e-14, 0.01e-14);
}

TEST(QuasiBell, SetRequiresPositiveAmplitudes) {
  EXPECT_THROW(QuasiBellSet(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(QuasiBellSet(1.0, -1.0), std::invalid_argument);
}

TEST(Gram, ClosedForms) {
  for (double a : {1.0, 2.0, 4.0}) {
    for (double b : {1.0, 2.0, 4.0}) {
      const QuasiBellSet set(a, b);
      const auto& g = set.gram();
      const auto closed = quasi_bell_gram_closed_form(a, b);
      EXPECT_LT((g - closed).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT((g - g.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
      const double ea = std::exp(-2 * a * a);
      const double eb = std::exp(-2 * b * b);
      EXPECT_NEAR(std::abs(g(0, 1)), eb, 1e-12);
      EXPECT_NEAR(std::abs(g(2, 3)), eb, 1e-12);
      EXPECT_NEAR(std::abs(g(0, 2)), ea, 1e-12);
      EXPECT_NEAR(std::abs(g(1, 3)), ea, 1e-12);
      EXPECT_NEAR(std::abs(g(0, 3)), ea * eb, 1e-12);
      EXPECT_NEAR(std::abs(g(1, 2)), ea * eb, 1e-12);
      for (int k = 0; k < 4; ++k) EXPECT_NEAR(g(k, k).real(), 1.0, 1e-12);
    }
  }
}

TEST(Dynamics, FrequencyTable) {
  EXPECT_EQ(frequency_table_label(2, 2), kPhiPlus);
  EXPECT_EQ(frequency_table_label(2, 1), kPhiMinus);
  EXPECT_EQ(frequency_table_label(1, 2), kPsiPlus);
  EXPECT_EQ(frequency_table_label(1, 1), kPsiMinus);
  EXPECT_THROW(frequency_table_label(3, 1), UnsupportedConfigurationError);
  EXPECT_THROW(generate_from_dynamics(1.5, 2, 1, 1), UnsupportedConfigurationError);
}

TEST(Dynamics, GeneratedStatesMatchLabels) {
  for (double amp : {0.5, 1.0, 3.0}) {
    for (auto [wa, wb] : {std::pair{2.0, 2.0}, {2.0, 1.0}, {1.0, 2.0}, {1.0, 1.0}}) {
      const auto g = generate_from_dynamics(wa, wb, amp, amp + 0.25);
      EXPECT_EQ(g.label, frequency_table_label(wa, wb));
      EXPECT_GE(g.match_fidelity, 1.0 - 1e-10);
    }
  }
}

TEST(Dynamics, AgreesWithFockEvolution) {
  const auto start = to_fock(CoherentSuperposition::product({1.0, 1.0}), 40);
  for (auto [wa, wb] : {std::pair{2.0, 2.0}, {2.0, 1.0}, {1.0, 2.0}, {1.0, 1.0}}) {
    const auto g = generate_from_dynamics(wa, wb, 1.0, 1.0);
    const auto dense = evolve(start, {wa, wb, 1.0, std::numbers::pi});
    EXPECT_NEAR(fidelity(to_fock(g.state, 40), dense), 1.0, 1e-8);
    // Same state including phase.
    EXPECT_NEAR(std::abs(inner(to_fock(g.state, 40), dense) - 1.0), 0.0, 1e-8);
  }
}

TEST(Parity, TableEntries) {
  EXPECT_EQ(parity_action_table(kPhiPlus, BellMode::kA).label, kPsiPlus);
  EXPECT_EQ(parity_action_table(kPhiPlus, BellMode::kA).sign, 1);
  EXPECT_EQ(parity_action_table(kPsiPlus, BellMode::kB).label, kPsiMinus);
  EXPECT_EQ(parity_action_table(kPsiPlus, BellMode::kB).sign, -1);
  for (auto l : kBellLabels) {
    for (auto m : {BellMode::kA, BellMode::kB}) {
      const auto once = parity_action_table(l, m);
      const auto twice = parity_action_table(once.label, m);
      EXPECT_EQ(twice.label, l);
      EXPECT_EQ(once.sign * twice.sign, 1);
    }
  }
}

TEST(Parity, ExactAtEveryAmplitude) {
  for (double a : {0.2, 0.7, 1.0, 2.0, 5.0}) {
    for (auto l : kBellLabels) {
      for (auto m : {BellMode::kA, BellMode::kB}) {
        const auto c = verify_parity_action(l, m, a, a * 1.3);
        EXPECT_NEAR(c.fidelity, 1.0, 1e-12);
        EXPECT_LT(std::abs(c.relative - static_cast<double>(c.predicted.sign)), 1e-12);
      }
    }
  }
}

TEST(Displacement, QuantizedValues) {
  const Complex e0 = quantized_displacement(4.0, 0, DisplacementPhase::kQuarterPi);
  EXPECT_NEAR(e0.real(), 0.0, 1e-16);
  EXPECT_NEAR(e0.imag(), std::numbers::pi / 16.0, 1e-15);
  const Complex h0 = quantized_displacement(4.0, 0, DisplacementPhase::kHalfPi);
  EXPECT_NEAR(h0.imag(), std::numbers::pi / 8.0, 1e-15);
  EXPECT_NEAR(std::abs(quantized_displacement(4.0, 1, DisplacementPhase::kQuarterPi)),
              3.0 * std::abs(e0), 1e-15);
  // General phase: Im(eps conj(amp)) fixed, eps orthogonal to amp.
  const Complex amp = std::polar(2.0, 0.7);
  const Complex e = quantized_displacement(amp, 2, DisplacementPhase::kQuarterPi);
  EXPECT_NEAR(std::imag(e * std::conj(amp)), 2.5 * std::numbers::pi / 2.0, 1e-14);
  EXPECT_NEAR(std::real(e * std::conj(amp)), 0.0, 1e-14);
  for (auto p : {DisplacementPhase::kQuarterPi, DisplacementPhase::kHalfPi}) {
    EXPECT_EQ(parse_phase(phase_name(p)), p);
  }
}

TEST(Eigen, PredictedEigenvalues) {
  const DisplacementQuantum q0{0, 0};
  const std::array<Complex, 4> pbda{kI, kI, -kI, -kI};
  const std::array<Complex, 4> padb{kI, -kI, kI, -kI};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(predicted_eigenvalue(kBellLabels[k], BellOperator::kParityBDisplaceA, q0), pbda[k]);
    EXPECT_EQ(predicted_eigenvalue(kBellLabels[k], BellOperator::kParityADisplaceB, q0), padb[k]);
  }
  EXPECT_EQ(predicted_eigenvalue(kPsiMinus, BellOperator::kParityADisplaceB, {0, 1}), kI);
  EXPECT_EQ(predicted_eigenvalue(kPhiPlus, BellOperator::kParityBDisplaceA, {1, 0}), -kI);
}

TEST(Eigen, CombinedOperatorApproachesEigenvalue) {
  const double a = 32.0;
  for (auto l : kBellLabels) {
    for (auto op : {BellOperator::kParityBDisplaceA, BellOperator::kParityADisplaceB}) {
      for (DisplacementQuantum q : {DisplacementQuantum{0, 0}, DisplacementQuantum{1, 1}}) {
        const auto s = make_quasi_bell(l, a, a);
        const auto out = combined_op(s, op, q, a, a);
        const Complex eig = predicted_eigenvalue(l, op, q);
        const unsigned k = op == BellOperator::kParityBDisplaceA ? q.n : q.m;
        const double eps = (k + 0.5) * std::numbers::pi / (2.0 * a);
        const double deficit = 1.0 - std::exp(-eps * eps / 2.0);
        EXPECT_NEAR(std::abs(bell_expectation(l, op, q, a, a) - eig), deficit, 1e-9);
        EXPECT_NEAR(norm(out - eig * s), std::sqrt(2.0 * deficit), 1e-8);
      }
    }
  }
}

TEST(Eigen, ResidualClosedFormAndSlope) {
  const std::vector<double> grid{4, 8, 16, 32};
  for (auto op : {BellOperator::kParityBDisplaceA, BellOperator::kParityADisplaceB}) {
    for (auto l : kBellLabels) {
      std::vector<double> lx, ly;
      double prev = 1.0;
      for (double a : grid) {
        const double r = eigen_residual(l, op, {}, a, a);
        const double eps = std::numbers::pi / (4.0 * a);
        EXPECT_NEAR(r, 1.0 - std::exp(-eps * eps / 2.0), 1e-9);
        EXPECT_LT(r, prev);
        prev = r;
        lx.push_back(std::log(a));
        ly.push_back(std::log(r));
      }
      const double slope = (ly.back() - ly.front()) / (lx.back() - lx.front());
      EXPECT_NEAR(slope, -2.0, 0.1);
    }
  }
}

TEST(Eigen, HigherQuantumHasLargerResidual) {
  for (auto l : kBellLabels) {
    EXPECT_GT(eigen_residual(l, BellOperator::kParityBDisplaceA, {1, 0}, 4, 4),
              eigen_residual(l, BellOperator::kParityBDisplaceA, {0, 0}, 4, 4));
  }
}

TEST(Eigen, HalfPiQuantizationLosesTheEigenvalue) {
  // With Im(eps alpha) = pi/2 the two coherent branches acquire opposite
  // relative phases, so the expectation vanishes rather than approaching +/- i.
  for (double a : {8.0, 16.0, 32.0}) {
    EXPECT_GT(eigen_residual(kPhiPlus, BellOperator::kParityBDisplaceA, {}, a, a,
                             DisplacementPhase::kHalfPi),
              0.99);
  }
}

TEST(Eigen, BitDecoding) {
  for (double a : {8.0, 16.0, 32.0}) {
    for (auto l : kBellLabels) {
      for (DisplacementQuantum q : {DisplacementQuantum{0, 0}, DisplacementQuantum{1, 2}}) {
        const auto bits =
            decode_eigenvalues(bell_expectation(l, BellOperator::kParityBDisplaceA, q, a, a),
                               bell_expectation(l, BellOperator::kParityADisplaceB, q, a, a), q);
        EXPECT_EQ(bits, bits_of(l));
        EXPECT_EQ(label_from_bits(bits), l);
      }
    }
  }
}

TEST(Eigen, OrderingsAgreeOnlyAsymptotically) {
  double prev = 1.0;
  for (double a : {4.0, 8.0, 16.0, 32.0}) {
    const auto s = make_quasi_bell(kPhiPlus, a, a);
    const auto x = combined_op(combined_op(s, BellOperator::kParityADisplaceB, {}, a, a),
                               BellOperator::kParityBDisplaceA, {}, a, a);
    const auto y = combined_op(combined_op(s, BellOperator::kParityBDisplaceA, {}, a, a),
                               BellOperator::kParityADisplaceB, {}, a, a);
    const double gap = 1.0 - fidelity(x, y);
    EXPECT_GT(gap, 1e-6);
    EXPECT_LT(gap, 0.6 * prev);
    prev = gap;
  }
  EXPECT_LT(prev, 1e-2);
}

TEST(Permutation, SwapIdentities) {
  for (auto [a, b] : {std::pair{1.0, 2.0}, {2.5, 0.8}}) {
    const auto ids = permutation_identities(a, b);
    const std::array<BellLabel, 4> expected{kPhiPlus, kPsiPlus, kPhiMinus, kPsiMinus};
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_EQ(ids[k].source, kBellLabels[k]);
      EXPECT_EQ(ids[k].match, expected[k]);
      EXPECT_NEAR(ids[k].fidelity, 1.0, 1e-12);
    }
  }
}

}  // namespace
}  // namespace catport
