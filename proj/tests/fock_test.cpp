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
#include <random>

#include <gtest/gtest.h>

#include "catport/errors.hpp"
#include "catport/fock.hpp"
#include "catport/quasi_bell.hpp"
#include "catport/validation.hpp"
#include "test_util.hpp"

namespace catport {
namespace {

TEST(ToFock, VacuumAndCoefficients) {
  const auto v = to_fock(CoherentSuperposition::coherent(0.0), 10);
  EXPECT_EQ(v.data()(0), Complex(1.0));
  EXPECT_EQ(v.data().tail(9).norm(), 0.0);
  const auto c = coherent_fock(1.0, 10);
  EXPECT_NEAR(c(0).real(), 0.6065307, 1e-7);
  EXPECT_NEAR(c(3).real(), std::exp(-0.5) / std::sqrt(6.0), 1e-15);
}

TEST(ToFock, Leakage) {
  EXPECT_LT(to_fock(CoherentSuperposition::coherent(2.0), 40).leakage(), 1e-12);
  EXPECT_GT(to_fock(CoherentSuperposition::coherent(2.0), 3).leakage(), 0.1);
  EXPECT_NEAR(coherent_tail(2.0, 40), to_fock(CoherentSuperposition::coherent(2.0), 40).leakage(),
              1e-15);
}

TEST(TruncationRule, Values) {
  EXPECT_EQ(truncation_rule(0.0), 10u);
  EXPECT_EQ(truncation_rule(2.0), 26u);
  EXPECT_EQ(truncation_rule(4.0), 50u);
  EXPECT_THROW(truncation_rule(-1.0), std::invalid_argument);
}

TEST(TruncationRule, LeakageBoundUpToEight) {
  for (double a = 0.0; a <= 8.0; a += 0.25) {
    EXPECT_LT(coherent_tail(a, truncation_rule(a)), 1e-10) << "a=" << a;
  }
  EXPECT_LT(to_fock(CoherentSuperposition::coherent(2.0), 26).leakage(), 1e-10);
  EXPECT_LT(to_fock(CoherentSuperposition::coherent(4.0), 50).leakage(), 1e-10);
}

TEST(Evolve, IdentityAtZeroTimeAndNormPreserving) {
  std::mt19937_64 rng(30);
  const auto v = to_fock(testing::random_state(rng, 2, 1.5), 20);
  const auto same = evolve(v, {1.3, 0.4, 1.0, 0.0});
  EXPECT_EQ(same.data(), v.data());
  const auto moved = evolve(v, {1.3, 0.4, 2.0, 0.77});
  // Unit phasors only: magnitudes agree to a few ulp.
  for (Eigen::Index i = 0; i < v.data().size(); ++i) {
    const double before = std::abs(v.data()(i));
    EXPECT_LE(std::abs(std::abs(moved.data()(i)) - before), 4.0 * 0x1.0p-52 * before);
  }
  EXPECT_NEAR(moved.norm(), v.norm(), 1e-15);
}

TEST(Evolve, Preconditions) {
  const auto one = to_fock(CoherentSuperposition::coherent(1.0), 10);
  EXPECT_THROW(evolve(one, {2, 2, 1, 1}), DimensionError);
  const auto two = to_fock(CoherentSuperposition::product({1.0, 1.0}), 10);
  EXPECT_THROW(evolve(two, {2, 2, 0.0, 1}), std::invalid_argument);
}

TEST(Evolve, FrequencyTableRows) {
  const auto start = to_fock(CoherentSuperposition::product({1.0, 1.0}), 40);
  const struct {
    double wa, wb;
    BellLabel label;
  } rows[] = {{2, 2, BellLabel::kPhiPlus},
              {2, 1, BellLabel::kPhiMinus},
              {1, 2, BellLabel::kPsiPlus},
              {1, 1, BellLabel::kPsiMinus}};
  for (const auto& r : rows) {
    const auto out = evolve(start, {r.wa, r.wb, 1.0, std::numbers::pi});
    EXPECT_NEAR(fidelity(out, to_fock(make_quasi_bell(r.label, 1.0, 1.0), 40)), 1.0, 1e-8);
  }
}

TEST(Operators, ParityInvolution) {
  const auto p = fock_parity(17);
  EXPECT_EQ(p * p, Eigen::MatrixXcd::Identity(17, 17));
}

TEST(Operators, DisplacementUnitaryOnLowEnergySubspace) {
  const std::size_t dim = 40;
  const auto d = fock_displacement(dim, Complex(0.3, -0.7));
  const Eigen::MatrixXcd dd = d.adjoint() * d;
  EXPECT_LT((dd - Eigen::MatrixXcd::Identity(dim, dim)).topLeftCorner(dim / 2, dim / 2)
                .cwiseAbs()
                .maxCoeff(),
            1e-10);
}

TEST(Operators, DisplacementMatchesExactAlgebra) {
  const auto exact = apply_displacement(CoherentSuperposition::coherent(1.0), 0, Complex(0, 0.3));
  const Eigen::VectorXcd dense = fock_displacement(40, Complex(0, 0.3)) * coherent_fock(1.0, 40);
  const FockVector v({40}, dense);
  EXPECT_NEAR(fidelity(v, to_fock(exact, 40)), 1.0, 1e-8);
  // Phase included, not only fidelity.
  EXPECT_LT((dense - to_fock(exact, 40).data()).norm(), 1e-10);
}

TEST(Operators, QuadratureTridiagonal) {
  const auto x = quadrature_x(6);
  EXPECT_NEAR(x(0, 1), 1.0, 1e-15);
  EXPECT_NEAR(x(2, 3), std::sqrt(3.0), 1e-15);
  EXPECT_EQ(x(0, 2), 0.0);
  EXPECT_EQ(x, x.transpose());
  // Vacuum variance 1, coherent mean 2 Re(alpha).
  const auto c = coherent_fock(Complex(0.8, 0.3), 40);
  const Eigen::MatrixXcd x40 = quadrature_x(40).cast<Complex>();
  EXPECT_NEAR((c.adjoint() * x40 * c)(0).real(), 1.6, 1e-10);
  const auto v = coherent_fock(0.0, 10);
  const Eigen::MatrixXd x10 = quadrature_x(10);
  EXPECT_NEAR((v.adjoint() * (x10 * x10).cast<Complex>() * v)(0).real(), 1.0, 1e-15);
}

TEST(Operators, FirstOrderDisplacementApproximation) {
  const Complex eps(0.0, 0.01);
  const std::size_t dim = 60;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  const Eigen::MatrixXcd approx =
      id + kI * std::abs(eps) * quadrature_x(dim).cast<Complex>();
  const auto psi = coherent_fock(1.0, dim);
  const double err = ((fock_displacement(dim, eps) - approx) * psi).norm();
  EXPECT_LE(err, 4.5e-4);
  EXPECT_NEAR(std::norm(eps) * 9.0 / 2.0, 4.5e-4, 1e-18);
}

TEST(HalfLine, ProjectorAlgebra) {
  for (std::size_t dim : {2u, 9u, 40u}) {
    const auto pp = half_line_projector(dim, +1);
    const auto pm = half_line_projector(dim, -1);
    EXPECT_LT((pp * pp - pp).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((pm * pm - pm).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((pp + pm - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((pp - pp.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  }
  EXPECT_THROW(half_line_projector(4, 0), std::invalid_argument);
}

TEST(HalfLine, VacuumAndMirrorSymmetry) {
  const std::size_t dim = 40;
  const auto v = coherent_fock(0.0, dim);
  const Eigen::MatrixXcd pp = half_line_projector(dim, +1).cast<Complex>();
  const Eigen::MatrixXcd pm = half_line_projector(dim, -1).cast<Complex>();
  EXPECT_NEAR((v.adjoint() * pp * v)(0).real(), 0.5, 1e-9);
  const auto a = coherent_fock(1.0, dim);
  const auto b = coherent_fock(-1.0, dim);
  EXPECT_NEAR((b.adjoint() * pm * b)(0).real(), (a.adjoint() * pp * a)(0).real(), 1e-10);
}

TEST(HalfLine, SignErrorAtUnitAmplitude) {
  const double expected = 0.5 * std::erfc(std::sqrt(2.0));
  EXPECT_NEAR(expected, 0.0227501, 1e-7);
  // Quadrature of the position-space wavefunction.
  EXPECT_NEAR(half_line_probability(coherent_fock(1.0, 40), -1), expected, 1e-9);
  EXPECT_NEAR(half_line_probability(coherent_fock(-1.0, 40), +1), expected, 1e-9);
  // The truncated X spectrum converges to the half-line split as 1/dim.
  double prev = 1.0;
  for (std::size_t dim : {40u, 80u, 160u}) {
    const auto c = coherent_fock(1.0, dim);
    const Eigen::MatrixXcd pm = half_line_projector(dim, -1).cast<Complex>();
    const double err = std::abs((c.adjoint() * pm * c)(0).real() - expected);
    EXPECT_LT(err, 0.6 * prev);
    prev = err;
  }
  EXPECT_LT(prev, 3e-4);
}

TEST(ModeOperator, ActsOnSelectedMode) {
  const auto s = CoherentSuperposition::product({0.5, Complex(0.2, 0.9), -0.3});
  const auto v = to_fock(s, 20);
  const auto out = apply_mode_operator(v, 1, fock_parity(20));
  EXPECT_NEAR(fidelity(out, to_fock(apply_parity(s, 1), 20)), 1.0, 1e-12);
  EXPECT_THROW(apply_mode_operator(v, 3, fock_parity(20)), DimensionError);
  EXPECT_THROW(apply_mode_operator(v, 0, fock_parity(19)), DimensionError);
}

TEST(BackendEquivalence, RandomPipelines) {
  const auto report = backend_equivalence(60, 99);
  EXPECT_EQ(report.count, 60u);
  EXPECT_LT(report.worst_infidelity, 1e-8);
  EXPECT_LT(report.worst_leakage, 1e-10);
}

}  // namespace
}  // namespace catport
