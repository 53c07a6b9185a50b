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

// Truncated number-basis backend. Used as a brute-force oracle for the exact
// coherent algebra and for anything without a finite coherent expansion
// (arbitrary evolution times, half-line quadrature projections).

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "catport/coherent.hpp"

namespace catport {

/// Dense coefficient array over the tensor product of truncated number bases.
/// Index layout is row-major: mode 0 varies slowest.
class FockVector {
 public:
  FockVector(std::vector<std::size_t> dims, Eigen::VectorXcd data, double leakage = 0.0);

  static FockVector zero(std::vector<std::size_t> dims);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t num_modes() const { return dims_.size(); }
  const Eigen::VectorXcd& data() const { return data_; }

  /// |1 - norm^2| relative to the (exact) norm of the source state, recorded
  /// at conversion time. Zero for vectors built directly.
  double leakage() const { return leakage_; }

  double norm() const { return data_.norm(); }

 private:
  std::vector<std::size_t> dims_;
  Eigen::VectorXcd data_;
  double leakage_;
};

struct DynamicsParams {
  double omega_a;  // in the same units as chi
  double omega_b;
  double chi;
  double t;

  void validate() const;
};

/// Coefficients e^{-|a|^2/2} a^n / sqrt(n!) for n < dim, evaluated in log space.
Eigen::VectorXcd coherent_fock(Complex amp, std::size_t dim);

/// Probability mass of |amp> beyond the first `dim` number states (tail sum).
double coherent_tail(double abs_amp, std::size_t dim);

FockVector to_fock(const CoherentSuperposition& s, std::span<const std::size_t> dims);
FockVector to_fock(const CoherentSuperposition& s, std::size_t dim_per_mode);

Complex inner(const FockVector& bra, const FockVector& ket);
double fidelity(const FockVector& a, const FockVector& b);

/// Two-mode evolution under H = w_a n_a + w_b n_b + chi n_a n_b (hbar = 1).
FockVector evolve(const FockVector& v, const DynamicsParams& p);

Eigen::MatrixXcd annihilation(std::size_t dim);
/// exp(eps a^dag - conj(eps) a), exponentiated on the truncated ladder.
Eigen::MatrixXcd fock_displacement(std::size_t dim, Complex eps);
Eigen::MatrixXcd fock_parity(std::size_t dim);
Eigen::MatrixXcd fock_rotation(std::size_t dim, double theta);
/// X = a + a^dag.
Eigen::MatrixXd quadrature_x(std::size_t dim);

/// Spectral projector of the truncated X onto x > 0 (sign > 0) or x < 0
/// (sign < 0). A zero eigenvalue (odd dim) is assigned to the positive side
/// so the pair stays complete.
Eigen::MatrixXd half_line_projector(std::size_t dim, int sign);

/// Position-space amplitude of a single-mode vector at eigenvalue x of
/// X = a + a^dag, via the Hermite-function recursion.
Complex quadrature_amplitude(const Eigen::VectorXcd& coeffs, double x);

/// P(sign * X > 0) by composite Simpson integration of |psi(x)|^2.
double half_line_probability(const Eigen::VectorXcd& coeffs, int sign,
                             std::size_t intervals = 4000);

/// Applies a single-mode operator to one mode of a multi-mode vector.
FockVector apply_mode_operator(const FockVector& v, std::size_t mode, const Eigen::MatrixXcd& op);

/// exp(-i * phase * n_A * n_B).
FockVector apply_cross_kerr(const FockVector& v, std::size_t mode_a, std::size_t mode_b,
                            double phase);

/// ceil(a^2 + 6a + 10). Keeps coherent leakage below 1e-10 for a <= 8.
std::size_t truncation_rule(double max_abs_amplitude);

}  // namespace catport
