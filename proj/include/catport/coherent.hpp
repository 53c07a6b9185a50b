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

// Exact representation of multi-mode states as finite superpositions of
// products of coherent states. Every operation here is closed-form: the
// coherent overlap kernel, displacement/parity/rotation rewrites, and the
// exp(-i*pi*n_A*n_B) cross-Kerr rewrite.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace catport {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

struct CoherentTerm {
  Complex coeff;
  std::vector<Complex> amps;  // one amplitude per mode

  bool operator==(const CoherentTerm&) const = default;
};

/// Finite sum of weighted coherent product states over `num_modes` modes.
///
/// Instances are kept in consolidated form: no two terms have amplitude
/// tuples within `tol` (Euclidean distance) of each other, and terms whose
/// coefficients cancel to zero are dropped. The state is not normalized
/// unless built that way; use `normalize`.
class CoherentSuperposition {
 public:
  static constexpr double kDefaultMergeTol = 1e-9;

  explicit CoherentSuperposition(std::size_t num_modes, double tol = kDefaultMergeTol);
  CoherentSuperposition(std::size_t num_modes, std::vector<CoherentTerm> terms,
                        double tol = kDefaultMergeTol);

  /// Single product term with unit coefficient.
  static CoherentSuperposition product(std::vector<Complex> amps, Complex coeff = 1.0);
  static CoherentSuperposition coherent(Complex amp) { return product({amp}); }

  std::size_t num_modes() const { return num_modes_; }
  const std::vector<CoherentTerm>& terms() const { return terms_; }
  double tol() const { return tol_; }
  bool empty() const { return terms_.empty(); }

  /// Largest |amplitude| over all terms and modes.
  double max_abs_amplitude() const;

  /// Re-runs consolidation; returns an identical term list for consolidated input.
  CoherentSuperposition consolidated() const;

  friend CoherentSuperposition operator+(const CoherentSuperposition& a,
                                         const CoherentSuperposition& b);
  friend CoherentSuperposition operator-(const CoherentSuperposition& a,
                                         const CoherentSuperposition& b);
  friend CoherentSuperposition operator*(Complex c, const CoherentSuperposition& s);

  bool operator==(const CoherentSuperposition&) const = default;

 private:
  static std::vector<CoherentTerm> consolidate(std::vector<CoherentTerm> terms, double tol);

  std::size_t num_modes_;
  double tol_;
  std::vector<CoherentTerm> terms_;
};

/// Single-mode kernel <a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a) b).
Complex coherent_overlap(Complex a, Complex b);

Complex overlap(const CoherentSuperposition& bra, const CoherentSuperposition& ket);
double norm(const CoherentSuperposition& s);
CoherentSuperposition normalize(const CoherentSuperposition& s);
double fidelity(const CoherentSuperposition& a, const CoherentSuperposition& b);

/// G[j][k] = overlap(states[j], states[k]).
Eigen::MatrixXcd gram_matrix(std::span<const CoherentSuperposition> states);

/// D(eps) = exp(eps a^dag - conj(eps) a) on one mode:
/// |alpha> -> exp(i Im(eps conj(alpha))) |alpha + eps>.
CoherentSuperposition apply_displacement(const CoherentSuperposition& s, std::size_t mode,
                                         Complex eps);
/// exp(i pi a^dag a): |alpha> -> |-alpha>.
CoherentSuperposition apply_parity(const CoherentSuperposition& s, std::size_t mode);
/// exp(-i theta a^dag a): |alpha> -> |alpha e^{-i theta}>.
CoherentSuperposition apply_rotation(const CoherentSuperposition& s, std::size_t mode,
                                     double theta);
/// exp(-i pi n_A n_B). Each |a>|b> becomes
/// (|a>+|-a>)/2 |b> + (|a>-|-a>)/2 |-b>.
CoherentSuperposition apply_cross_kerr_pi(const CoherentSuperposition& s, std::size_t mode_a,
                                          std::size_t mode_b);

/// Tensor product; modes of `a` come first.
CoherentSuperposition tensor(const CoherentSuperposition& a, const CoherentSuperposition& b);

/// Reorders modes: output mode k is input mode `order[k]`.
CoherentSuperposition permute_modes(const CoherentSuperposition& s,
                                    std::span<const std::size_t> order);

/// Partial inner product (<bra| (x) 1) |ket>, where the modes of `bra` are
/// matched in order against `ket_modes` of `ket`. The result lives on the
/// remaining modes of `ket`, in their original order.
CoherentSuperposition contract(const CoherentSuperposition& bra, const CoherentSuperposition& ket,
                               std::span<const std::size_t> ket_modes);

}  // namespace catport
