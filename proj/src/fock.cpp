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

#include "catport/fock.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "catport/errors.hpp"

namespace catport {
namespace {

std::size_t total_size(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void check_same_dims(const FockVector& a, const FockVector& b) {
  if (a.dims() != b.dims()) throw DimensionError("Fock vectors have different truncations");
}

}  // namespace

FockVector::FockVector(std::vector<std::size_t> dims, Eigen::VectorXcd data, double leakage)
    : dims_(std::move(dims)), data_(std::move(data)), leakage_(leakage) {
  if (dims_.empty()) throw DimensionError("Fock vector needs at least one mode");
  for (auto d : dims_) {
    if (d == 0) throw DimensionError("truncation dimension must be positive");
  }
  if (static_cast<std::size_t>(data_.size()) != total_size(dims_)) {
    throw DimensionError("data length does not match product of dims");
  }
}

FockVector FockVector::zero(std::vector<std::size_t> dims) {
  const auto n = static_cast<Eigen::Index>(total_size(dims));
  return FockVector(std::move(dims), Eigen::VectorXcd::Zero(n));
}

void DynamicsParams::validate() const {
  if (!(chi > 0.0)) throw std::invalid_argument("chi must be positive");
  if (!std::isfinite(omega_a) || !std::isfinite(omega_b) || !std::isfinite(t)) {
    throw std::invalid_argument("non-finite dynamics parameter");
  }
}

Eigen::VectorXcd coherent_fock(Complex amp, std::size_t dim) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  const double r = std::abs(amp);
  if (r == 0.0) {
    if (dim > 0) c(0) = 1.0;
    return c;
  }
  const double log_r = std::log(r);
  const double phi = std::arg(amp);
  for (std::size_t n = 0; n < dim; ++n) {
    const double nd = static_cast<double>(n);
    const double log_mag = -0.5 * r * r + nd * log_r - 0.5 * std::lgamma(nd + 1.0);
    c(static_cast<Eigen::Index>(n)) = std::polar(std::exp(log_mag), nd * phi);
  }
  return c;
}

double coherent_tail(double abs_amp, std::size_t dim) {
  if (abs_amp == 0.0) return 0.0;
  const double lam = abs_amp * abs_amp;
  const double log_lam = std::log(lam);
  double tail = 0.0;
  for (std::size_t n = dim;; ++n) {
    const double nd = static_cast<double>(n);
    const double p = std::exp(-lam + nd * log_lam - std::lgamma(nd + 1.0));
    tail += p;
    if (nd > lam && p < 1e-300 + 1e-18 * tail) break;
  }
  return tail;
}

FockVector to_fock(const CoherentSuperposition& s, std::span<const std::size_t> dims) {
  if (dims.size() != s.num_modes()) throw DimensionError("dims length must equal mode count");
  std::vector<std::size_t> d(dims.begin(), dims.end());
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(total_size(d)));
  for (const auto& t : s.terms()) {
    Eigen::VectorXcd v = t.coeff * coherent_fock(t.amps[0], d[0]);
    for (std::size_t m = 1; m < d.size(); ++m) {
      const Eigen::VectorXcd f = coherent_fock(t.amps[m], d[m]);
      Eigen::VectorXcd next(v.size() * f.size());
      for (Eigen::Index i = 0; i < v.size(); ++i) next.segment(i * f.size(), f.size()) = v(i) * f;
      v = std::move(next);
    }
    acc += v;
  }
  const double exact = overlap(s, s).real();
  const double leak = exact > 0.0 ? std::abs(1.0 - acc.squaredNorm() / exact) : 0.0;
  return FockVector(std::move(d), std::move(acc), leak);
}

FockVector to_fock(const CoherentSuperposition& s, std::size_t dim_per_mode) {
  const std::vector<std::size_t> dims(s.num_modes(), dim_per_mode);
  return to_fock(s, dims);
}

Complex inner(const FockVector& bra, const FockVector& ket) {
  check_same_dims(bra, ket);
  return bra.data().dot(ket.data());
}

double fidelity(const FockVector& a, const FockVector& b) {
  const double na = a.data().squaredNorm();
  const double nb = b.data().squaredNorm();
  if (!(na > 0.0) || !(nb > 0.0)) throw DegenerateStateError("fidelity of a zero Fock vector");
  return std::min(1.0, std::norm(inner(a, b)) / (na * nb));
}

FockVector evolve(const FockVector& v, const DynamicsParams& p) {
  p.validate();
  if (v.num_modes() != 2) throw DimensionError("evolve expects a two-mode vector");
  const std::size_t da = v.dims()[0];
  const std::size_t db = v.dims()[1];
  Eigen::VectorXcd out = v.data();
  for (std::size_t m = 0; m < da; ++m) {
    for (std::size_t n = 0; n < db; ++n) {
      const double md = static_cast<double>(m);
      const double nd = static_cast<double>(n);
      const double angle = (p.omega_a * md + p.omega_b * nd + p.chi * md * nd) * p.t;
      out(static_cast<Eigen::Index>(m * db + n)) *= std::polar(1.0, -angle);
    }
  }
  return FockVector(v.dims(), std::move(out), v.leakage());
}

Eigen::MatrixXcd annihilation(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

Eigen::MatrixXcd fock_displacement(std::size_t dim, Complex eps) {
  const Eigen::MatrixXcd a = annihilation(dim);
  const Eigen::MatrixXcd gen = eps * a.adjoint() - std::conj(eps) * a;
  return gen.exp();
}

Eigen::MatrixXcd fock_parity(std::size_t dim) {
  Eigen::VectorXcd diag(static_cast<Eigen::Index>(dim));
  for (Eigen::Index k = 0; k < diag.size(); ++k) diag(k) = (k % 2 == 0) ? 1.0 : -1.0;
  return diag.asDiagonal();
}

Eigen::MatrixXcd fock_rotation(std::size_t dim, double theta) {
  Eigen::VectorXcd diag(static_cast<Eigen::Index>(dim));
  for (Eigen::Index k = 0; k < diag.size(); ++k) {
    diag(k) = std::polar(1.0, -theta * static_cast<double>(k));
  }
  return diag.asDiagonal();
}

Eigen::MatrixXd quadrature_x(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) {
    x(k - 1, k) = x(k, k - 1) = std::sqrt(static_cast<double>(k));
  }
  return x;
}

Eigen::MatrixXd half_line_projector(std::size_t dim, int sign) {
  if (sign == 0) throw std::invalid_argument("projector sign must be nonzero");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(quadrature_x(dim));
  const auto& vals = eig.eigenvalues();
  const auto& vecs = eig.eigenvectors();
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const bool positive = vals(k) > -1e-12;
    if (positive == (sign > 0)) p.noalias() += vecs.col(k) * vecs.col(k).transpose();
  }
  return p;
}

Complex quadrature_amplitude(const Eigen::VectorXcd& coeffs, double x) {
  // psi_n(q) with q = x / sqrt 2; the Jacobian 2^{-1/4} makes |psi|^2 a density in x.
  const double q = x / std::sqrt(2.0);
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * q * q);
  Complex sum = coeffs.size() > 0 ? coeffs(0) * cur : Complex{};
  for (Eigen::Index n = 0; n + 1 < coeffs.size(); ++n) {
    const double nd = static_cast<double>(n);
    const double next =
        std::sqrt(2.0 / (nd + 1.0)) * q * cur - std::sqrt(nd / (nd + 1.0)) * prev;
    prev = cur;
    cur = next;
    sum += coeffs(n + 1) * cur;
  }
  return sum * std::pow(2.0, -0.25);
}

double half_line_probability(const Eigen::VectorXcd& coeffs, int sign, std::size_t intervals) {
  if (sign == 0) throw std::invalid_argument("projector sign must be nonzero");
  if (intervals < 2) throw std::invalid_argument("need at least two intervals");
  if (intervals % 2) ++intervals;
  // Support of a state with n < dim lies within |x| < 2 sqrt(dim) + margin.
  const double reach = 2.0 * std::sqrt(static_cast<double>(coeffs.size())) + 12.0;
  const double lo = sign > 0 ? 0.0 : -reach;
  const double hi = sign > 0 ? reach : 0.0;
  const double h = (hi - lo) / static_cast<double>(intervals);
  double acc = 0.0;
  for (std::size_t k = 0; k <= intervals; ++k) {
    const double w = (k == 0 || k == intervals) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    acc += w * std::norm(quadrature_amplitude(coeffs, lo + h * static_cast<double>(k)));
  }
  return acc * h / 3.0;
}

FockVector apply_mode_operator(const FockVector& v, std::size_t mode, const Eigen::MatrixXcd& op) {
  if (mode >= v.num_modes()) throw DimensionError("mode index out of range");
  const auto d = static_cast<Eigen::Index>(v.dims()[mode]);
  if (op.rows() != d || op.cols() != d) throw DimensionError("operator size mismatch");
  Eigen::Index outer = 1;
  Eigen::Index inner_size = 1;
  for (std::size_t m = 0; m < mode; ++m) outer *= static_cast<Eigen::Index>(v.dims()[m]);
  for (std::size_t m = mode + 1; m < v.num_modes(); ++m) {
    inner_size *= static_cast<Eigen::Index>(v.dims()[m]);
  }
  Eigen::VectorXcd out(v.data().size());
  const Eigen::MatrixXcd op_t = op.transpose();
  for (Eigen::Index o = 0; o < outer; ++o) {
    const Eigen::Index offset = o * d * inner_size;
    Eigen::Map<const Eigen::MatrixXcd> block(v.data().data() + offset, inner_size, d);
    Eigen::Map<Eigen::MatrixXcd> dst(out.data() + offset, inner_size, d);
    dst.noalias() = block * op_t;
  }
  return FockVector(v.dims(), std::move(out), v.leakage());
}

FockVector apply_cross_kerr(const FockVector& v, std::size_t mode_a, std::size_t mode_b,
                            double phase) {
  if (mode_a >= v.num_modes() || mode_b >= v.num_modes()) {
    throw DimensionError("mode index out of range");
  }
  if (mode_a == mode_b) throw std::invalid_argument("cross-Kerr needs two distinct modes");
  const auto& dims = v.dims();
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t m = dims.size() - 1; m > 0; --m) strides[m - 1] = strides[m] * dims[m];
  Eigen::VectorXcd out = v.data();
  for (Eigen::Index idx = 0; idx < out.size(); ++idx) {
    const auto u = static_cast<std::size_t>(idx);
    const double na = static_cast<double>((u / strides[mode_a]) % dims[mode_a]);
    const double nb = static_cast<double>((u / strides[mode_b]) % dims[mode_b]);
    out(idx) *= std::polar(1.0, -phase * na * nb);
  }
  return FockVector(dims, std::move(out), v.leakage());
}

std::size_t truncation_rule(double max_abs_amplitude) {
  if (!(max_abs_amplitude >= 0.0)) throw std::invalid_argument("amplitude must be nonnegative");
  const double a = max_abs_amplitude;
  return static_cast<std::size_t>(std::ceil(a * a + 6.0 * a + 10.0));
}

}  // namespace catport
