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

#include "catport/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "catport/errors.hpp"

namespace catport {
namespace {

// Coefficients below this fraction of the largest input coefficient are
// treated as exact cancellations and dropped during consolidation.
constexpr double kCancelFraction = 1e-15;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double tuple_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::norm(a[i] - b[i]);
  return std::sqrt(acc);
}

void check_mode(const CoherentSuperposition& s, std::size_t mode) {
  if (mode >= s.num_modes()) {
    throw DimensionError("mode index " + std::to_string(mode) + " out of range for " +
                         std::to_string(s.num_modes()) + "-mode state");
  }
}

void check_same_modes(const CoherentSuperposition& a, const CoherentSuperposition& b) {
  if (a.num_modes() != b.num_modes()) {
    throw DimensionError("mode count mismatch: " + std::to_string(a.num_modes()) + " vs " +
                         std::to_string(b.num_modes()));
  }
}

}  // namespace

CoherentSuperposition::CoherentSuperposition(std::size_t num_modes, double tol)
    : num_modes_(num_modes), tol_(tol) {
  if (num_modes == 0) throw DimensionError("a state needs at least one mode");
}

CoherentSuperposition::CoherentSuperposition(std::size_t num_modes,
                                             std::vector<CoherentTerm> terms, double tol)
    : CoherentSuperposition(num_modes, tol) {
  for (const auto& t : terms) {
    if (t.amps.size() != num_modes) {
      throw DimensionError("term has " + std::to_string(t.amps.size()) +
                           " amplitudes, state has " + std::to_string(num_modes) + " modes");
    }
    if (!finite(t.coeff) || !std::all_of(t.amps.begin(), t.amps.end(), finite)) {
      throw std::invalid_argument("non-finite coefficient or amplitude");
    }
  }
  terms_ = consolidate(std::move(terms), tol_);
}

CoherentSuperposition CoherentSuperposition::product(std::vector<Complex> amps, Complex coeff) {
  const std::size_t n = amps.size();
  return CoherentSuperposition(n, {CoherentTerm{coeff, std::move(amps)}});
}

std::vector<CoherentTerm> CoherentSuperposition::consolidate(std::vector<CoherentTerm> terms,
                                                             double tol) {
  double scale = 0.0;
  for (const auto& t : terms) scale = std::max(scale, std::abs(t.coeff));

  std::vector<CoherentTerm> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const CoherentTerm& m) {
      return tuple_distance(m.amps, t.amps) <= tol;
    });
    if (it != merged.end()) {
      it->coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  const double floor = kCancelFraction * scale;
  std::erase_if(merged, [&](const CoherentTerm& t) { return std::abs(t.coeff) <= floor; });
  return merged;
}

CoherentSuperposition CoherentSuperposition::consolidated() const {
  return CoherentSuperposition(num_modes_, terms_, tol_);
}

double CoherentSuperposition::max_abs_amplitude() const {
  double m = 0.0;
  for (const auto& t : terms_)
    for (auto a : t.amps) m = std::max(m, std::abs(a));
  return m;
}

CoherentSuperposition operator+(const CoherentSuperposition& a, const CoherentSuperposition& b) {
  check_same_modes(a, b);
  std::vector<CoherentTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return CoherentSuperposition(a.num_modes_, std::move(terms), a.tol_);
}

CoherentSuperposition operator-(const CoherentSuperposition& a, const CoherentSuperposition& b) {
  return a + Complex(-1.0) * b;
}

CoherentSuperposition operator*(Complex c, const CoherentSuperposition& s) {
  std::vector<CoherentTerm> terms = s.terms_;
  for (auto& t : terms) t.coeff *= c;
  return CoherentSuperposition(s.num_modes_, std::move(terms), s.tol_);
}

Complex coherent_overlap(Complex a, Complex b) {
  return std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b);
}

Complex overlap(const CoherentSuperposition& bra, const CoherentSuperposition& ket) {
  check_same_modes(bra, ket);
  Complex acc = 0.0;
  for (const auto& tj : bra.terms()) {
    for (const auto& tk : ket.terms()) {
      Complex exponent = 0.0;
      for (std::size_t m = 0; m < bra.num_modes(); ++m) {
        const Complex a = tj.amps[m];
        const Complex b = tk.amps[m];
        exponent += -0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b;
      }
      acc += std::conj(tj.coeff) * tk.coeff * std::exp(exponent);
    }
  }
  return acc;
}

double norm(const CoherentSuperposition& s) {
  return std::sqrt(std::max(0.0, overlap(s, s).real()));
}

CoherentSuperposition normalize(const CoherentSuperposition& s) {
  const double n = norm(s);
  if (!(n > 1e-150)) throw DegenerateStateError("cannot normalize a zero-norm state");
  return Complex(1.0 / n) * s;
}

double fidelity(const CoherentSuperposition& a, const CoherentSuperposition& b) {
  const double na = norm(a);
  const double nb = norm(b);
  if (!(na > 1e-150) || !(nb > 1e-150)) {
    throw DegenerateStateError("fidelity of a zero-norm state");
  }
  const double f = std::norm(overlap(a, b)) / (na * na * nb * nb);
  return std::clamp(f, 0.0, 1.0);
}

Eigen::MatrixXcd gram_matrix(std::span<const CoherentSuperposition> states) {
  const auto n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j; k < n; ++k) {
      g(j, k) = overlap(states[j], states[k]);
      g(k, j) = std::conj(g(j, k));
    }
    g(j, j) = g(j, j).real();
  }
  return g;
}

CoherentSuperposition apply_displacement(const CoherentSuperposition& s, std::size_t mode,
                                         Complex eps) {
  check_mode(s, mode);
  std::vector<CoherentTerm> terms = s.terms();
  for (auto& t : terms) {
    const Complex a = t.amps[mode];
    t.coeff *= std::exp(kI * std::imag(eps * std::conj(a)));
    t.amps[mode] = a + eps;
  }
  return CoherentSuperposition(s.num_modes(), std::move(terms), s.tol());
}

CoherentSuperposition apply_parity(const CoherentSuperposition& s, std::size_t mode) {
  check_mode(s, mode);
  std::vector<CoherentTerm> terms = s.terms();
  for (auto& t : terms) t.amps[mode] = -t.amps[mode];
  return CoherentSuperposition(s.num_modes(), std::move(terms), s.tol());
}

CoherentSuperposition apply_rotation(const CoherentSuperposition& s, std::size_t mode,
                                     double theta) {
  check_mode(s, mode);
  const Complex phase = std::polar(1.0, -theta);
  std::vector<CoherentTerm> terms = s.terms();
  for (auto& t : terms) t.amps[mode] *= phase;
  return CoherentSuperposition(s.num_modes(), std::move(terms), s.tol());
}

CoherentSuperposition apply_cross_kerr_pi(const CoherentSuperposition& s, std::size_t mode_a,
                                          std::size_t mode_b) {
  check_mode(s, mode_a);
  check_mode(s, mode_b);
  if (mode_a == mode_b) throw std::invalid_argument("cross-Kerr needs two distinct modes");
  std::vector<CoherentTerm> out;
  out.reserve(4 * s.terms().size());
  for (const auto& t : s.terms()) {
    for (int sa : {1, -1}) {
      for (int sb : {1, -1}) {
        CoherentTerm r = t;
        r.amps[mode_a] *= static_cast<double>(sa);
        r.amps[mode_b] *= static_cast<double>(sb);
        r.coeff *= (sa < 0 && sb < 0) ? -0.5 : 0.5;
        out.push_back(std::move(r));
      }
    }
  }
  return CoherentSuperposition(s.num_modes(), std::move(out), s.tol());
}

CoherentSuperposition tensor(const CoherentSuperposition& a, const CoherentSuperposition& b) {
  std::vector<CoherentTerm> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      CoherentTerm r{ta.coeff * tb.coeff, ta.amps};
      r.amps.insert(r.amps.end(), tb.amps.begin(), tb.amps.end());
      out.push_back(std::move(r));
    }
  }
  return CoherentSuperposition(a.num_modes() + b.num_modes(), std::move(out),
                               std::max(a.tol(), b.tol()));
}

CoherentSuperposition permute_modes(const CoherentSuperposition& s,
                                    std::span<const std::size_t> order) {
  if (order.size() != s.num_modes()) throw DimensionError("permutation size mismatch");
  std::vector<bool> seen(order.size(), false);
  for (auto m : order) {
    check_mode(s, m);
    if (seen[m]) throw std::invalid_argument("permutation repeats a mode");
    seen[m] = true;
  }
  std::vector<CoherentTerm> out;
  out.reserve(s.terms().size());
  for (const auto& t : s.terms()) {
    CoherentTerm r{t.coeff, {}};
    r.amps.reserve(order.size());
    for (auto m : order) r.amps.push_back(t.amps[m]);
    out.push_back(std::move(r));
  }
  return CoherentSuperposition(s.num_modes(), std::move(out), s.tol());
}

CoherentSuperposition contract(const CoherentSuperposition& bra, const CoherentSuperposition& ket,
                               std::span<const std::size_t> ket_modes) {
  if (ket_modes.size() != bra.num_modes()) {
    throw DimensionError("contraction mode list does not match bra mode count");
  }
  if (ket_modes.size() >= ket.num_modes()) {
    throw DimensionError("contraction must leave at least one ket mode");
  }
  std::vector<bool> contracted(ket.num_modes(), false);
  for (auto m : ket_modes) {
    check_mode(ket, m);
    if (contracted[m]) throw std::invalid_argument("contraction repeats a mode");
    contracted[m] = true;
  }
  std::vector<CoherentTerm> out;
  out.reserve(bra.terms().size() * ket.terms().size());
  for (const auto& tj : bra.terms()) {
    for (const auto& tk : ket.terms()) {
      Complex exponent = 0.0;
      for (std::size_t i = 0; i < ket_modes.size(); ++i) {
        const Complex a = tj.amps[i];
        const Complex b = tk.amps[ket_modes[i]];
        exponent += -0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b;
      }
      CoherentTerm r{std::conj(tj.coeff) * tk.coeff * std::exp(exponent), {}};
      for (std::size_t m = 0; m < ket.num_modes(); ++m) {
        if (!contracted[m]) r.amps.push_back(tk.amps[m]);
      }
      out.push_back(std::move(r));
    }
  }
  return CoherentSuperposition(ket.num_modes() - ket_modes.size(), std::move(out), ket.tol());
}

}  // namespace catport
