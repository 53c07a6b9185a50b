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

#include <cmath>
#include <numbers>
#include <random>

#include "catport/coherent.hpp"

namespace catport::testing {

inline Complex random_amp(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

// Up to `max_terms` random product terms with |amp| <= radius.
inline CoherentSuperposition random_state(std::mt19937_64& rng, std::size_t modes, double radius,
                                          std::size_t max_terms = 8) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::vector<CoherentTerm> terms;
  for (std::size_t t = count(rng); t > 0; --t) {
    CoherentTerm term{Complex(u(rng), u(rng)), {}};
    for (std::size_t m = 0; m < modes; ++m) term.amps.push_back(random_amp(rng, radius));
    terms.push_back(std::move(term));
  }
  return normalize(CoherentSuperposition(modes, std::move(terms)));
}

}  // namespace catport::testing
