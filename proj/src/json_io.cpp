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

#include "catport/json_io.hpp"

#include <stdexcept>

namespace catport {

nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("complex value must be a [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json to_json(const CoherentSuperposition& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : s.terms()) {
    nlohmann::json amps = nlohmann::json::array();
    for (auto a : t.amps) amps.push_back(complex_to_json(a));
    terms.push_back({{"coeff", complex_to_json(t.coeff)}, {"amps", std::move(amps)}});
  }
  return {{"num_modes", s.num_modes()}, {"terms", std::move(terms)}};
}

CoherentSuperposition superposition_from_json(const nlohmann::json& j) {
  const auto num_modes = j.at("num_modes").get<std::size_t>();
  std::vector<CoherentTerm> terms;
  for (const auto& jt : j.at("terms")) {
    CoherentTerm t{complex_from_json(jt.at("coeff")), {}};
    for (const auto& ja : jt.at("amps")) t.amps.push_back(complex_from_json(ja));
    terms.push_back(std::move(t));
  }
  return CoherentSuperposition(num_modes, std::move(terms));
}

nlohmann::json to_json(const FockVector& v) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index k = 0; k < v.data().size(); ++k) data.push_back(complex_to_json(v.data()(k)));
  return {{"dims", v.dims()}, {"data", std::move(data)}};
}

FockVector fock_from_json(const nlohmann::json& j) {
  auto dims = j.at("dims").get<std::vector<std::size_t>>();
  const auto& jd = j.at("data");
  Eigen::VectorXcd data(static_cast<Eigen::Index>(jd.size()));
  for (std::size_t k = 0; k < jd.size(); ++k) {
    data(static_cast<Eigen::Index>(k)) = complex_from_json(jd[k]);
  }
  return FockVector(std::move(dims), std::move(data));
}

}  // namespace catport
