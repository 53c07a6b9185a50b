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

#include <nlohmann/json.hpp>

#include "catport/coherent.hpp"
#include "catport/fock.hpp"

namespace catport {

/// {"num_modes": N, "terms": [{"coeff": [re, im], "amps": [[re, im], ...]}, ...]}
nlohmann::json to_json(const CoherentSuperposition& s);
CoherentSuperposition superposition_from_json(const nlohmann::json& j);

/// {"dims": [...], "data": [[re, im], ...]}
nlohmann::json to_json(const FockVector& v);
FockVector fock_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

}  // namespace catport
