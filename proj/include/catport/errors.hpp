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

#include <stdexcept>
#include <string>

namespace catport {

/// Mode-count or index mismatch between states/operators.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A state with zero (or numerically vanishing) norm was asked to be normalized.
class DegenerateStateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Gram matrix is too ill-conditioned to define a basis expansion or POVM.
class DegenerateBasisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameters that fall outside the supported configuration table.
class UnsupportedConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace catport
