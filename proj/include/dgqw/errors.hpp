// Copyright 2026 The dgqw Authors
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

namespace dgqw {

/// Shapes of operands do not fit together.
class DimensionError : public std::invalid_argument {
   public:
    explicit DimensionError(const std::string &what) : std::invalid_argument(what) {}
};

/// A parameter or transform violates a physical constraint (coin normalization,
/// bosonic commutation relations, probability normalization, ...).
class ConstraintError : public std::invalid_argument {
   public:
    explicit ConstraintError(const std::string &what) : std::invalid_argument(what) {}
};

/// A computation could not be carried out in double precision (overflow,
/// branch cut, singular matrix, failed internal cross-check).
class NumericalError : public std::runtime_error {
   public:
    explicit NumericalError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace dgqw
