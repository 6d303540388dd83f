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

#include <cstddef>

#include "dgqw/complex_matrix.hpp"

namespace dgqw {

enum class Coin { Plus = 0, Minus = 1 };

/// Flat mode ordering for a coined walk on a d-cycle: all (x, +) for
/// x = 0..d-1, then all (x, -).
class ModeLayout {
   public:
    /// Throws ConstraintError for d < 2.
    explicit ModeLayout(std::size_t positions);

    std::size_t positions() const { return positions_; }
    std::size_t modes() const { return 2 * positions_; }

    /// Throws DimensionError for x >= d.
    std::size_t index(std::size_t x, Coin c) const;
    /// Position taken modulo d, so x = -1 names the last vertex.
    std::size_t index_wrapped(long long x, Coin c) const;

    std::size_t position_of(std::size_t index) const;
    Coin coin_of(std::size_t index) const;

   private:
    std::size_t positions_;
};

/// Coherent amplitudes alpha_i of a product of coherent states.
struct CoherentInput {
    ComplexVector alpha;

    static CoherentInput vacuum(std::size_t modes) { return {ComplexVector::Zero(static_cast<Eigen::Index>(modes))}; }
    std::size_t modes() const { return static_cast<std::size_t>(alpha.size()); }
    double total_photons() const { return alpha.squaredNorm(); }
};

}  // namespace dgqw
