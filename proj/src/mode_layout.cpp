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

#include "dgqw/mode_layout.hpp"

#include <string>

#include "dgqw/errors.hpp"

namespace dgqw {

ModeLayout::ModeLayout(std::size_t positions) : positions_(positions) {
    if (positions < 2) {
        throw ConstraintError("ModeLayout: need at least 2 positions, got " + std::to_string(positions));
    }
}

std::size_t ModeLayout::index(std::size_t x, Coin c) const {
    if (x >= positions_) {
        throw DimensionError("ModeLayout: position " + std::to_string(x) + " out of range [0, " +
                             std::to_string(positions_) + ")");
    }
    return static_cast<std::size_t>(c) * positions_ + x;
}

std::size_t ModeLayout::index_wrapped(long long x, Coin c) const {
    const auto d = static_cast<long long>(positions_);
    const long long wrapped = ((x % d) + d) % d;
    return index(static_cast<std::size_t>(wrapped), c);
}

std::size_t ModeLayout::position_of(std::size_t index) const {
    if (index >= modes()) {
        throw DimensionError("ModeLayout: mode index " + std::to_string(index) + " out of range");
    }
    return index % positions_;
}

Coin ModeLayout::coin_of(std::size_t index) const {
    if (index >= modes()) {
        throw DimensionError("ModeLayout: mode index " + std::to_string(index) + " out of range");
    }
    return index < positions_ ? Coin::Plus : Coin::Minus;
}

}  // namespace dgqw
