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

// Constituent transforms of a coined walk on the d-cycle: the coin-conditioned
// shift and the homogeneous coins (beam splitter, two-mode squeezer, and
// ordered products of both).

#include <cstddef>
#include <variant>
#include <vector>

#include "dgqw/bogoliubov.hpp"
#include "dgqw/complex_matrix.hpp"

namespace dgqw {

/// a+ -> tau a+ + rho a-,  a- -> -conj(rho) a+ + conj(tau) a-.
struct BsCoin {
    complex tau;
    complex rho;
};

/// a+- -> mu a+- + nu a-+^dagger.
struct PdcCoin {
    complex mu;
    complex nu;
};

struct CoinSpec;

/// Coins applied in list order (first entry acts first).
struct CompositeCoin {
    std::vector<CoinSpec> parts;
};

struct CoinSpec {
    std::variant<BsCoin, PdcCoin, CompositeCoin> variant;

    bool is_composite() const { return std::holds_alternative<CompositeCoin>(variant); }
    /// True when every parameter has zero imaginary part.
    bool is_real() const;
};

enum class CoinKind { Pdc, Bs };

/// Squeezing parameter used as a stand-in for the infinitely squeezed,
/// renormalized coin. Distributions are normalized to total intensity, so
/// only the splitting ratio tanh^2(xi) ~ 1 matters.
inline constexpr double kLimitSqueezing = 10.0;

inline constexpr double kCoinTolerance = 1e-10;

/// Throws ConstraintError for |tau|^2 + |rho|^2 != 1 or |mu|^2 - |nu|^2 != 1
/// (beyond kCoinTolerance), recursing into composites. Empty composites are
/// rejected.
void check_coin(const CoinSpec &spec);

/// Sigma_{x',x} = delta(x' = x + 1 mod d).
ComplexMatrix shift_matrix(std::size_t d);

/// U = diag(Sigma, Sigma^T), V = 0.
BogoliubovTransform step_transform(std::size_t d);

/// Coins accept d = 1 (a single vertex, two modes).
BogoliubovTransform pdc_coin(std::size_t d, complex mu, complex nu);
BogoliubovTransform bs_coin(std::size_t d, complex tau, complex rho);
BogoliubovTransform composite_coin(std::size_t d, const std::vector<CoinSpec> &specs);
BogoliubovTransform coin_transform(std::size_t d, const CoinSpec &spec);

/// Coin followed by the shift: one iteration of the walk.
BogoliubovTransform single_step(std::size_t d, const CoinSpec &spec);

/// mu = cosh(xi), nu = sinh(xi) for Pdc; tau = cos(theta), rho = sin(theta) for Bs.
CoinSpec coin_from_parameters(CoinKind kind, double value);

/// |rho|^2/|tau|^2 or |nu|^2/|mu|^2. Returns +infinity for a BS coin with
/// tau = 0 and rho != 0. Throws ConstraintError for composite coins.
double splitting_ratio(const CoinSpec &spec);

/// Position distribution of a classical walker started at x = 0 that steps
/// +1 with probability p_forward and -1 otherwise, wrapped on the d-cycle.
RealVector classical_random_walk(std::size_t d, std::size_t t, double p_forward);

}  // namespace dgqw
