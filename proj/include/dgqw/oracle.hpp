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

// Reference engines that do not use the Gaussian formalism: a truncated
// two-mode Fock space and a plain amplitude recursion for one walker.

#include <cstddef>

#include "dgqw/complex_matrix.hpp"

namespace dgqw {

/// Two-mode state psi(n1, n2) with 0 <= n1, n2 <= n_max.
struct FockState {
    std::size_t n_max = 0;
    ComplexMatrix amplitudes;

    double norm_deficit() const { return 1.0 - amplitudes.squaredNorm(); }
};

inline constexpr std::size_t kDefaultCutoff = 40;
inline constexpr double kTruncationBudget = 1e-8;

/// sqrt(1 - lambda^2) sum_n lambda^n |n, n>, lambda = tanh(xi). Throws
/// ConstraintError for non-finite xi or n_max = 0.
FockState two_mode_squeezed_vacuum(double xi, std::size_t n_max = kDefaultCutoff);

struct FockExpectations {
    RealVector means;          // <n_1>, <n_2>
    RealMatrix moments;        // <:dn_i dn_j:>
    RealMatrix covariance;     // (q1, q2, p1, p2), vacuum = id/2
    ComplexMatrix anomalous;   // <a_i a_j>
    double norm_deficit = 0.0;
};

/// Exact sums over the amplitude tensor. Throws NumericalError when the norm
/// deficit exceeds `budget`.
FockExpectations fock_expectations(const FockState &state, double budget = kTruncationBudget);

/// Coined walker on the d-cycle: per position (c+, c-) -> (tau c+ + rho c-,
/// -conj(rho) c+ + conj(tau) c-), then + moves to x + 1 and - to x - 1.
/// `initial` holds all (x, +) followed by all (x, -).
ComplexVector single_walker_recursion(std::size_t d, complex tau, complex rho, std::size_t t,
                                      const ComplexVector &initial);

}  // namespace dgqw
