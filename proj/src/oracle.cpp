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

#include "dgqw/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dgqw/errors.hpp"

namespace dgqw {
namespace {

using Eigen::Index;

// Ladder operators on a two-mode tensor psi(n1, n2). The tensor is padded
// before use, so a^dagger never runs off the edge for the moments needed here.
ComplexMatrix lower(const ComplexMatrix &psi, int mode) {
    const Index dim = psi.rows();
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (Index n1 = 0; n1 < dim; ++n1) {
        for (Index n2 = 0; n2 < dim; ++n2) {
            if (mode == 0 && n1 + 1 < dim) {
                out(n1, n2) = std::sqrt(static_cast<double>(n1 + 1)) * psi(n1 + 1, n2);
            } else if (mode == 1 && n2 + 1 < dim) {
                out(n1, n2) = std::sqrt(static_cast<double>(n2 + 1)) * psi(n1, n2 + 1);
            }
        }
    }
    return out;
}

ComplexMatrix raise(const ComplexMatrix &psi, int mode) {
    const Index dim = psi.rows();
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (Index n1 = 0; n1 < dim; ++n1) {
        for (Index n2 = 0; n2 < dim; ++n2) {
            if (mode == 0 && n1 > 0) {
                out(n1, n2) = std::sqrt(static_cast<double>(n1)) * psi(n1 - 1, n2);
            } else if (mode == 1 && n2 > 0) {
                out(n1, n2) = std::sqrt(static_cast<double>(n2)) * psi(n1, n2 - 1);
            }
        }
    }
    return out;
}

complex inner(const ComplexMatrix &a, const ComplexMatrix &b) { return (a.conjugate().cwiseProduct(b)).sum(); }

}  // namespace

FockState two_mode_squeezed_vacuum(double xi, std::size_t n_max) {
    if (!std::isfinite(xi)) {
        throw ConstraintError("two_mode_squeezed_vacuum: xi must be finite");
    }
    if (n_max == 0) {
        throw ConstraintError("two_mode_squeezed_vacuum: n_max must be >= 1");
    }
    const double lambda = std::tanh(xi);
    const double norm = std::sqrt(1.0 - lambda * lambda);
    const auto dim = static_cast<Index>(n_max + 1);
    FockState state{n_max, ComplexMatrix::Zero(dim, dim)};
    double amp = norm;
    for (Index n = 0; n < dim; ++n) {
        state.amplitudes(n, n) = amp;
        amp *= lambda;
    }
    return state;
}

FockExpectations fock_expectations(const FockState &state, double budget) {
    FockExpectations out;
    out.norm_deficit = state.norm_deficit();
    if (!(std::abs(out.norm_deficit) <= budget)) {
        throw NumericalError("fock_expectations: norm deficit " + std::to_string(out.norm_deficit) +
                             " exceeds the truncation budget");
    }
    const Index dim = state.amplitudes.rows() + 2;
    ComplexMatrix psi = ComplexMatrix::Zero(dim, dim);
    psi.topLeftCorner(dim - 2, dim - 2) = state.amplitudes;

    const ComplexMatrix a[2] = {lower(psi, 0), lower(psi, 1)};
    const ComplexMatrix aa[2][2] = {{lower(a[0], 0), lower(a[0], 1)}, {lower(a[1], 0), lower(a[1], 1)}};

    out.means.resize(2);
    for (int i = 0; i < 2; ++i) {
        out.means(i) = inner(a[i], a[i]).real();
    }
    out.moments.resize(2, 2);
    out.anomalous.resize(2, 2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            // <a_i^dag a_j^dag a_j a_i> = || a_j a_i psi ||^2
            out.moments(i, j) = aa[i][j].squaredNorm() - out.means(i) * out.means(j);
            out.anomalous(i, j) = inner(psi, aa[j][i]);
        }
    }

    // Quadrature vectors R psi for R in (q1, q2, p1, p2).
    ComplexMatrix r[4];
    const complex minus_i(0.0, -1.0);
    for (int i = 0; i < 2; ++i) {
        const ComplexMatrix up = raise(psi, i);
        r[i] = (a[i] + up) / std::numbers::sqrt2;
        r[2 + i] = minus_i * (a[i] - up) / std::numbers::sqrt2;
    }
    double first[4];
    for (int k = 0; k < 4; ++k) {
        first[k] = inner(psi, r[k]).real();
    }
    out.covariance.resize(4, 4);
    for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
            // Hermitian R: <{R_k, R_l}>/2 = Re <R_k psi, R_l psi>.
            out.covariance(k, l) = inner(r[k], r[l]).real() - first[k] * first[l];
        }
    }
    return out;
}

ComplexVector single_walker_recursion(std::size_t d, complex tau, complex rho, std::size_t t,
                                      const ComplexVector &initial) {
    if (d < 2) {
        throw ConstraintError("single_walker_recursion: need d >= 2");
    }
    if (static_cast<std::size_t>(initial.size()) != 2 * d) {
        throw DimensionError("single_walker_recursion: expected " + std::to_string(2 * d) + " amplitudes");
    }
    if (std::abs(std::norm(tau) + std::norm(rho) - 1.0) > 1e-10) {
        throw ConstraintError("single_walker_recursion: |tau|^2 + |rho|^2 != 1");
    }
    const auto n = static_cast<Index>(d);
    ComplexVector plus = initial.head(n);
    ComplexVector minus = initial.tail(n);
    ComplexVector next_plus(n), next_minus(n);
    for (std::size_t step = 0; step < t; ++step) {
        for (Index x = 0; x < n; ++x) {
            const complex cp = tau * plus(x) + rho * minus(x);
            const complex cm = -std::conj(rho) * plus(x) + std::conj(tau) * minus(x);
            next_plus((x + 1) % n) = cp;
            next_minus((x + n - 1) % n) = cm;
        }
        plus.swap(next_plus);
        minus.swap(next_minus);
    }
    ComplexVector out(2 * n);
    out << plus, minus;
    return out;
}

}  // namespace dgqw
