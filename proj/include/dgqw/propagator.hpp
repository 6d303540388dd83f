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

// t-step walk transforms. Two engines: repeated composition of the single
// step, and a closed form obtained by diagonalizing the cyclic shift with the
// DFT. In the Fourier basis the PDC and BS walks decouple into one 2x2 block
// per wavenumber k, so any power (and the logarithm) reduces to a 2x2 matrix
// function.

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <vector>

#include "dgqw/bogoliubov.hpp"
#include "dgqw/complex_matrix.hpp"
#include "dgqw/walk.hpp"

namespace dgqw {

using Matrix2c = Eigen::Matrix2cd;

/// F_{k,x} = omega^{k x} / sqrt(d), omega = exp(2 pi i / d).
ComplexMatrix dft_matrix(std::size_t d);

/// An analytic scalar function together with its derivative; the derivative
/// is only evaluated for (near-)degenerate arguments.
struct ScalarFunction {
    std::function<complex(complex)> value;
    std::function<complex(complex)> derivative;
    /// (f(a) - f(b)) / (a - b) evaluated without cancellation; optional. For
    /// |a - b| <= |b|/2, f(a) is continued from b rather than taken on the
    /// principal branch.
    std::function<complex(complex, complex)> divided_difference;
};

/// Principal logarithm. Arguments within 1e-13 (relative) of the negative real
/// axis are placed on its upper side, so the result is insensitive to the sign
/// of rounding noise in the imaginary part. Throws NumericalError at 0.
complex principal_log(complex z);

/// exp(t * principal_log(z)).
ScalarFunction principal_power(double t);
ScalarFunction principal_logarithm();

inline constexpr double kDegenerateThreshold = 1e-8;

/// f(M) through the eigenvalues W +- eps, W = tr(M)/2, eps = sqrt(W^2 - det M):
///   f(M) = (f(W+eps) + f(W-eps))/2 id + (f(W+eps) - f(W-eps))/(2 eps) (M - W id).
/// The divided difference comes from f.divided_difference when provided
/// (f'(W) only when eps is exactly 0); a close pair straddling the cut is
/// continued from the eigenvalue with the larger imaginary part. Otherwise it is formed directly and
/// replaced by f'(W) for |eps| < `degenerate`.
Matrix2c matrix_function_2x2(const Matrix2c &m, const ScalarFunction &f,
                             double degenerate = kDegenerateThreshold);

/// Per-wavenumber Fourier blocks of the single step.
///   PDC: [[mu w^k, nu w^k], [conj(nu) w^-k, conj(mu) w^-k]]
///   BS:  [[tau w^k, rho w^k], [-conj(rho) w^-k, conj(tau) w^-k]]
Matrix2c pdc_block(std::size_t d, std::size_t k, complex mu, complex nu);
Matrix2c bs_block(std::size_t d, std::size_t k, complex tau, complex rho);

enum class Regime { Squeezing, Rotation };

struct SpectralData {
    CoinKind kind = CoinKind::Pdc;
    ComplexVector omega;  // exp(2 pi i k / d)
    /// Xi_k for PDC, Theta_k for BS.
    ComplexVector exponent;
    std::vector<Regime> regime;
};

/// Xi_k = log(W + sqrt(W^2 - 1)) with W = Re(mu w^k); a negative discriminant
/// gives a purely imaginary Xi_k (rotation). Theta_k = arg(W + i sqrt(1 - W^2))
/// with W = Re(tau w^k). Composite coins throw ConstraintError.
SpectralData spectral_data(std::size_t d, const CoinSpec &coin);

/// Largest |cosh(t Xi)| accepted before NumericalError is raised.
inline constexpr double kOverflowLimit = 1e300;

/// Closed-form t-step transform for real t >= 0. Non-integer t uses the
/// principal power of each Fourier block; for PDC the (-, +) pair of blocks is
/// the conjugate partner of the (+, -) pair.
BogoliubovTransform spectral_propagator_pdc(std::size_t d, complex mu, complex nu, double t);
BogoliubovTransform spectral_propagator_bs(std::size_t d, complex tau, complex rho, double t);
/// Dispatches on a PDC or BS coin; composite coins throw ConstraintError.
BogoliubovTransform spectral_propagator(std::size_t d, const CoinSpec &coin, double t);

/// t-fold composition of `step` with itself.
BogoliubovTransform evolve_dense(const BogoliubovTransform &step, std::size_t t);

enum class Engine { Spectral, Dense };

struct Propagation {
    BogoliubovTransform transform;
    Engine engine;
};

/// True when the spectral engine covers this coin (single PDC or BS coin).
bool spectral_supported(const CoinSpec &coin);

/// Runs the requested engine. The dense engine needs integer t.
Propagation propagate(std::size_t d, const CoinSpec &coin, double t, Engine engine);

struct Generator {
    /// 4d x 4d matrix acting on (a; a^dagger); exp(t G) is the doubled form of
    /// the continuous-time transform.
    ComplexMatrix g;
    /// Wavenumbers whose 2x2 block has an eigenvalue on the negative real
    /// axis. The principal value (argument +pi) is used there.
    std::vector<std::size_t> branch_cut_wavenumbers;
};

/// Logarithm of a PDC- or BS-family single step, computed blockwise in the
/// Fourier domain. Throws ConstraintError when `step` does not have that block
/// structure.
Generator generator(const BogoliubovTransform &step);

}  // namespace dgqw
