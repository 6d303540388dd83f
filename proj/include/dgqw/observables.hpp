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

// Measurable quantities of a Gaussian walk driven by coherent light. All
// functions take the propagated transform and, where needed, the input
// amplitudes; the input state is a product of coherent states.

#include <cstddef>
#include <optional>

#include "dgqw/bogoliubov.hpp"
#include "dgqw/complex_matrix.hpp"
#include "dgqw/mode_layout.hpp"

namespace dgqw {

/// Second-order building blocks of the output moments.
///   x_{ii'} = sum_j U_ij conj(U_i'j)       (= U U^H)
///   y_{ii'} = sum_j conj(V_ij) V_i'j       (= conj(V V^H))
///   z_{ii'} = sum_j U_ij V_i'j             (= U V^T)
struct MomentBlocks {
    ComplexMatrix x;
    ComplexMatrix y;
    ComplexMatrix z;

    /// V V^H, the matrix form used for noise and the entanglement bound.
    ComplexMatrix vvh() const { return y.conjugate(); }
};

MomentBlocks moment_blocks(const BogoliubovTransform &t);

/// (<q>; <p>) = (sqrt2 Re beta; sqrt2 Im beta).
RealVector displacement_vector(const BogoliubovTransform &t, const ComplexVector &alpha);

/// Same quantity through the real quadrature form of the transform acting on
/// (sqrt2 Re alpha; sqrt2 Im alpha).
RealVector displacement_vector_symplectic(const BogoliubovTransform &t, const ComplexVector &alpha);

/// Real 2n x 2n quadrature form T' of the transform, (q; p) -> T' (q; p).
RealMatrix symplectic_matrix(const BogoliubovTransform &t);

struct CovarianceReport {
    /// Ordering: all q, then all p.
    RealMatrix c;
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
    double squeezing_db = 0.0;
    /// Smallest eigenvalue of C + (i/2) Lambda; nonnegative for physical states.
    double physicality = 0.0;
};

CovarianceReport covariance_matrix(const BogoliubovTransform &t);

/// -log10(min eig / (1/2)). Throws NumericalError for asymmetric input.
double squeezing_db(const RealMatrix &c);

/// Squeezing restricted to the listed modes (their q and p rows).
double squeezing_db(const RealMatrix &c, const std::vector<std::size_t> &modes);

/// 4x4 block over (q_{x,+}, q_{x,-}, p_{x,+}, p_{x,-}).
RealMatrix reduced_coin_covariance(const RealMatrix &c, const ModeLayout &layout, std::size_t x);

/// <n_i> = |beta_i|^2 + y_ii.
RealVector photon_means(const BogoliubovTransform &t, const ComplexVector &alpha);

/// Normally ordered central moments <:dn_i dn_i':> for coherent inputs.
RealMatrix photon_moment_matrix(const BogoliubovTransform &t, const ComplexVector &alpha);

/// [id id] M [id id]^T: coin indices summed, positions kept.
RealMatrix coin_traced_moment_matrix(const RealMatrix &m);

/// Radicands in [-this, 0) are treated as 0.
inline constexpr double kRadicandClip = 1e-12;

/// Separable bound 1/2 sum_j (sqrt((1 + 2 [V V^H]_jj)^2 - 4 |[U V^T]_jj|^2) - 1)
/// over the per-mode partition.
double entanglement_bound(const BogoliubovTransform &t);

inline constexpr double kExcessNoiseTolerance = 1e-8;

/// sum_i (<n_i> - |beta_i|^2), cross-checked against tr(V V^H). Throws
/// NumericalError when the two differ by more than kExcessNoiseTolerance plus
/// the rounding floor 16 eps (sum |beta|^2 + tr(V V^H)).
double excess_noise(const BogoliubovTransform &t, const ComplexVector &alpha);

/// sum |beta|^2 / sum |alpha|^2. Throws ConstraintError for a zero input.
double amplification(const BogoliubovTransform &t, const ComplexVector &alpha);

enum class IntensitySource {
    /// Photon means, including amplified vacuum noise.
    PhotonMeans,
    /// |beta|^2 only.
    CoherentOnly,
};

/// P(x) proportional to the intensity summed over both coin values.
RealVector intensity_distribution(const BogoliubovTransform &t, const ComplexVector &alpha, const ModeLayout &layout,
                                  IntensitySource source = IntensitySource::PhotonMeans);

/// 1 - |sum_x P(x) exp(2 pi i x / d)|.
double circular_variance(const RealVector &p);

struct ObservableReport {
    double t = 0.0;
    ComplexVector beta;
    RealVector displacement;
    CovarianceReport covariance;
    RealMatrix reduced_coin_covariance;
    /// Squeezing of the 4x4 coin block at position 0.
    double coin_squeezing_db = 0.0;
    RealVector photon_means;
    RealMatrix moment_matrix;
    RealMatrix coin_traced_moment_matrix;
    double moment_min_eigenvalue = 0.0;
    double coin_traced_min_eigenvalue = 0.0;
    double g_min = 0.0;
    double excess_noise = 0.0;
    /// Empty for a vacuum input.
    std::optional<double> amplification;
    /// Empty when no photons reach the output.
    std::optional<RealVector> intensity;
    std::optional<double> circular_variance;
};

ObservableReport evaluate(const BogoliubovTransform &t, const ComplexVector &alpha, const ModeLayout &layout,
                          double time, IntensitySource source = IntensitySource::PhotonMeans);

}  // namespace dgqw
