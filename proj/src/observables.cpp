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

#include "dgqw/observables.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dgqw/errors.hpp"
#include "dgqw/kernels.hpp"

namespace dgqw {
namespace {

using Eigen::Index;

void require_length(const BogoliubovTransform &t, const ComplexVector &alpha, const char *what) {
    if (static_cast<std::size_t>(alpha.size()) != t.modes()) {
        throw DimensionError(std::string(what) + ": input has " + std::to_string(alpha.size()) +
                             " amplitudes for a " + std::to_string(t.modes()) + "-mode transform");
    }
}

}  // namespace

MomentBlocks moment_blocks(const BogoliubovTransform &t) {
    const ComplexMatrix &u = t.u();
    const ComplexMatrix &v = t.v();
    MomentBlocks out;
    const ComplexMatrix x = multiply(u, u.adjoint());
    const ComplexMatrix y = multiply(v.conjugate(), v.transpose());
    const ComplexMatrix z = multiply(u, v.transpose());
    out.x = (x + x.adjoint()) / 2.0;
    out.y = (y + y.adjoint()) / 2.0;
    out.z = (z + z.transpose()) / 2.0;
    return out;
}

RealVector displacement_vector(const BogoliubovTransform &t, const ComplexVector &alpha) {
    require_length(t, alpha, "displacement_vector");
    const ComplexVector beta = apply_amplitudes(t, alpha);
    const auto n = beta.size();
    RealVector out(2 * n);
    out.head(n) = std::numbers::sqrt2 * beta.real();
    out.tail(n) = std::numbers::sqrt2 * beta.imag();
    return out;
}

RealMatrix symplectic_matrix(const BogoliubovTransform &t) {
    const ComplexMatrix sum = t.u() + t.v();
    const ComplexMatrix diff = t.u() - t.v();
    const auto n = static_cast<Index>(t.modes());
    RealMatrix out(2 * n, 2 * n);
    out.topLeftCorner(n, n) = sum.real();
    out.topRightCorner(n, n) = -diff.imag();
    out.bottomLeftCorner(n, n) = sum.imag();
    out.bottomRightCorner(n, n) = diff.real();
    return out;
}

RealVector displacement_vector_symplectic(const BogoliubovTransform &t, const ComplexVector &alpha) {
    require_length(t, alpha, "displacement_vector");
    const auto n = alpha.size();
    RealVector in(2 * n);
    in.head(n) = std::numbers::sqrt2 * alpha.real();
    in.tail(n) = std::numbers::sqrt2 * alpha.imag();
    return symplectic_matrix(t) * in;
}

CovarianceReport covariance_matrix(const BogoliubovTransform &t) {
    const MomentBlocks b = moment_blocks(t);
    const auto n = static_cast<Index>(t.modes());
    const RealMatrix half = RealMatrix::Identity(n, n) / 2.0;
    RealMatrix c(2 * n, 2 * n);
    c.topLeftCorner(n, n) = b.y.real() + b.z.real() + half;
    c.bottomRightCorner(n, n) = b.y.real() - b.z.real() + half;
    const RealMatrix qp = b.y.imag() + b.z.imag();
    c.topRightCorner(n, n) = qp;
    c.bottomLeftCorner(n, n) = qp.transpose();

    CovarianceReport report;
    report.c = (c + c.transpose()) / 2.0;
    const RealVector evals = symmetric_eigenvalues(report.c);
    report.min_eigenvalue = evals(0);
    report.max_eigenvalue = evals(evals.size() - 1);
    report.squeezing_db = -std::log10(report.min_eigenvalue / 0.5);

    ComplexMatrix phys = report.c.cast<complex>();
    const complex half_i(0.0, 0.5);
    phys.topRightCorner(n, n) += half_i * ComplexMatrix::Identity(n, n);
    phys.bottomLeftCorner(n, n) -= half_i * ComplexMatrix::Identity(n, n);
    report.physicality = hermitian_eigenvalues(phys)(0);
    return report;
}

double squeezing_db(const RealMatrix &c) {
    if (c.rows() != c.cols() || c.rows() == 0) {
        throw DimensionError("squeezing_db: expected a nonempty square matrix");
    }
    return -std::log10(symmetric_eigenvalues(c)(0) / 0.5);
}

double squeezing_db(const RealMatrix &c, const std::vector<std::size_t> &modes) {
    if (c.rows() != c.cols() || c.rows() % 2 != 0) {
        throw DimensionError("squeezing_db: covariance must be square with even size");
    }
    const auto n = static_cast<std::size_t>(c.rows() / 2);
    std::vector<Index> rows;
    for (std::size_t m : modes) {
        if (m >= n) {
            throw DimensionError("squeezing_db: mode " + std::to_string(m) + " out of range");
        }
        rows.push_back(static_cast<Index>(m));
    }
    for (std::size_t m : modes) {
        rows.push_back(static_cast<Index>(m + n));
    }
    return squeezing_db(RealMatrix(c(rows, rows)));
}

RealMatrix reduced_coin_covariance(const RealMatrix &c, const ModeLayout &layout, std::size_t x) {
    if (static_cast<std::size_t>(c.rows()) != 2 * layout.modes() || c.rows() != c.cols()) {
        throw DimensionError("reduced_coin_covariance: covariance size does not match the layout");
    }
    const auto n = static_cast<Index>(layout.modes());
    const auto plus = static_cast<Index>(layout.index(x, Coin::Plus));
    const auto minus = static_cast<Index>(layout.index(x, Coin::Minus));
    const std::vector<Index> rows = {plus, minus, plus + n, minus + n};
    return c(rows, rows);
}

RealVector photon_means(const BogoliubovTransform &t, const ComplexVector &alpha) {
    require_length(t, alpha, "photon_means");
    const ComplexVector beta = apply_amplitudes(t, alpha);
    // y_ii = sum_j |V_ij|^2
    const RealVector noise = t.v().rowwise().squaredNorm();
    RealVector out(beta.size());
    kernels::active().photon_means(static_cast<std::size_t>(beta.size()), beta.data(), noise.data(), out.data());
    return out;
}

RealMatrix photon_moment_matrix(const BogoliubovTransform &t, const ComplexVector &alpha) {
    require_length(t, alpha, "photon_moment_matrix");
    const ComplexVector beta = apply_amplitudes(t, alpha);
    const MomentBlocks b = moment_blocks(t);
    const auto n = static_cast<Index>(t.modes());
    RealMatrix m(n, n);
    kernels::active().moment_matrix(static_cast<std::size_t>(n), b.z.data(), b.y.data(), beta.data(), m.data());
    return symmetric_part(m, 1e-9 * std::max(1.0, max_abs(m)), "photon_moment_matrix");
}

RealMatrix coin_traced_moment_matrix(const RealMatrix &m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0) {
        throw DimensionError("coin_traced_moment_matrix: expected a square matrix of even size");
    }
    const Index d = m.rows() / 2;
    return m.topLeftCorner(d, d) + m.topRightCorner(d, d) + m.bottomLeftCorner(d, d) + m.bottomRightCorner(d, d);
}

double entanglement_bound(const BogoliubovTransform &t) {
    const ComplexMatrix &u = t.u();
    const ComplexMatrix &v = t.v();
    const RealVector vvh = v.rowwise().squaredNorm();
    double total = 0.0;
    for (Index j = 0; j < u.rows(); ++j) {
        const double uvt = std::abs(u.row(j).cwiseProduct(v.row(j)).sum());
        const double a = 1.0 + 2.0 * vvh(j);
        double radicand = a * a - 4.0 * uvt * uvt;
        if (radicand < 0.0) {
            if (radicand < -kRadicandClip) {
                throw NumericalError("entanglement_bound: negative radicand " + std::to_string(radicand) +
                                     " at mode " + std::to_string(j) + "; transform is not valid");
            }
            radicand = 0.0;
        }
        total += std::sqrt(radicand) - 1.0;
    }
    return total / 2.0;
}

double excess_noise(const BogoliubovTransform &t, const ComplexVector &alpha) {
    const RealVector n = photon_means(t, alpha);
    const ComplexVector beta = apply_amplitudes(t, alpha);
    const double from_means = (n - RealVector(beta.cwiseAbs2())).sum();
    const double from_trace = t.v().squaredNorm();
    // Rounding floor: forming |beta_i|^2 + y_ii, subtracting |beta_i|^2 again
    // and summing in a different order each cost about eps times the totals.
    const double rounding =
        16.0 * std::numeric_limits<double>::epsilon() * (beta.squaredNorm() + from_trace);
    if (!(std::abs(from_means - from_trace) <= kExcessNoiseTolerance + rounding)) {
        throw NumericalError("excess_noise: photon-mean and trace evaluations differ by " +
                             std::to_string(std::abs(from_means - from_trace)));
    }
    return from_trace;
}

double amplification(const BogoliubovTransform &t, const ComplexVector &alpha) {
    require_length(t, alpha, "amplification");
    const double in = alpha.squaredNorm();
    if (in == 0.0) {
        throw ConstraintError("amplification: input carries no photons");
    }
    return apply_amplitudes(t, alpha).squaredNorm() / in;
}

RealVector intensity_distribution(const BogoliubovTransform &t, const ComplexVector &alpha, const ModeLayout &layout,
                                  IntensitySource source) {
    if (layout.modes() != t.modes()) {
        throw DimensionError("intensity_distribution: layout does not match the transform");
    }
    RealVector n = source == IntensitySource::PhotonMeans ? photon_means(t, alpha)
                                                          : RealVector(apply_amplitudes(t, alpha).cwiseAbs2());
    const auto d = static_cast<Index>(layout.positions());
    RealVector p = n.head(d) + n.tail(d);
    const double total = p.sum();
    if (!(total > 0.0)) {
        throw ConstraintError("intensity_distribution: no photons at the output");
    }
    return p / total;
}

double circular_variance(const RealVector &p) {
    const double total = p.sum();
    if (!(std::abs(total - 1.0) <= 1e-9)) {
        throw ConstraintError("circular_variance: distribution sums to " + std::to_string(total));
    }
    const auto d = static_cast<double>(p.size());
    complex moment = 0.0;
    for (Index x = 0; x < p.size(); ++x) {
        moment += p(x) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(x) / d);
    }
    return 1.0 - std::abs(moment);
}

ObservableReport evaluate(const BogoliubovTransform &t, const ComplexVector &alpha, const ModeLayout &layout,
                          double time, IntensitySource source) {
    require_length(t, alpha, "evaluate");
    ObservableReport r;
    r.t = time;
    r.beta = apply_amplitudes(t, alpha);
    r.displacement = displacement_vector(t, alpha);
    r.covariance = covariance_matrix(t);
    r.reduced_coin_covariance = reduced_coin_covariance(r.covariance.c, layout, 0);
    r.coin_squeezing_db = squeezing_db(r.reduced_coin_covariance);
    r.photon_means = photon_means(t, alpha);
    r.moment_matrix = photon_moment_matrix(t, alpha);
    r.coin_traced_moment_matrix = coin_traced_moment_matrix(r.moment_matrix);
    r.moment_min_eigenvalue = symmetric_eigenvalues(r.moment_matrix)(0);
    r.coin_traced_min_eigenvalue = symmetric_eigenvalues(r.coin_traced_moment_matrix)(0);
    r.g_min = entanglement_bound(t);
    r.excess_noise = excess_noise(t, alpha);
    if (alpha.squaredNorm() > 0.0) {
        r.amplification = amplification(t, alpha);
    }
    const RealVector n = source == IntensitySource::PhotonMeans ? r.photon_means : RealVector(r.beta.cwiseAbs2());
    if (n.sum() > 0.0) {
        r.intensity = intensity_distribution(t, alpha, layout, source);
        r.circular_variance = circular_variance(*r.intensity);
    }
    return r;
}

}  // namespace dgqw
