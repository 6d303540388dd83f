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

#include "dgqw/bogoliubov.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <string>

#include "dgqw/errors.hpp"

namespace dgqw {

BogoliubovTransform::BogoliubovTransform(ComplexMatrix u, ComplexMatrix v) : u_(std::move(u)), v_(std::move(v)) {
    if (u_.rows() != u_.cols() || v_.rows() != v_.cols()) {
        throw DimensionError("BogoliubovTransform: U and V must be square");
    }
    if (u_.rows() != v_.rows()) {
        throw DimensionError("BogoliubovTransform: U is " + std::to_string(u_.rows()) + "x" +
                             std::to_string(u_.cols()) + " but V is " + std::to_string(v_.rows()) + "x" +
                             std::to_string(v_.cols()));
    }
}

BogoliubovTransform BogoliubovTransform::identity(std::size_t modes) {
    const auto n = static_cast<Eigen::Index>(modes);
    return {ComplexMatrix::Identity(n, n), ComplexMatrix::Zero(n, n)};
}

ComplexMatrix BogoliubovTransform::doubled() const {
    const Eigen::Index n = u_.rows();
    ComplexMatrix t(2 * n, 2 * n);
    t.topLeftCorner(n, n) = u_;
    t.topRightCorner(n, n) = v_;
    t.bottomLeftCorner(n, n) = v_.conjugate();
    t.bottomRightCorner(n, n) = u_.conjugate();
    return t;
}

BogoliubovTransform BogoliubovTransform::from_doubled(const ComplexMatrix &t) {
    if (t.rows() != t.cols() || t.rows() % 2 != 0) {
        throw DimensionError("from_doubled: expected a square matrix of even size");
    }
    const Eigen::Index n = t.rows() / 2;
    return {t.topLeftCorner(n, n), t.topRightCorner(n, n)};
}

ValidityReport validate(const BogoliubovTransform &t, ValidationOptions options) {
    const ComplexMatrix &u = t.u();
    const ComplexMatrix &v = t.v();
    const auto n = static_cast<Eigen::Index>(t.modes());

    ValidityReport report;
    report.symmetry_residual = max_abs(ComplexMatrix(multiply(u, v.transpose()) - multiply(v, u.transpose())));
    report.unitarity_residual =
        max_abs(ComplexMatrix(multiply(u, u.adjoint()) - multiply(v, v.adjoint()) - ComplexMatrix::Identity(n, n)));

    double scale = 1.0;
    if (options.mode == ToleranceMode::Relative) {
        const double mu = max_abs(u);
        const double mv = max_abs(v);
        scale = std::max({1.0, mu * mu, mv * mv});
    }
    report.threshold = options.tol * scale;
    report.passed = std::isfinite(report.symmetry_residual) && std::isfinite(report.unitarity_residual) &&
                    report.symmetry_residual <= report.threshold && report.unitarity_residual <= report.threshold;
    return report;
}

BogoliubovTransform compose(const BogoliubovTransform &second, const BogoliubovTransform &first) {
    if (second.modes() != first.modes()) {
        throw DimensionError("compose: mode counts " + std::to_string(second.modes()) + " and " +
                             std::to_string(first.modes()) + " differ");
    }
    const ComplexMatrix v1c = first.v().conjugate();
    const ComplexMatrix u1c = first.u().conjugate();
    ComplexMatrix u = multiply(second.u(), first.u()) + multiply(second.v(), v1c);
    ComplexMatrix v = multiply(second.u(), first.v()) + multiply(second.v(), u1c);
    return {std::move(u), std::move(v)};
}

BogoliubovTransform inverse(const BogoliubovTransform &t) {
    const ValidityReport report = validate(t, {1e-8, ToleranceMode::Relative});
    if (!report.passed) {
        throw ConstraintError("inverse: input is not a valid Bogoliubov transform (residuals " +
                              std::to_string(report.symmetry_residual) + ", " +
                              std::to_string(report.unitarity_residual) + ")");
    }
    return {t.u().adjoint(), -t.v().transpose()};
}

ComplexVector apply_amplitudes(const BogoliubovTransform &t, const ComplexVector &alpha) {
    if (static_cast<std::size_t>(alpha.size()) != t.modes()) {
        throw DimensionError("apply_amplitudes: input has " + std::to_string(alpha.size()) +
                             " amplitudes for a " + std::to_string(t.modes()) + "-mode transform");
    }
    return t.u() * alpha + t.v() * alpha.conjugate();
}

namespace {

// f(Z) for Hermitian positive definite Z via its eigendecomposition.
template <typename F>
ComplexMatrix hermitian_function(const ComplexMatrix &z, F &&f) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(z);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("polar_decompose: eigensolver did not converge");
    }
    const RealVector &evals = solver.eigenvalues();
    if (evals.size() > 0 && evals.minCoeff() <= 0.0) {
        throw NumericalError("polar_decompose: id - S S* is not positive definite");
    }
    const ComplexMatrix &q = solver.eigenvectors();
    const ComplexVector fev = evals.unaryExpr([&](double x) { return complex(f(x), 0.0); });
    return q * fev.asDiagonal() * q.adjoint();
}

}  // namespace

PolarForm polar_decompose(const BogoliubovTransform &t) {
    const Eigen::Index n = static_cast<Eigen::Index>(t.modes());
    Eigen::FullPivLU<ComplexMatrix> lu(t.u());
    if (!lu.isInvertible()) {
        throw NumericalError("polar_decompose: U is singular");
    }
    const ComplexMatrix s = lu.solve(t.v());
    const double scale = std::max(1.0, max_abs(s));
    if (max_abs(ComplexMatrix(s - s.transpose())) > 1e-8 * scale) {
        throw ConstraintError("polar_decompose: U^-1 V is not symmetric; input is not a valid transform");
    }
    const ComplexMatrix sym = (s + s.transpose()) / 2.0;
    ComplexMatrix z = ComplexMatrix::Identity(n, n) - sym * sym.conjugate();
    z = (z + z.adjoint()).eval() / 2.0;
    const ComplexMatrix root = hermitian_function(z, [](double x) { return std::sqrt(x); });
    return {t.u() * root, sym};
}

BogoliubovTransform reconstruct(const PolarForm &polar) {
    const Eigen::Index n = polar.s.rows();
    ComplexMatrix z = ComplexMatrix::Identity(n, n) - polar.s * polar.s.conjugate();
    z = (z + z.adjoint()).eval() / 2.0;
    const ComplexMatrix inv_root = hermitian_function(z, [](double x) { return 1.0 / std::sqrt(x); });
    ComplexMatrix u = polar.w * inv_root;
    ComplexMatrix v = u * polar.s;
    return {std::move(u), std::move(v)};
}

}  // namespace dgqw
