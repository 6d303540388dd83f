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

#include "dgqw/complex_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <string>

#include "dgqw/errors.hpp"
#include "dgqw/kernels.hpp"

namespace dgqw {

double max_abs(const ComplexMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs(const RealMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bool all_finite(const ComplexMatrix &m) { return m.allFinite(); }

ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                             std::to_string(b.rows()) + " differ");
    }
    ComplexMatrix c(a.rows(), b.cols());
    if (c.size() == 0) {
        return c;
    }
    kernels::active().cgemm(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(b.cols()),
                            static_cast<std::size_t>(a.cols()), a.data(), b.data(), c.data());
    return c;
}

ComplexMatrix hermitian_part(const ComplexMatrix &a, double tol, const char *what) {
    if (a.rows() != a.cols()) {
        throw DimensionError(std::string(what) + ": matrix is not square");
    }
    const double scale = std::max(1.0, max_abs(a));
    const double asym = max_abs(ComplexMatrix(a - a.adjoint()));
    if (asym > tol * scale) {
        throw NumericalError(std::string(what) + ": asymmetry " + std::to_string(asym) +
                             " exceeds tolerance");
    }
    return (a + a.adjoint()) / 2.0;
}

RealMatrix symmetric_part(const RealMatrix &a, double tol, const char *what) {
    if (a.rows() != a.cols()) {
        throw DimensionError(std::string(what) + ": matrix is not square");
    }
    const double scale = std::max(1.0, max_abs(a));
    const double asym = max_abs(RealMatrix(a - a.transpose()));
    if (asym > tol * scale) {
        throw NumericalError(std::string(what) + ": asymmetry " + std::to_string(asym) +
                             " exceeds tolerance");
    }
    return (a + a.transpose()) / 2.0;
}

RealVector hermitian_eigenvalues(const ComplexMatrix &a, double tol) {
    const ComplexMatrix h = hermitian_part(a, tol, "hermitian_eigenvalues");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("hermitian_eigenvalues: eigensolver did not converge");
    }
    return solver.eigenvalues();
}

RealVector symmetric_eigenvalues(const RealMatrix &a, double tol) {
    const RealMatrix s = symmetric_part(a, tol, "symmetric_eigenvalues");
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(s, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("symmetric_eigenvalues: eigensolver did not converge");
    }
    return solver.eigenvalues();
}

}  // namespace dgqw
