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

#include <Eigen/Dense>
#include <complex>

namespace dgqw {

using complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Largest absolute entry; 0 for empty matrices.
double max_abs(const ComplexMatrix &m);
double max_abs(const RealMatrix &m);

/// True when every entry is finite.
bool all_finite(const ComplexMatrix &m);

/// Matrix product through the runtime-selected GEMM kernel.
ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b);

/// Hermitian part (A + A^H)/2 after checking that |A - A^H| stays below `tol`.
ComplexMatrix hermitian_part(const ComplexMatrix &a, double tol, const char *what);
RealMatrix symmetric_part(const RealMatrix &a, double tol, const char *what);

/// Ascending eigenvalues of a Hermitian (resp. real symmetric) matrix. The
/// input is symmetrized first; asymmetry above `tol` throws NumericalError.
RealVector hermitian_eigenvalues(const ComplexMatrix &a, double tol = 1e-9);
RealVector symmetric_eigenvalues(const RealMatrix &a, double tol = 1e-9);

}  // namespace dgqw
