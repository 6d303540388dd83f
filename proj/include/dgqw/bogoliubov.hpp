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

#include <cstddef>

#include "dgqw/complex_matrix.hpp"

namespace dgqw {

/// Linear map of bosonic ladder operators, b = U a + V a^dagger. Only the
/// annihilation row (U, V) is stored; the creation row is its conjugate.
class BogoliubovTransform {
   public:
    /// Throws DimensionError unless U and V are square and of equal size.
    /// Physical validity is not checked here; see validate().
    BogoliubovTransform(ComplexMatrix u, ComplexMatrix v);

    static BogoliubovTransform identity(std::size_t modes);

    const ComplexMatrix &u() const { return u_; }
    const ComplexMatrix &v() const { return v_; }
    std::size_t modes() const { return static_cast<std::size_t>(u_.rows()); }

    /// The full 2n x 2n matrix [[U, V], [V*, U*]] acting on (a; a^dagger).
    ComplexMatrix doubled() const;
    static BogoliubovTransform from_doubled(const ComplexMatrix &t);

   private:
    ComplexMatrix u_;
    ComplexMatrix v_;
};

enum class ToleranceMode {
    Absolute,
    /// tol is multiplied by max(1, |U|_max^2, |V|_max^2).
    Relative,
};

struct ValidationOptions {
    double tol = 1e-10;
    ToleranceMode mode = ToleranceMode::Absolute;
};

struct ValidityReport {
    /// max |U V^T - V U^T|
    double symmetry_residual = 0.0;
    /// max |U U^H - V V^H - id|
    double unitarity_residual = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

ValidityReport validate(const BogoliubovTransform &t, ValidationOptions options = {});

/// Applies `first`, then `second`.
BogoliubovTransform compose(const BogoliubovTransform &second, const BogoliubovTransform &first);

/// (U^H, -V^T). Throws ConstraintError if `t` fails validation at relative 1e-8.
BogoliubovTransform inverse(const BogoliubovTransform &t);

/// beta = U alpha + V conj(alpha).
ComplexVector apply_amplitudes(const BogoliubovTransform &t, const ComplexVector &alpha);

struct PolarForm {
    ComplexMatrix w;  // unitary
    ComplexMatrix s;  // complex symmetric
};

/// Factorization U = W (id - S S*)^(-1/2), V = W (id - S S*)^(-1/2) S.
PolarForm polar_decompose(const BogoliubovTransform &t);

/// Rebuilds (U, V) from a polar form.
BogoliubovTransform reconstruct(const PolarForm &polar);

}  // namespace dgqw
