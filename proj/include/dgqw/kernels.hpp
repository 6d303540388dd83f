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

// Data-parallel inner loops. Each kernel has a portable scalar reference and,
// on x86-64, an AVX2+FMA variant. The active set is picked once at first use
// from CPUID; setting DGQW_KERNELS=scalar forces the reference path.

#include <complex>
#include <cstddef>
#include <string_view>

namespace dgqw::kernels {

using complex = std::complex<double>;

enum class Isa { Scalar, Avx2 };

struct KernelSet {
    Isa isa;

    /// C = A * B for column-major m x k and k x n operands (leading dimension =
    /// row count). C is m x n and must not alias A or B.
    void (*cgemm)(std::size_t m, std::size_t n, std::size_t k, const complex *a, const complex *b,
                  complex *c);

    /// Normally ordered photon-number central moments for coherent inputs:
    ///   out(i,j) = |z_ij|^2 + |y_ij|^2 + 2 Re(conj(z_ij) b_i b_j) + 2 Re(y_ij conj(b_i) b_j)
    /// z, y are column-major n x n; out is column-major n x n real.
    void (*moment_matrix)(std::size_t n, const complex *z, const complex *y, const complex *beta,
                          double *out);

    /// out_i = |beta_i|^2 + noise_i, returns sum_i |beta_i|^2.
    double (*photon_means)(std::size_t n, const complex *beta, const double *noise, double *out);
};

const KernelSet &scalar_kernels();

/// Null when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelSet *avx2_kernels();

/// "scalar" forces the reference set; anything else (or null) picks the
/// fastest supported one.
const KernelSet &select(const char *request);

/// select(getenv("DGQW_KERNELS")), evaluated once.
const KernelSet &active();

std::string_view isa_name(Isa isa);

}  // namespace dgqw::kernels
