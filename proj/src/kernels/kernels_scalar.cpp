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

#include "kernels_internal.hpp"

namespace dgqw::kernels {
namespace {

void cgemm_scalar(std::size_t m, std::size_t n, std::size_t k, const complex *a, const complex *b,
                  complex *c) {
    for (std::size_t j = 0; j < n; ++j) {
        complex *cj = c + j * m;
        for (std::size_t i = 0; i < m; ++i) {
            cj[i] = 0.0;
        }
        for (std::size_t p = 0; p < k; ++p) {
            const complex bpj = b[p + j * k];
            if (bpj == 0.0) {
                continue;
            }
            const complex *ap = a + p * m;
            const double br = bpj.real();
            const double bi = bpj.imag();
            for (std::size_t i = 0; i < m; ++i) {
                const double ar = ap[i].real();
                const double ai = ap[i].imag();
                cj[i] += complex(ar * br - ai * bi, ai * br + ar * bi);
            }
        }
    }
}

void moment_matrix_scalar(std::size_t n, const complex *z, const complex *y, const complex *beta,
                          double *out) {
    for (std::size_t j = 0; j < n; ++j) {
        const complex bj = beta[j];
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t idx = i + j * n;
            const complex zij = z[idx];
            const complex yij = y[idx];
            const complex bi = beta[i];
            out[idx] = std::norm(zij) + std::norm(yij) + 2.0 * (std::conj(zij) * bi * bj).real() +
                       2.0 * (yij * std::conj(bi) * bj).real();
        }
    }
}

double photon_means_scalar(std::size_t n, const complex *beta, const double *noise, double *out) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double coherent = std::norm(beta[i]);
        out[i] = coherent + noise[i];
        total += coherent;
    }
    return total;
}

}  // namespace

const KernelSet &scalar_kernels() {
    static const KernelSet set{Isa::Scalar, cgemm_scalar, moment_matrix_scalar, photon_means_scalar};
    return set;
}

}  // namespace dgqw::kernels
