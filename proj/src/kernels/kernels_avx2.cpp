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

// Compiled with -mavx2 -mfma. Only reached after the dispatcher has checked
// CPUID, so nothing in here may run at static-initialization time.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace dgqw::kernels {
namespace {

// Two packed complex doubles times a broadcast complex scalar (br, bi).
inline __m256d cmul_scalar(__m256d a, __m256d br, __m256d bi) {
    const __m256d swapped = _mm256_permute_pd(a, 0b0101);
    return _mm256_fmaddsub_pd(a, br, _mm256_mul_pd(swapped, bi));
}

// conj(a) * b with the imaginary part negated, i.e. (Re, -Im) of conj(a) b.
inline __m256d conj_mul_flip(__m256d a, __m256d br, __m256d bi) {
    const __m256d swapped = _mm256_permute_pd(a, 0b0101);
    return _mm256_fmsubadd_pd(a, br, _mm256_mul_pd(swapped, bi));
}

// Sums adjacent lane pairs of two vectors into [a0+a1, a2+a3, b0+b1, b2+b3].
inline __m256d pair_sums(__m256d a, __m256d b) {
    return _mm256_permute4x64_pd(_mm256_hadd_pd(a, b), 0b11011000);
}

void cgemm_avx2(std::size_t m, std::size_t n, std::size_t k, const complex *a, const complex *b,
                complex *c) {
    const double *ad = reinterpret_cast<const double *>(a);
    for (std::size_t j = 0; j < n; ++j) {
        double *cj = reinterpret_cast<double *>(c + j * m);
        const complex *bj = b + j * k;
        std::size_t i = 0;
        for (; i + 4 <= m; i += 4) {
            __m256d acc0 = _mm256_setzero_pd();
            __m256d acc1 = _mm256_setzero_pd();
            for (std::size_t p = 0; p < k; ++p) {
                const __m256d br = _mm256_set1_pd(bj[p].real());
                const __m256d bi = _mm256_set1_pd(bj[p].imag());
                const double *ap = ad + 2 * (p * m + i);
                acc0 = _mm256_add_pd(acc0, cmul_scalar(_mm256_loadu_pd(ap), br, bi));
                acc1 = _mm256_add_pd(acc1, cmul_scalar(_mm256_loadu_pd(ap + 4), br, bi));
            }
            _mm256_storeu_pd(cj + 2 * i, acc0);
            _mm256_storeu_pd(cj + 2 * i + 4, acc1);
        }
        for (; i + 2 <= m; i += 2) {
            __m256d acc = _mm256_setzero_pd();
            for (std::size_t p = 0; p < k; ++p) {
                const __m256d br = _mm256_set1_pd(bj[p].real());
                const __m256d bi = _mm256_set1_pd(bj[p].imag());
                acc = _mm256_add_pd(acc, cmul_scalar(_mm256_loadu_pd(ad + 2 * (p * m + i)), br, bi));
            }
            _mm256_storeu_pd(cj + 2 * i, acc);
        }
        for (; i < m; ++i) {
            double re = 0.0;
            double im = 0.0;
            for (std::size_t p = 0; p < k; ++p) {
                const complex av = a[p * m + i];
                const complex bv = bj[p];
                re += av.real() * bv.real() - av.imag() * bv.imag();
                im += av.imag() * bv.real() + av.real() * bv.imag();
            }
            cj[2 * i] = re;
            cj[2 * i + 1] = im;
        }
    }
}

// Lane-pair sums of this vector give out_i for two consecutive rows.
inline __m256d moment_lanes(const double *z, const double *y, const double *beta, __m256d bjr,
                            __m256d bji) {
    const __m256d vz = _mm256_loadu_pd(z);
    const __m256d vy = _mm256_loadu_pd(y);
    const __m256d vb = _mm256_loadu_pd(beta);
    const __m256d two = _mm256_set1_pd(2.0);
    // Re(conj(z) w) = zr wr + zi wi with w = b_i b_j.
    const __m256d w = cmul_scalar(vb, bjr, bji);
    // Re(y u) = yr ur - yi ui with u = conj(b_i) b_j.
    const __m256d u = conj_mul_flip(vb, bjr, bji);
    __m256d s = _mm256_mul_pd(vz, vz);
    s = _mm256_fmadd_pd(vy, vy, s);
    s = _mm256_fmadd_pd(_mm256_mul_pd(two, vz), w, s);
    s = _mm256_fmadd_pd(_mm256_mul_pd(two, vy), u, s);
    return s;
}

void moment_matrix_avx2(std::size_t n, const complex *z, const complex *y, const complex *beta,
                        double *out) {
    const double *zd = reinterpret_cast<const double *>(z);
    const double *yd = reinterpret_cast<const double *>(y);
    const double *bd = reinterpret_cast<const double *>(beta);
    for (std::size_t j = 0; j < n; ++j) {
        const complex bj = beta[j];
        const __m256d bjr = _mm256_set1_pd(bj.real());
        const __m256d bji = _mm256_set1_pd(bj.imag());
        const std::size_t col = j * n;
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4) {
            const std::size_t off = 2 * (col + i);
            const __m256d s0 = moment_lanes(zd + off, yd + off, bd + 2 * i, bjr, bji);
            const __m256d s1 = moment_lanes(zd + off + 4, yd + off + 4, bd + 2 * i + 4, bjr, bji);
            _mm256_storeu_pd(out + col + i, pair_sums(s0, s1));
        }
        for (; i < n; ++i) {
            const std::size_t idx = col + i;
            const complex zij = z[idx];
            const complex yij = y[idx];
            const complex bi = beta[i];
            out[idx] = std::norm(zij) + std::norm(yij) + 2.0 * (std::conj(zij) * bi * bj).real() +
                       2.0 * (yij * std::conj(bi) * bj).real();
        }
    }
}

double photon_means_avx2(std::size_t n, const complex *beta, const double *noise, double *out) {
    const double *bd = reinterpret_cast<const double *>(beta);
    __m256d total = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d b0 = _mm256_loadu_pd(bd + 2 * i);
        const __m256d b1 = _mm256_loadu_pd(bd + 2 * i + 4);
        const __m256d coherent = pair_sums(_mm256_mul_pd(b0, b0), _mm256_mul_pd(b1, b1));
        total = _mm256_add_pd(total, coherent);
        _mm256_storeu_pd(out + i, _mm256_add_pd(coherent, _mm256_loadu_pd(noise + i)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, total);
    double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) {
        const double coherent = std::norm(beta[i]);
        out[i] = coherent + noise[i];
        sum += coherent;
    }
    return sum;
}

}  // namespace

const KernelSet &avx2_kernels_unchecked() {
    static const KernelSet set{Isa::Avx2, cgemm_avx2, moment_matrix_avx2, photon_means_avx2};
    return set;
}

}  // namespace dgqw::kernels
