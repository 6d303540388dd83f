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

#include "dgqw/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dgqw/errors.hpp"

namespace dgqw {
namespace {

using Eigen::Index;

void require_positions(std::size_t d, const char *what) {
    if (d < 2) {
        throw ConstraintError(std::string(what) + ": need d >= 2, got " + std::to_string(d));
    }
}

// omega^j for j taken modulo d, evaluated from the reduced exponent so that
// large products k*x do not lose accuracy.
complex root_of_unity(std::size_t d, std::size_t j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j % d) / static_cast<double>(d);
    return std::polar(1.0, angle);
}

enum class Sandwich {
    // F^H diag(a) F, entries depend on (x - x') mod d.
    Forward,
    // F diag(a) F^H, entries depend on (x' - x) mod d.
    Backward,
};

// Circulant matrix with spectrum `a`, assembled in O(d^2).
ComplexMatrix circulant(const ComplexVector &a, Sandwich side) {
    const auto d = static_cast<std::size_t>(a.size());
    const auto n = static_cast<Index>(d);
    ComplexVector c = ComplexVector::Zero(n);
    for (std::size_t m = 0; m < d; ++m) {
        complex sum = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            sum += a(static_cast<Index>(k)) * root_of_unity(d, k * m);
        }
        c(static_cast<Index>(m)) = sum / static_cast<double>(d);
    }
    ComplexMatrix out(n, n);
    for (Index col = 0; col < n; ++col) {
        for (Index row = 0; row < n; ++row) {
            const Index m = side == Sandwich::Forward ? (col - row + n) % n : (row - col + n) % n;
            out(row, col) = c(m);
        }
    }
    return out;
}

// Diagonal of F X F^H (Forward) or F^H X F (Backward), after checking that the
// off-diagonal part vanishes.
ComplexVector spectrum_of(const ComplexMatrix &x, Sandwich side, const ComplexMatrix &f, const char *block) {
    const ComplexMatrix rotated = side == Sandwich::Forward ? ComplexMatrix(f * x * f.adjoint())
                                                            : ComplexMatrix(f.adjoint() * x * f);
    const ComplexVector diag = rotated.diagonal();
    ComplexMatrix off = rotated;
    off.diagonal().setZero();
    const double scale = std::max(1.0, max_abs(x));
    if (max_abs(off) > 1e-9 * scale) {
        throw ConstraintError(std::string("generator: block ") + block +
                              " is not circulant; step is not a homogeneous cyclic walk");
    }
    return diag;
}

struct Eigenpair2 {
    complex center;
    complex eps;
};

Eigenpair2 split(const Matrix2c &m) {
    const complex w = (m(0, 0) + m(1, 1)) / 2.0;
    const complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return {w, std::sqrt(w * w - det)};
}

bool near_negative_axis(complex z) { return z.real() < 0.0 && std::abs(z.imag()) <= 1e-13 * std::abs(z); }

void check_overflow(const Matrix2c &m, double t, std::size_t k) {
    const Eigenpair2 e = split(m);
    const double growth = std::max(std::abs(std::log(std::abs(e.center + e.eps))),
                                   std::abs(std::log(std::abs(e.center - e.eps))));
    if (t * growth > std::log(kOverflowLimit)) {
        throw NumericalError("spectral propagator: entries for wavenumber " + std::to_string(k) +
                             " exceed 1e300 at t = " + std::to_string(t));
    }
}

// log(1 + z) accurate for small |z|.
complex log1p(complex z) {
    const complex u = 1.0 + z;
    if (u == 1.0) {
        return z;
    }
    return std::log(u) * z / (u - 1.0);
}

// exp(z) - 1 accurate for small |z|.
complex expm1(complex z) {
    const double s = std::sin(z.imag() / 2.0);
    return {std::expm1(z.real()) * std::cos(z.imag()) - 2.0 * s * s, std::exp(z.real()) * std::sin(z.imag())};
}

bool close_pair(complex a, complex b) { return std::abs(a - b) <= 0.5 * std::abs(b); }

// log(a) - log(b) on the branch continuous at b when the pair is close, so a
// pair straddling the cut is not split by 2 pi i; otherwise the difference of
// principal logarithms.
complex log_difference(complex a, complex b) {
    if (close_pair(a, b)) {
        return log1p((a - b) / b);
    }
    return principal_log(a) - principal_log(b);
}

void check_time(double t) {
    if (!std::isfinite(t) || t < 0.0) {
        throw ConstraintError("spectral propagator: t must be finite and >= 0, got " + std::to_string(t));
    }
}

}  // namespace

ComplexMatrix dft_matrix(std::size_t d) {
    require_positions(d, "dft_matrix");
    const auto n = static_cast<Index>(d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexMatrix f(n, n);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t x = 0; x < d; ++x) {
            f(static_cast<Index>(k), static_cast<Index>(x)) = norm * root_of_unity(d, k * x);
        }
    }
    return f;
}

complex principal_log(complex z) {
    if (z == 0.0) {
        throw NumericalError("principal_log: logarithm of zero");
    }
    if (near_negative_axis(z)) {
        return {std::log(std::abs(z)), std::numbers::pi};
    }
    return std::log(z);
}

ScalarFunction principal_power(double t) {
    return {
        [t](complex z) { return t == 0.0 ? complex(1.0) : std::exp(t * principal_log(z)); },
        [t](complex z) { return t == 0.0 ? complex(0.0) : t * std::exp((t - 1.0) * principal_log(z)); },
        [t](complex a, complex b) {
            if (t == 0.0) {
                return complex(0.0);
            }
            return std::exp(t * principal_log(b)) * expm1(t * log_difference(a, b)) / (a - b);
        },
    };
}

ScalarFunction principal_logarithm() {
    return {
        [](complex z) { return principal_log(z); },
        [](complex z) {
            if (z == 0.0) {
                throw NumericalError("principal_log: derivative at zero");
            }
            return 1.0 / z;
        },
        [](complex a, complex b) { return log_difference(a, b) / (a - b); },
    };
}

Matrix2c matrix_function_2x2(const Matrix2c &m, const ScalarFunction &f, double degenerate) {
    const Eigenpair2 e = split(m);
    const Matrix2c shifted = m - e.center * Matrix2c::Identity();
    if (f.divided_difference) {
        if (e.eps == 0.0) {
            return f.value(e.center) * Matrix2c::Identity() + f.derivative(e.center) * shifted;
        }
        // Reference eigenvalue on the upper side, matching principal_log on the cut.
        complex a = e.center + e.eps, b = e.center - e.eps;
        if (a.imag() > b.imag()) {
            std::swap(a, b);
        }
        const complex slope = f.divided_difference(a, b);
        const complex mean = close_pair(a, b) ? f.value(b) + slope * (a - b) / 2.0 : (f.value(a) + f.value(b)) / 2.0;
        return mean * Matrix2c::Identity() + slope * shifted;
    }
    if (std::abs(e.eps) < degenerate) {
        return f.value(e.center) * Matrix2c::Identity() + f.derivative(e.center) * shifted;
    }
    const complex fp = f.value(e.center + e.eps);
    const complex fm = f.value(e.center - e.eps);
    return (fp + fm) / 2.0 * Matrix2c::Identity() + (fp - fm) / (2.0 * e.eps) * shifted;
}

Matrix2c pdc_block(std::size_t d, std::size_t k, complex mu, complex nu) {
    const complex w = root_of_unity(d, k);
    const complex wc = std::conj(w);
    Matrix2c m;
    m << mu * w, nu * w, std::conj(nu) * wc, std::conj(mu) * wc;
    return m;
}

Matrix2c bs_block(std::size_t d, std::size_t k, complex tau, complex rho) {
    const complex w = root_of_unity(d, k);
    const complex wc = std::conj(w);
    Matrix2c m;
    m << tau * w, rho * w, -std::conj(rho) * wc, std::conj(tau) * wc;
    return m;
}

SpectralData spectral_data(std::size_t d, const CoinSpec &coin) {
    require_positions(d, "spectral_data");
    check_coin(coin);
    if (coin.is_composite()) {
        throw ConstraintError("spectral_data: composite coins have no closed form");
    }
    const auto n = static_cast<Index>(d);
    SpectralData out;
    out.omega.resize(n);
    out.exponent.resize(n);
    out.regime.resize(d);
    const bool pdc = std::holds_alternative<PdcCoin>(coin.variant);
    out.kind = pdc ? CoinKind::Pdc : CoinKind::Bs;
    for (std::size_t k = 0; k < d; ++k) {
        const auto i = static_cast<Index>(k);
        const complex w = root_of_unity(d, k);
        out.omega(i) = w;
        if (pdc) {
            const double re = (std::get<PdcCoin>(coin.variant).mu * w).real();
            const double disc = re * re - 1.0;
            if (disc >= 0.0) {
                out.exponent(i) = principal_log(complex(re + std::sqrt(disc), 0.0));
                out.regime[k] = Regime::Squeezing;
            } else {
                out.exponent(i) = complex(0.0, std::atan2(std::sqrt(-disc), re));
                out.regime[k] = Regime::Rotation;
            }
        } else {
            const double re = (std::get<BsCoin>(coin.variant).tau * w).real();
            out.exponent(i) = std::atan2(std::sqrt(std::max(0.0, 1.0 - re * re)), re);
            out.regime[k] = Regime::Rotation;
        }
    }
    return out;
}

BogoliubovTransform spectral_propagator_pdc(std::size_t d, complex mu, complex nu, double t) {
    require_positions(d, "spectral_propagator_pdc");
    check_coin({PdcCoin{mu, nu}});
    check_time(t);
    if (t == 0.0) {
        return BogoliubovTransform::identity(2 * d);
    }
    const auto n = static_cast<Index>(d);
    ComplexVector a_p(n), b_p(n), a_q(n), b_q(n);
    const ScalarFunction power = principal_power(t);
    for (std::size_t k = 0; k < d; ++k) {
        const Matrix2c m = pdc_block(d, k, mu, nu);
        check_overflow(m, t, k);
        const Matrix2c p = matrix_function_2x2(m, power);
        const auto i = static_cast<Index>(k);
        a_p(i) = p(0, 0);
        b_p(i) = p(0, 1);
        a_q(i) = std::conj(p(1, 1));
        b_q(i) = std::conj(p(1, 0));
    }
    ComplexMatrix u = ComplexMatrix::Zero(2 * n, 2 * n);
    ComplexMatrix v = ComplexMatrix::Zero(2 * n, 2 * n);
    u.topLeftCorner(n, n) = circulant(a_p, Sandwich::Forward);
    u.bottomRightCorner(n, n) = circulant(a_q, Sandwich::Backward);
    v.topRightCorner(n, n) = circulant(b_p, Sandwich::Forward);
    v.bottomLeftCorner(n, n) = circulant(b_q, Sandwich::Backward);
    return {std::move(u), std::move(v)};
}

BogoliubovTransform spectral_propagator_bs(std::size_t d, complex tau, complex rho, double t) {
    require_positions(d, "spectral_propagator_bs");
    check_coin({BsCoin{tau, rho}});
    check_time(t);
    if (t == 0.0) {
        return BogoliubovTransform::identity(2 * d);
    }
    const auto n = static_cast<Index>(d);
    ComplexVector blocks[2][2];
    for (auto &row : blocks) {
        for (auto &b : row) {
            b.resize(n);
        }
    }
    const ScalarFunction power = principal_power(t);
    for (std::size_t k = 0; k < d; ++k) {
        const Matrix2c p = matrix_function_2x2(bs_block(d, k, tau, rho), power);
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                blocks[r][c](static_cast<Index>(k)) = p(r, c);
            }
        }
    }
    ComplexMatrix u(2 * n, 2 * n);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            u.block(r * n, c * n, n, n) = circulant(blocks[r][c], Sandwich::Forward);
        }
    }
    return {std::move(u), ComplexMatrix::Zero(2 * n, 2 * n)};
}

bool spectral_supported(const CoinSpec &coin) { return !coin.is_composite(); }

BogoliubovTransform spectral_propagator(std::size_t d, const CoinSpec &coin, double t) {
    if (const auto *p = std::get_if<PdcCoin>(&coin.variant)) {
        return spectral_propagator_pdc(d, p->mu, p->nu, t);
    }
    if (const auto *b = std::get_if<BsCoin>(&coin.variant)) {
        return spectral_propagator_bs(d, b->tau, b->rho, t);
    }
    throw ConstraintError("spectral propagator: composite coins need the dense engine");
}

BogoliubovTransform evolve_dense(const BogoliubovTransform &step, std::size_t t) {
    BogoliubovTransform total = BogoliubovTransform::identity(step.modes());
    for (std::size_t i = 0; i < t; ++i) {
        total = compose(step, total);
    }
    return total;
}

Propagation propagate(std::size_t d, const CoinSpec &coin, double t, Engine engine) {
    if (engine == Engine::Spectral) {
        return {spectral_propagator(d, coin, t), Engine::Spectral};
    }
    if (!std::isfinite(t) || t < 0.0 || std::floor(t) != t) {
        throw ConstraintError("dense engine: t must be a nonnegative integer, got " + std::to_string(t));
    }
    return {evolve_dense(single_step(d, coin), static_cast<std::size_t>(t)), Engine::Dense};
}

Generator generator(const BogoliubovTransform &step) {
    const std::size_t modes = step.modes();
    if (modes % 2 != 0 || modes < 4) {
        throw DimensionError("generator: expected 2d modes with d >= 2, got " + std::to_string(modes));
    }
    const std::size_t d = modes / 2;
    const auto n = static_cast<Index>(d);
    const ComplexMatrix f = dft_matrix(d);
    const ComplexMatrix &u = step.u();
    const ComplexMatrix &v = step.v();
    const double scale = std::max({1.0, max_abs(u), max_abs(v)});
    auto vanishes = [&](const ComplexMatrix &m) { return max_abs(m) <= 1e-12 * scale; };
    auto blk = [n](const ComplexMatrix &m, int r, int c) -> ComplexMatrix { return m.block(r * n, c * n, n, n); };

    const bool bs_family = vanishes(v);
    const bool pdc_family = vanishes(blk(u, 0, 1)) && vanishes(blk(u, 1, 0)) && vanishes(blk(v, 0, 0)) &&
                            vanishes(blk(v, 1, 1));
    if (!bs_family && !pdc_family) {
        throw ConstraintError("generator: step does not have the PDC or BS walk block structure");
    }

    // Per-k 2x2 blocks in the Fourier domain.
    std::vector<Matrix2c> blocks(d);
    if (bs_family) {
        ComplexVector p[2][2];
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                p[r][c] = spectrum_of(blk(u, r, c), Sandwich::Forward, f, "U");
            }
        }
        for (std::size_t k = 0; k < d; ++k) {
            const auto i = static_cast<Index>(k);
            blocks[k] << p[0][0](i), p[0][1](i), p[1][0](i), p[1][1](i);
        }
    } else {
        const ComplexVector a_p = spectrum_of(blk(u, 0, 0), Sandwich::Forward, f, "U++");
        const ComplexVector b_p = spectrum_of(blk(v, 0, 1), Sandwich::Forward, f, "V+-");
        const ComplexVector a_q = spectrum_of(blk(u, 1, 1), Sandwich::Backward, f, "U--");
        const ComplexVector b_q = spectrum_of(blk(v, 1, 0), Sandwich::Backward, f, "V-+");
        for (std::size_t k = 0; k < d; ++k) {
            const auto i = static_cast<Index>(k);
            blocks[k] << a_p(i), b_p(i), std::conj(b_q(i)), std::conj(a_q(i));
        }
    }

    Generator out;
    ComplexVector l[2][2];
    for (auto &row : l) {
        for (auto &b : row) {
            b.resize(n);
        }
    }
    const ScalarFunction log_fn = principal_logarithm();
    for (std::size_t k = 0; k < d; ++k) {
        const Eigenpair2 e = split(blocks[k]);
        if (near_negative_axis(e.center + e.eps) || near_negative_axis(e.center - e.eps)) {
            out.branch_cut_wavenumbers.push_back(k);
        }
        const Matrix2c lk = matrix_function_2x2(blocks[k], log_fn);
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                l[r][c](static_cast<Index>(k)) = lk(r, c);
            }
        }
    }

    ComplexMatrix g = ComplexMatrix::Zero(4 * n, 4 * n);
    auto put = [&](int r, int c, const ComplexMatrix &m) { g.block(r * n, c * n, n, n) = m; };
    if (bs_family) {
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                const ComplexMatrix m = circulant(l[r][c], Sandwich::Forward);
                put(r, c, m);
                put(2 + r, 2 + c, m.conjugate());
            }
        }
    } else {
        // The (a+, a-^dagger) pair carries the principal logarithm; the
        // (a-, a+^dagger) pair is its conjugate partner.
        put(0, 0, circulant(l[0][0], Sandwich::Forward));
        put(0, 3, circulant(l[0][1], Sandwich::Forward));
        put(3, 0, circulant(l[1][0], Sandwich::Forward));
        put(3, 3, circulant(l[1][1], Sandwich::Forward));
        put(1, 1, circulant(l[1][1].conjugate(), Sandwich::Backward));
        put(1, 2, circulant(l[1][0].conjugate(), Sandwich::Backward));
        put(2, 1, circulant(l[0][1].conjugate(), Sandwich::Backward));
        put(2, 2, circulant(l[0][0].conjugate(), Sandwich::Backward));
    }
    out.g = std::move(g);
    return out;
}

}  // namespace dgqw
