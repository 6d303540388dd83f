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

#include "dgqw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "dgqw/bogoliubov.hpp"
#include "dgqw/kernels.hpp"
#include "dgqw/mode_layout.hpp"
#include "dgqw/observables.hpp"
#include "dgqw/oracle.hpp"
#include "dgqw/propagator.hpp"
#include "dgqw/walk.hpp"

namespace dgqw {
namespace {

const std::size_t kSizes[] = {3, 5, 11};

CoinSpec pdc_reference() { return {PdcCoin{std::numbers::sqrt2, 1.0}}; }
CoinSpec hadamard() { return {BsCoin{1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2}}; }

// Validity residual of a transform, relative to its natural scale.
double validity_residual(const BogoliubovTransform &t, double tol, ToleranceMode mode) {
    const ValidityReport r = validate(t, {tol, mode});
    return std::max(r.symmetry_residual, r.unitarity_residual) * (tol / r.threshold);
}

BogoliubovTransform maybe_faulty(const BogoliubovTransform &t, const VerifyOptions &options) {
    if (!options.inject_fault) {
        return t;
    }
    ComplexMatrix v = t.v();
    v(0, 0) += options.perturbation;
    return {t.u(), std::move(v)};
}

CheckResult timed(const std::string &name, double threshold, const std::function<double()> &body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    r.threshold = threshold;
    try {
        r.residual = body();
        r.passed = std::isfinite(r.residual) && r.residual <= threshold;
    } catch (const std::exception &) {
        r.residual = std::numeric_limits<double>::infinity();
        r.passed = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

ComplexVector random_amplitudes(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexVector a(static_cast<Eigen::Index>(n));
    for (auto &x : a) {
        x = complex(g(rng), g(rng));
    }
    return a;
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions &options) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(options.seed);

    out.push_back(timed("validate_constructed", 1e-12, [&] {
        double worst = 0.0;
        for (std::size_t d : kSizes) {
            const CoinSpec composite{CompositeCoin{{pdc_reference(), hadamard()}}};
            for (const BogoliubovTransform &t :
                 {step_transform(d), coin_transform(d, pdc_reference()), coin_transform(d, hadamard()),
                  coin_transform(d, composite)}) {
                worst = std::max(worst, validity_residual(maybe_faulty(t, options), 1e-12, ToleranceMode::Relative));
            }
        }
        return worst;
    }));

    out.push_back(timed("validate_composed", 1e-10, [&] {
        double worst = 0.0;
        for (std::size_t d : kSizes) {
            const BogoliubovTransform t = evolve_dense(single_step(d, pdc_reference()), 3);
            worst = std::max(worst, validity_residual(maybe_faulty(t, options), 1e-10, ToleranceMode::Relative));
            const BogoliubovTransform round = compose(inverse(t), t);
            const BogoliubovTransform id = BogoliubovTransform::identity(t.modes());
            worst = std::max({worst, max_abs(ComplexMatrix(round.u() - id.u())), max_abs(round.v())});
        }
        return worst;
    }));

    out.push_back(timed("validate_propagated", 1e-8, [&] {
        double worst = 0.0;
        for (std::size_t d : kSizes) {
            for (const CoinSpec &coin : {pdc_reference(), hadamard()}) {
                for (double t : {0.0, 0.5, 1.0, 2.5, 5.0, 10.0, 20.0}) {
                    const BogoliubovTransform p = maybe_faulty(spectral_propagator(d, coin, t), options);
                    worst = std::max(worst, validity_residual(p, 1e-8, ToleranceMode::Relative));
                }
            }
        }
        return worst;
    }));

    out.push_back(timed("engine_equivalence", 1e-9, [&] {
        double worst = 0.0;
        for (std::size_t d : kSizes) {
            for (const CoinSpec &coin : {pdc_reference(), hadamard()}) {
                const BogoliubovTransform step = single_step(d, coin);
                BogoliubovTransform dense = BogoliubovTransform::identity(2 * d);
                for (std::size_t t = 0; t <= 10; ++t) {
                    const BogoliubovTransform s = spectral_propagator(d, coin, static_cast<double>(t));
                    worst = std::max({worst, max_abs(ComplexMatrix(s.u() - dense.u())),
                                      max_abs(ComplexMatrix(s.v() - dense.v()))});
                    dense = compose(step, dense);
                }
            }
        }
        return worst;
    }));

    out.push_back(timed("semigroup", 1e-9, [&] {
        double worst = 0.0;
        for (std::size_t d : kSizes) {
            for (const CoinSpec &coin : {pdc_reference(), hadamard()}) {
                for (auto [t1, t2] : {std::pair{0.5, 1.0}, std::pair{1.25, 1.25}, std::pair{0.3, 2.2}}) {
                    const BogoliubovTransform whole = spectral_propagator(d, coin, t1 + t2);
                    const BogoliubovTransform parts =
                        compose(spectral_propagator(d, coin, t2), spectral_propagator(d, coin, t1));
                    worst = std::max({worst, max_abs(ComplexMatrix(whole.u() - parts.u())),
                                      max_abs(ComplexMatrix(whole.v() - parts.v()))});
                }
            }
        }
        return worst;
    }));

    out.push_back(timed("fock_oracle", 1e-6, [&] {
        double worst = 0.0;
        for (double xi : {0.1, 0.5, 1.0}) {
            const FockExpectations f = fock_expectations(two_mode_squeezed_vacuum(xi));
            const BogoliubovTransform coin = pdc_coin(1, std::cosh(xi), std::sinh(xi));
            const ComplexVector vac = ComplexVector::Zero(2);
            const RealVector n = photon_means(coin, vac);
            const RealMatrix m = photon_moment_matrix(coin, vac);
            const RealMatrix c = covariance_matrix(coin).c;
            worst = std::max({worst, (n - f.means).cwiseAbs().maxCoeff(), (m - f.moments).cwiseAbs().maxCoeff(),
                              (c - f.covariance).cwiseAbs().maxCoeff()});
        }
        return worst;
    }));

    out.push_back(timed("classical_linear_walks", 1e-10, [&] {
        double worst = 0.0;
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        std::uniform_int_distribution<std::size_t> size(2, 11);
        std::uniform_int_distribution<std::size_t> steps(0, 10);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t d = size(rng);
            const double theta = angle(rng);
            const BogoliubovTransform t =
                evolve_dense(single_step(d, coin_from_parameters(CoinKind::Bs, theta)), steps(rng));
            const ComplexVector alpha = random_amplitudes(2 * d, rng);
            const CovarianceReport c = covariance_matrix(t);
            worst = std::max({worst, std::abs(entanglement_bound(t)), std::abs(c.min_eigenvalue - 0.5),
                              max_abs(photon_moment_matrix(t, alpha))});
        }
        return worst;
    }));

    out.push_back(timed("excess_noise_identity", 1e-8, [&] {
        double worst = 0.0;
        // Up to t = 5 the photon totals stay below 1e4. Past about 1e7 the
        // rounding of either sum alone exceeds the absolute budget.
        for (std::size_t d : kSizes) {
            const ComplexVector inputs[] = {random_amplitudes(2 * d, rng),
                                            ComplexVector::Zero(static_cast<Eigen::Index>(2 * d))};
            for (double t : {0.0, 1.0, 2.5, 4.0, 5.0}) {
                const BogoliubovTransform p = spectral_propagator(d, pdc_reference(), t);
                for (const ComplexVector &alpha : inputs) {
                    const ComplexVector beta = apply_amplitudes(p, alpha);
                    const double from_means = (photon_means(p, alpha) - RealVector(beta.cwiseAbs2())).sum();
                    worst = std::max(worst, std::abs(from_means - p.v().squaredNorm()));
                }
            }
        }
        return worst;
    }));

    out.push_back(timed("polar_roundtrip", 1e-9, [&] {
        double worst = 0.0;
        for (std::size_t d : kSizes) {
            const BogoliubovTransform t =
                evolve_dense(single_step(d, {CompositeCoin{{pdc_reference(), hadamard()}}}), 2);
            const BogoliubovTransform r = reconstruct(polar_decompose(t));
            worst = std::max({worst, max_abs(ComplexMatrix(r.u() - t.u())), max_abs(ComplexMatrix(r.v() - t.v()))});
        }
        return worst;
    }));

    out.push_back(timed("kernel_equivalence", 1e-12, [&] {
        const kernels::KernelSet *fast = kernels::avx2_kernels();
        if (fast == nullptr) {
            return 0.0;
        }
        const kernels::KernelSet &ref = kernels::scalar_kernels();
        double worst = 0.0;
        for (std::size_t n : {1, 3, 7, 22}) {
            const ComplexVector a = random_amplitudes(n * n, rng);
            const ComplexVector b = random_amplitudes(n * n, rng);
            ComplexVector c1(static_cast<Eigen::Index>(n * n)), c2(static_cast<Eigen::Index>(n * n));
            ref.cgemm(n, n, n, a.data(), b.data(), c1.data());
            fast->cgemm(n, n, n, a.data(), b.data(), c2.data());
            const double scale = std::max(1.0, c1.cwiseAbs().maxCoeff());
            worst = std::max(worst, (c1 - c2).cwiseAbs().maxCoeff() / scale);
        }
        return worst;
    }));

    return out;
}

}  // namespace dgqw
