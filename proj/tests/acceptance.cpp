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

// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "dgqw/observables.hpp"
#include "dgqw/oracle.hpp"
#include "dgqw/propagator.hpp"
#include "dgqw/verify.hpp"
#include "dgqw/walk.hpp"

using namespace dgqw;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kXi = std::log(kSqrt2 + 1.0);
const CoinSpec kPdc{PdcCoin{kSqrt2, 1.0}};
const CoinSpec kHadamard{BsCoin{1.0 / kSqrt2, 1.0 / kSqrt2}};

struct Outcome {
    bool passed = true;
    std::string detail;
};

double diff(const BogoliubovTransform &a, const BogoliubovTransform &b) {
    return std::max(max_abs(ComplexMatrix(a.u() - b.u())), max_abs(ComplexMatrix(a.v() - b.v())));
}

double min_eig(const RealMatrix &m) { return Eigen::SelfAdjointEigenSolver<RealMatrix>(m).eigenvalues().minCoeff(); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

ComplexVector reference_input() {
    ComplexVector a = ComplexVector::Zero(22);
    a(0) = std::sqrt(10.0);
    a(11) = complex(0.0, std::sqrt(10.0));
    return a;
}

Outcome squeezing_slope() {
    const double target = 0.868589;
    double worst = 0.0;
    for (double xi : {0.5, 1.0, 2.0, 3.0}) {
        const double s = covariance_matrix(pdc_coin(1, std::cosh(xi), std::sinh(xi))).squeezing_db;
        worst = std::max(worst, std::abs(s / xi - target));
    }
    return {worst <= 1e-6, "max |s/xi - 0.868589| = " + fmt(worst) + " (tol 1e-6)"};
}

Outcome splitting_ratio_check() {
    const double at_ref = std::abs(splitting_ratio(coin_from_parameters(CoinKind::Pdc, kXi)) - 0.5);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double xi = 0.05 * i;
        const double t = std::tanh(xi);
        worst = std::max(worst, std::abs(splitting_ratio(coin_from_parameters(CoinKind::Pdc, xi)) - t * t));
    }
    return {at_ref <= 1e-12 && worst <= 1e-12,
            "|R(ln(1+sqrt2)) - 1/2| = " + fmt(at_ref) + ", max |R - tanh^2| = " + fmt(worst) + " (tol 1e-12)"};
}

Outcome engine_equivalence() {
    double worst = 0.0;
    for (std::size_t d : {3, 5, 11}) {
        for (const CoinSpec &coin : {kPdc, kHadamard}) {
            const BogoliubovTransform step = single_step(d, coin);
            for (std::size_t t = 0; t <= 10; ++t) {
                worst = std::max(worst, diff(spectral_propagator(d, coin, static_cast<double>(t)), evolve_dense(step, t)));
            }
        }
    }
    return {worst < 1e-9, "max |T_spectral - T_dense| = " + fmt(worst) + " (tol 1e-9)"};
}

Outcome linear_classicality() {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dd(2, 11), tt(0, 10);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));
    std::normal_distribution<double> g(0.0, 2.0);
    double g_worst = 0.0, c_worst = 0.0, m_worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto d = static_cast<std::size_t>(dd(rng));
        const auto t = static_cast<double>(tt(rng));
        const double theta = angle(rng);
        const BogoliubovTransform s = spectral_propagator(d, {BsCoin{std::cos(theta), std::sin(theta)}}, t);
        ComplexVector alpha(static_cast<Eigen::Index>(2 * d));
        for (auto &a : alpha) {
            a = complex(g(rng), g(rng));
        }
        g_worst = std::max(g_worst, std::abs(entanglement_bound(s)));
        c_worst = std::max(c_worst, std::abs(covariance_matrix(s).min_eigenvalue - 0.5));
        m_worst = std::max(m_worst, max_abs(photon_moment_matrix(s, alpha)));
    }
    return {g_worst <= 1e-12 && c_worst <= 1e-10 && m_worst <= 1e-10,
            "max g_min = " + fmt(g_worst) + " (tol 1e-12), max |minC - 1/2| = " + fmt(c_worst) +
                " (tol 1e-10), max |M| = " + fmt(m_worst) + " (tol 1e-10)"};
}

Outcome fock_agreement() {
    const double xi = 0.5;
    const FockState state = two_mode_squeezed_vacuum(xi, 40);
    const FockExpectations f = fock_expectations(state);
    const BogoliubovTransform coin = pdc_coin(1, std::cosh(xi), std::sinh(xi));
    const RealMatrix m = photon_moment_matrix(coin, ComplexVector::Zero(2));
    const double s2 = std::sinh(xi) * std::sinh(xi);
    const double n_err = (f.means.array() - s2).abs().maxCoeff();
    const double m_err = max_abs(RealMatrix(f.moments - m));
    const double eig_err = std::abs(min_eig(f.moments) - min_eig(m));
    double off = 0.0;
    for (Eigen::Index a = 0; a < state.amplitudes.rows(); ++a) {
        for (Eigen::Index b = 0; b < state.amplitudes.cols(); ++b) {
            if (a != b) {
                off = std::max(off, std::abs(state.amplitudes(a, b)));
            }
        }
    }
    const bool negative = min_eig(m) < 0.0 && min_eig(f.moments) < 0.0;
    return {n_err <= 1e-6 && m_err <= 1e-6 && eig_err <= 1e-6 && off <= 1e-12 && negative,
            "<n> err " + fmt(n_err) + ", M err " + fmt(m_err) + ", min-eig err " + fmt(eig_err) +
                " (tol 1e-6), off-diagonal amplitude " + fmt(off) + " (tol 1e-12)"};
}

Outcome driven_walk() {
    const ModeLayout layout(11);
    const ComplexVector alpha = reference_input();
    bool ok = true;
    double prev_g = -1.0, prev_e = -1.0, prev_a = 0.0, e1 = 0.0, worst_coin = -1e300, worst_mp = -1e300;
    for (int t = 0; t <= 10; ++t) {
        const ObservableReport r = evaluate(spectral_propagator(11, kPdc, t), alpha, layout, t);
        ok = ok && r.g_min > prev_g && r.excess_noise > prev_e && *r.amplification > prev_a;
        prev_g = r.g_min;
        prev_e = r.excess_noise;
        prev_a = *r.amplification;
        if (t == 1) {
            e1 = r.excess_noise;
        }
        if (t >= 1) {
            worst_coin = std::max(worst_coin, r.coin_squeezing_db);
            worst_mp = std::max(worst_mp, r.coin_traced_min_eigenvalue);
        }
    }
    ok = ok && std::abs(e1 - 22.0) <= 1e-9 && worst_coin <= 0.0 && worst_mp < 0.0;
    return {ok, std::string("monotone g_min/noise/amplification ") + (ok ? "yes" : "check") +
                    ", noise(1) - 22 = " + fmt(e1 - 22.0) + " (tol 1e-9), max coin squeezing dB (t>=1) " +
                    fmt(worst_coin) + ", max min-eig M' (t>=1) " + fmt(worst_mp)};
}

Outcome distributions() {
    const ModeLayout layout(11);
    ComplexVector alpha = ComplexVector::Zero(22);
    alpha(0) = std::sqrt(10.0);
    alpha(11) = complex(0.0, -std::sqrt(10.0));
    const double h = 1.0 / kSqrt2;
    double worst = 0.0;
    std::vector<double> cv;
    for (std::size_t t = 0; t <= 15; ++t) {
        const RealVector p = intensity_distribution(spectral_propagator(11, kHadamard, static_cast<double>(t)), alpha,
                                                    layout);
        const ComplexVector psi = single_walker_recursion(11, h, h, t, alpha / alpha.norm());
        const RealVector q = psi.head(11).cwiseAbs2() + psi.tail(11).cwiseAbs2();
        worst = std::max(worst, (p - q).cwiseAbs().maxCoeff());
        cv.push_back(circular_variance(p));
    }
    bool oscillates = false;
    for (std::size_t i = 1; i < cv.size(); ++i) {
        oscillates = oscillates || cv[i] < cv[i - 1];
    }
    bool nondecreasing = true;
    double previous = -1.0, last = 0.0;
    for (std::size_t t = 0; t <= 200; ++t) {
        last = circular_variance(classical_random_walk(11, t, 0.5));
        nondecreasing = nondecreasing && last >= previous - 1e-15;
        previous = last;
    }
    return {worst <= 1e-10 && oscillates && nondecreasing && last > 0.99,
            "max |P - P_oracle| = " + fmt(worst) + " (tol 1e-10), random-walk CV(200) = " + fmt(last) +
                (nondecreasing ? " nondecreasing" : " DECREASES") +
                (oscillates ? ", coherent CV oscillates" : ", coherent CV monotone")};
}

Outcome continuous_time() {
    double frac = 0.0, integer = 0.0;
    for (const CoinSpec &coin : {kPdc, kHadamard}) {
        const BogoliubovTransform step = single_step(11, coin);
        const Generator g = generator(step);
        auto exp_at = [&](double t) {
            const ComplexMatrix scaled = t * g.g;
            return BogoliubovTransform::from_doubled(scaled.exp());
        };
        for (double t : {0.5, 1.5, 2.5}) {
            frac = std::max(frac, diff(exp_at(t), spectral_propagator(11, coin, t)));
        }
        for (std::size_t t = 0; t <= 10; ++t) {
            integer = std::max(integer, diff(exp_at(static_cast<double>(t)), evolve_dense(step, t)));
        }
    }
    return {frac <= 1e-8 && integer <= 1e-9, "max |exp(tG) - T(t)| fractional " + fmt(frac) + " (tol 1e-8), integer " +
                                                 fmt(integer) + " (tol 1e-9)"};
}

Outcome invariant_suite() {
    const std::vector<CheckResult> results = run_verify({});
    bool all = true;
    double noise = -1.0;
    std::string failed;
    for (const CheckResult &r : results) {
        all = all && r.passed;
        if (!r.passed) {
            failed += " " + r.name;
        }
        if (r.name == "excess_noise_identity") {
            noise = r.residual;
        }
    }
    const bool ok = all && noise >= 0.0 && noise < 1e-8;
    return {ok, std::to_string(results.size()) + " checks" + (all ? " all pass" : ", failing:" + failed) +
                    ", excess-noise residual " + fmt(noise) + " (tol 1e-8)"};
}

struct Criterion {
    int id;
    const char *name;
    double time_limit;  // seconds, 0 = none
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "squeezing slope", 1.0, squeezing_slope},
        {2, "splitting ratio", 0.0, splitting_ratio_check},
        {3, "engine equivalence", 5.0, engine_equivalence},
        {4, "classicality of linear walks", 0.0, linear_classicality},
        {5, "Fock-oracle agreement", 0.0, fock_agreement},
        {6, "driven walk observables", 10.0, driven_walk},
        {7, "coherent and random walk distributions", 0.0, distributions},
        {8, "continuous-time consistency", 0.0, continuous_time},
        {9, "invariant suite", 60.0, invariant_suite},
    };
    int failures = 0;
    for (const Criterion &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool passed = o.passed;
        std::string timing = fmt(seconds) + " s";
        if (c.time_limit > 0.0) {
            timing += " (limit " + fmt(c.time_limit) + " s)";
            passed = passed && seconds < c.time_limit;
        }
        std::printf("%s %d %s: %s; %s\n", passed ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), timing.c_str());
        failures += passed ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
