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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "dgqw/errors.hpp"
#include "dgqw/observables.hpp"
#include "dgqw/oracle.hpp"
#include "dgqw/propagator.hpp"
#include "test_support.hpp"

using namespace dgqw;
using namespace dgqw::testing;

namespace {

const double kSqrt10 = std::sqrt(10.0);

ComplexVector reference_input(const ModeLayout &layout) {
    ComplexVector alpha = ComplexVector::Zero(static_cast<Eigen::Index>(layout.modes()));
    alpha(static_cast<Eigen::Index>(layout.index(0, Coin::Plus))) = kSqrt10;
    alpha(static_cast<Eigen::Index>(layout.index(0, Coin::Minus))) = kSqrt10 * I;
    return alpha;
}

ComplexVector hadamard_input(const ModeLayout &layout) {
    ComplexVector alpha = ComplexVector::Zero(static_cast<Eigen::Index>(layout.modes()));
    alpha(static_cast<Eigen::Index>(layout.index(0, Coin::Plus))) = kSqrt10;
    alpha(static_cast<Eigen::Index>(layout.index(0, Coin::Minus))) = -kSqrt10 * I;
    return alpha;
}

BogoliubovTransform reference_walk(double t) { return spectral_propagator(11, pdc_reference(), t); }

double min_eig(const RealMatrix &m) { return Eigen::SelfAdjointEigenSolver<RealMatrix>(m).eigenvalues().minCoeff(); }

BogoliubovTransform random_bs_walk(std::mt19937_64 &rng, std::size_t &d, std::size_t &t) {
    std::uniform_int_distribution<int> dd(2, 11), tt(0, 10);
    std::uniform_real_distribution<double> angle(-3.2, 3.2);
    d = static_cast<std::size_t>(dd(rng));
    t = static_cast<std::size_t>(tt(rng));
    const double theta = angle(rng);
    return evolve_dense(single_step(d, {BsCoin{std::cos(theta), std::sin(theta)}}), t);
}

}  // namespace

TEST(MomentBlocks, Identity) {
    const MomentBlocks b = moment_blocks(BogoliubovTransform::identity(6));
    EXPECT_EQ(max_diff(b.x, ComplexMatrix(ComplexMatrix::Identity(6, 6))), 0.0);
    EXPECT_EQ(max_abs(b.y), 0.0);
    EXPECT_EQ(max_abs(b.z), 0.0);
}

TEST(MomentBlocks, SinglePdcCoin) {
    const double xi = 0.7, mu = std::cosh(xi), nu = std::sinh(xi);
    const std::size_t d = 3;
    const MomentBlocks b = moment_blocks(pdc_coin(d, mu, nu));
    EXPECT_LT(max_diff(b.y, ComplexMatrix(nu * nu * ComplexMatrix::Identity(6, 6))), 1e-15);
    ComplexMatrix z = ComplexMatrix::Zero(6, 6);
    z.topRightCorner(3, 3) = mu * nu * ComplexMatrix::Identity(3, 3);
    z.bottomLeftCorner(3, 3) = mu * nu * ComplexMatrix::Identity(3, 3);
    EXPECT_LT(max_diff(b.z, z), 1e-15);
    EXPECT_EQ(b.z.diagonal().cwiseAbs().maxCoeff(), 0.0);
}

TEST(MomentBlocks, StructureOnWalks) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const BogoliubovTransform t = random_walk_transform(5, rng, 10);
        const MomentBlocks b = moment_blocks(t);
        EXPECT_EQ(max_diff(b.x, ComplexMatrix(b.x.adjoint())), 0.0);
        EXPECT_EQ(max_diff(b.y, ComplexMatrix(b.y.adjoint())), 0.0);
        EXPECT_EQ(max_diff(b.z, ComplexMatrix(b.z.transpose())), 0.0);
        const double scale = std::max(1.0, max_abs(b.x));
        EXPECT_LT(max_diff(ComplexMatrix(b.x - b.y.conjugate()), ComplexMatrix(ComplexMatrix::Identity(10, 10))),
                  1e-10 * scale);
    }
    const MomentBlocks f = moment_blocks(reference_walk(10.0));
    EXPECT_LT(max_diff(ComplexMatrix(f.x - f.y.conjugate()), ComplexMatrix(ComplexMatrix::Identity(22, 22))),
              1e-10 * max_abs(f.x));
}

TEST(MomentBlocks, EntrywiseDefinitions) {
    std::mt19937_64 rng(8);
    const BogoliubovTransform t = random_walk_transform(3, rng);
    const MomentBlocks b = moment_blocks(t);
    const ComplexMatrix &u = t.u(), &v = t.v();
    for (Eigen::Index i = 0; i < 6; ++i) {
        for (Eigen::Index k = 0; k < 6; ++k) {
            complex x = 0.0, y = 0.0, z = 0.0;
            for (Eigen::Index j = 0; j < 6; ++j) {
                x += u(i, j) * std::conj(u(k, j));
                y += std::conj(v(i, j)) * v(k, j);
                z += u(i, j) * v(k, j);
            }
            EXPECT_LT(std::abs(b.x(i, k) - x), 1e-12);
            EXPECT_LT(std::abs(b.y(i, k) - y), 1e-12);
            EXPECT_LT(std::abs(b.z(i, k) - z), 1e-12);
        }
    }
    EXPECT_LT(max_diff(b.vvh(), ComplexMatrix(v * v.adjoint())), 1e-12);
}

TEST(Displacement, ZeroInput) {
    const RealVector q = displacement_vector(reference_walk(3.0), ComplexVector::Zero(22));
    EXPECT_EQ(q.size(), 44);
    EXPECT_EQ(q.cwiseAbs().maxCoeff(), 0.0);
}

TEST(Displacement, TwoPathsAgreeForReferenceInput) {
    const ModeLayout layout(11);
    for (double t : {0.0, 1.0, 4.0, 7.5}) {
        const BogoliubovTransform s = reference_walk(t);
        const ComplexVector alpha = reference_input(layout);
        const RealVector direct = displacement_vector(s, alpha);
        const RealVector sym = displacement_vector_symplectic(s, alpha);
        const ComplexVector beta = apply_amplitudes(s, alpha);
        EXPECT_LT((direct - sym).cwiseAbs().maxCoeff(), 1e-10 * std::max(1.0, direct.cwiseAbs().maxCoeff())) << t;
        EXPECT_LT((direct.head(22) - kSqrt2 * beta.real()).cwiseAbs().maxCoeff(), 1e-12 * beta.cwiseAbs().maxCoeff());
        EXPECT_LT((direct.tail(22) - kSqrt2 * beta.imag()).cwiseAbs().maxCoeff(), 1e-12 * beta.cwiseAbs().maxCoeff());
    }
}

TEST(Displacement, LinearWalkRealInput) {
    std::mt19937_64 rng(2);
    const BogoliubovTransform s = spectral_propagator(5, {BsCoin{std::polar(0.8, 0.4), 0.6}}, 3.0);
    const ComplexVector alpha = random_vector(10, rng).real().cast<complex>();
    const RealVector q = displacement_vector_symplectic(s, alpha);
    EXPECT_LT((q.tail(10) - kSqrt2 * ComplexVector(s.u() * alpha).imag()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_THROW(displacement_vector(s, ComplexVector::Zero(3)), DimensionError);
}

TEST(Covariance, LinearWalkIsVacuumLevel) {
    const CovarianceReport r = covariance_matrix(spectral_propagator(7, hadamard(), 6.0));
    EXPECT_EQ(max_diff(r.c, RealMatrix(RealMatrix::Identity(28, 28) / 2.0)), 0.0);
    EXPECT_EQ(r.squeezing_db, 0.0);
}

TEST(Covariance, TwoModeSqueezerSpectrum) {
    for (double xi : {0.1, 0.5, 1.0, 2.0}) {
        const CovarianceReport r = covariance_matrix(pdc_coin(1, std::cosh(xi), std::sinh(xi)));
        EXPECT_NEAR(r.min_eigenvalue, std::exp(-2.0 * xi) / 2.0, 1e-12) << xi;
        EXPECT_NEAR(r.max_eigenvalue, std::exp(2.0 * xi) / 2.0, 1e-12 * std::exp(2.0 * xi)) << xi;
        EXPECT_NEAR(r.min_eigenvalue * r.max_eigenvalue, 0.25, 1e-10) << xi;
    }
}

TEST(Covariance, MatchesQuadratureTransform) {
    // C = 1/2 T' T'^T for a coherent input.
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 4; ++trial) {
        const BogoliubovTransform t = random_walk_transform(4, rng);
        const RealMatrix tp = symplectic_matrix(t);
        const RealMatrix expected = 0.5 * tp * tp.transpose();
        const CovarianceReport r = covariance_matrix(t);
        EXPECT_LT(max_diff(r.c, expected), 1e-10 * std::max(1.0, max_abs(expected)));
    }
}

TEST(Covariance, PhysicalForAllTestedWalks) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        EXPECT_GE(covariance_matrix(random_walk_transform(4, rng, 6)).physicality, -1e-10);
    }
    for (double t : {1.0, 3.0, 5.0}) {
        const CovarianceReport r = covariance_matrix(reference_walk(t));
        EXPECT_GE(r.physicality, -1e-10 * r.max_eigenvalue) << t;
    }
}

TEST(Squeezing, VacuumLevelIsZero) { EXPECT_EQ(squeezing_db(RealMatrix(RealMatrix::Identity(4, 4) / 2.0)), 0.0); }

TEST(Squeezing, SinglePdcSlope) {
    const double slope = 2.0 * std::log10(std::exp(1.0));
    for (double xi : {0.25, 0.5, 1.0, 2.0, 3.0}) {
        const double s = covariance_matrix(pdc_coin(1, std::cosh(xi), std::sinh(xi))).squeezing_db;
        EXPECT_NEAR(s / xi, slope, 1e-10) << xi;
    }
    EXPECT_NEAR(slope, 0.868589, 1e-6);
}

TEST(Squeezing, RejectsAsymmetricInput) {
    RealMatrix c = RealMatrix::Identity(2, 2) / 2.0;
    c(0, 1) = 1e-3;
    EXPECT_THROW(squeezing_db(c), NumericalError);
}

TEST(Squeezing, ModeRestriction) {
    const RealMatrix c = covariance_matrix(pdc_coin(3, std::cosh(0.5), std::sinh(0.5))).c;
    // One mode alone is thermal, the pair (x,+),(x,-) is squeezed.
    EXPECT_LT(squeezing_db(c, {0}), 0.0);
    EXPECT_NEAR(squeezing_db(c, {0, 3}), 2.0 * std::log10(std::exp(1.0)) * 0.5, 1e-12);
    EXPECT_THROW(squeezing_db(c, {7}), DimensionError);
}

TEST(Squeezing, ReferenceWalkCoinBlockOnlyAntisqueezes) {
    const ModeLayout layout(11);
    for (double t = 1.0; t <= 10.0; t += 1.0) {
        const RealMatrix block = reduced_coin_covariance(covariance_matrix(reference_walk(t)).c, layout, 0);
        EXPECT_LE(squeezing_db(block), 0.0) << t;
    }
}

TEST(ReducedCoinCovariance, HomogeneousAcrossPositions) {
    const ModeLayout layout(11);
    for (double t : {1.0, 2.5, 6.0}) {
        const RealMatrix c = covariance_matrix(reference_walk(t)).c;
        const RealMatrix first = reduced_coin_covariance(c, layout, 0);
        for (std::size_t x = 1; x < 11; ++x) {
            EXPECT_LT(max_diff(reduced_coin_covariance(c, layout, x), first), 1e-12 * max_abs(first)) << x;
        }
    }
    EXPECT_THROW(reduced_coin_covariance(covariance_matrix(reference_walk(1.0)).c, layout, 11), DimensionError);
}

TEST(ReducedCoinCovariance, LinearWalkIsVacuum) {
    const ModeLayout layout(5);
    const RealMatrix block = reduced_coin_covariance(covariance_matrix(spectral_propagator(5, hadamard(), 4.0)).c, layout, 2);
    EXPECT_EQ(max_diff(block, RealMatrix(RealMatrix::Identity(4, 4) / 2.0)), 0.0);
}

TEST(ReducedCoinCovariance, FirstStepIsRelabeledCoin) {
    const std::size_t d = 5;
    const double xi = 0.6;
    const CoinSpec coin = coin_from_parameters(CoinKind::Pdc, xi);
    const RealMatrix c_coin = covariance_matrix(coin_transform(d, coin)).c;
    // The shift is a real permutation, acting identically on q and p.
    RealMatrix s = RealMatrix::Zero(20, 20);
    s.topLeftCorner(10, 10) = step_transform(d).u().real();
    s.bottomRightCorner(10, 10) = step_transform(d).u().real();
    const RealMatrix expected = s * c_coin * s.transpose();
    const RealMatrix c_walk = covariance_matrix(single_step(d, coin)).c;
    EXPECT_LT(max_diff(c_walk, expected), 1e-12);
    // After the shift the two coin modes at a vertex come from different
    // coins, so the block is two uncorrelated thermal modes.
    const RealMatrix block = reduced_coin_covariance(c_walk, ModeLayout(d), 0);
    EXPECT_LT(max_diff(block, RealMatrix(RealMatrix::Identity(4, 4) * std::cosh(2.0 * xi) / 2.0)), 1e-12);
}

TEST(PhotonMeans, VacuumThroughLinearWalk) {
    const RealVector n = photon_means(spectral_propagator(7, hadamard(), 5.0), ComplexVector::Zero(14));
    EXPECT_EQ(n.cwiseAbs().maxCoeff(), 0.0);
}

TEST(PhotonMeans, VacuumThroughSqueezerMatchesFockOracle) {
    for (double xi : {0.1, 0.5, 1.0}) {
        const RealVector n = photon_means(pdc_coin(1, std::cosh(xi), std::sinh(xi)), ComplexVector::Zero(2));
        const FockExpectations f = fock_expectations(two_mode_squeezed_vacuum(xi));
        const double s2 = std::sinh(xi) * std::sinh(xi);
        EXPECT_NEAR(n(0), s2, 1e-14);
        EXPECT_NEAR(n(1), s2, 1e-14);
        EXPECT_NEAR(n(0), f.means(0), 1e-6);
        EXPECT_NEAR(n(1), f.means(1), 1e-6);
    }
}

TEST(PhotonMeans, NonNegative) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        const RealVector n = photon_means(random_walk_transform(4, rng), random_vector(8, rng));
        EXPECT_GE(n.minCoeff(), 0.0);
    }
}

TEST(MomentMatrix, LinearWalkHasNoCorrelations) {
    std::mt19937_64 rng(29);
    const RealMatrix m = photon_moment_matrix(spectral_propagator(6, hadamard(), 7.0), random_vector(12, rng, 3.0));
    EXPECT_LE(max_abs(m), 1e-10);
}

TEST(MomentMatrix, SqueezedVacuum) {
    const double xi = 0.8, mu = std::cosh(xi), nu = std::sinh(xi);
    const RealMatrix m = photon_moment_matrix(pdc_coin(1, mu, nu), ComplexVector::Zero(2));
    RealMatrix expected(2, 2);
    expected << std::pow(nu, 4), mu * mu * nu * nu, mu * mu * nu * nu, std::pow(nu, 4);
    EXPECT_LT(max_diff(m, expected), 1e-12);
    EXPECT_NEAR(min_eig(m), -nu * nu, 1e-12);
    EXPECT_LT(min_eig(m), 0.0);
}

TEST(MomentMatrix, MatchesFockOracle) {
    const double xi = 0.5;
    const RealMatrix m = photon_moment_matrix(pdc_coin(1, std::cosh(xi), std::sinh(xi)), ComplexVector::Zero(2));
    const FockExpectations f = fock_expectations(two_mode_squeezed_vacuum(xi));
    EXPECT_LT(max_diff(m, f.moments), 1e-6);
    EXPECT_NEAR(min_eig(m), min_eig(f.moments), 1e-6);
}

TEST(MomentMatrix, CoherentInputTerms) {
    // With a coherent input on one mode of a squeezer the beta terms enter.
    const double xi = 0.4, mu = std::cosh(xi), nu = std::sinh(xi);
    const complex a(0.7, -0.3);
    ComplexVector alpha = ComplexVector::Zero(2);
    alpha(0) = a;
    const RealMatrix m = photon_moment_matrix(pdc_coin(1, mu, nu), alpha);
    // beta = (mu a, nu conj(a)), y = nu^2 id, z = mu nu antidiag.
    const complex b0 = mu * a, b1 = nu * std::conj(a);
    const double nu2 = nu * nu;
    const double m00 = nu2 * nu2 + 2.0 * nu2 * std::norm(b0);
    const double m01 = mu * mu * nu2 + 2.0 * (mu * nu * std::conj(b0 * b1)).real();
    EXPECT_NEAR(m(0, 0), m00, 1e-12);
    EXPECT_NEAR(m(0, 1), m01, 1e-12);
    EXPECT_NEAR(m(1, 0), m01, 1e-12);
}

TEST(CoinTracedMoments, ZeroAndSums) {
    EXPECT_EQ(max_abs(coin_traced_moment_matrix(RealMatrix::Zero(6, 6))), 0.0);
    const RealMatrix m = photon_moment_matrix(reference_walk(2.0), reference_input(ModeLayout(11)));
    const RealMatrix mp = coin_traced_moment_matrix(m);
    ASSERT_EQ(mp.rows(), 11);
    double expected_trace = 0.0;
    for (Eigen::Index x = 0; x < 11; ++x) {
        expected_trace += m(x, x) + m(x, x + 11) + m(x + 11, x) + m(x + 11, x + 11);
    }
    EXPECT_NEAR(mp.trace(), expected_trace, 1e-10 * std::abs(expected_trace));
    EXPECT_NEAR(mp.sum(), m.sum(), 1e-10 * m.cwiseAbs().sum());
    EXPECT_THROW(coin_traced_moment_matrix(RealMatrix::Zero(5, 5)), DimensionError);
}

TEST(CoinTracedMoments, ReferenceWalkNegativity) {
    const ModeLayout layout(11);
    for (double t = 1.0; t <= 10.0; t += 1.0) {
        const RealMatrix mp = coin_traced_moment_matrix(photon_moment_matrix(reference_walk(t), reference_input(layout)));
        EXPECT_LT(min_eig(mp), 0.0) << t;
    }
}

TEST(EntanglementBound, LinearWalkIsZero) {
    EXPECT_EQ(entanglement_bound(spectral_propagator(9, hadamard(), 4.0)), 0.0);
    EXPECT_EQ(entanglement_bound(BogoliubovTransform::identity(4)), 0.0);
}

TEST(EntanglementBound, SinglePdcCoin) {
    for (double xi : {0.1, 0.5, 1.0, 2.0}) {
        const double s2 = std::sinh(xi) * std::sinh(xi);
        EXPECT_NEAR(entanglement_bound(pdc_coin(1, std::cosh(xi), std::sinh(xi))), 2.0 * s2, 1e-10 * std::max(1.0, s2));
        EXPECT_NEAR(entanglement_bound(pdc_coin(4, std::cosh(xi), std::sinh(xi))), 8.0 * s2, 1e-10 * std::max(1.0, s2));
    }
}

TEST(EntanglementBound, ReferenceWalkBuildsUp) {
    double previous = -1.0;
    for (double t = 0.0; t <= 10.0; t += 1.0) {
        const double g = entanglement_bound(reference_walk(t));
        EXPECT_GT(g, previous) << t;
        previous = g;
    }
}

TEST(EntanglementBound, RejectsInvalidTransform) {
    const BogoliubovTransform bad(ComplexMatrix::Identity(2, 2) * 10.0, ComplexMatrix::Identity(2, 2) * 0.1);
    EXPECT_THROW(entanglement_bound(bad), NumericalError);
}

TEST(ExcessNoise, LinearWalkIsZero) {
    std::mt19937_64 rng(31);
    EXPECT_EQ(excess_noise(spectral_propagator(5, hadamard(), 3.0), random_vector(10, rng)), 0.0);
}

TEST(ExcessNoise, FirstPdcStep) {
    const ModeLayout layout(11);
    EXPECT_NEAR(excess_noise(reference_walk(1.0), reference_input(layout)), 22.0, 1e-9);
}

TEST(ExcessNoise, ReferenceWalkIncreases) {
    const ModeLayout layout(11);
    double previous = -1.0;
    for (double t = 0.0; t <= 10.0; t += 1.0) {
        const double e = excess_noise(reference_walk(t), reference_input(layout));
        EXPECT_GT(e, previous) << t;
        previous = e;
    }
}

TEST(ExcessNoise, TwoPathIdentity) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 6; ++trial) {
        const BogoliubovTransform t = random_walk_transform(5, rng, 5);
        const ComplexVector alpha = random_vector(10, rng, 2.0);
        const double e = excess_noise(t, alpha);
        EXPECT_LT(std::abs(e - t.v().squaredNorm()), 1e-8);
        EXPECT_LT(std::abs(e - (photon_means(t, alpha).sum() - apply_amplitudes(t, alpha).squaredNorm())), 1e-8);
    }
}

TEST(Amplification, LinearWalkIsUnity) {
    std::mt19937_64 rng(41);
    EXPECT_NEAR(amplification(spectral_propagator(5, hadamard(), 9.0), random_vector(10, rng)), 1.0, 1e-12);
    EXPECT_THROW(amplification(BogoliubovTransform::identity(4), ComplexVector::Zero(4)), ConstraintError);
}

TEST(Amplification, SingleSqueezer) {
    const double xi = 0.9, mu = std::cosh(xi), nu = std::sinh(xi);
    ComplexVector alpha = ComplexVector::Zero(2);
    alpha(0) = complex(0.3, 1.1);
    EXPECT_NEAR(amplification(pdc_coin(1, mu, nu), alpha), mu * mu + nu * nu, 1e-12);
}

TEST(Amplification, ReferenceWalkIncreases) {
    const ModeLayout layout(11);
    double previous = 0.0;
    for (double t = 0.0; t <= 10.0; t += 1.0) {
        const double a = amplification(reference_walk(t), reference_input(layout));
        EXPECT_GT(a, previous) << t;
        previous = a;
    }
    EXPECT_NEAR(amplification(reference_walk(0.0), reference_input(layout)), 1.0, 1e-15);
}

TEST(IntensityDistribution, StartsAtInputVertex) {
    const ModeLayout layout(11);
    const RealVector p = intensity_distribution(reference_walk(0.0), reference_input(layout), layout);
    RealVector expected = RealVector::Zero(11);
    expected(0) = 1.0;
    EXPECT_LT((p - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(IntensityDistribution, HadamardMatchesSingleWalker) {
    for (std::size_t d : {5, 11}) {
        const ModeLayout layout(d);
        const ComplexVector alpha = hadamard_input(layout);
        for (std::size_t t = 0; t <= 15; ++t) {
            const RealVector p = intensity_distribution(spectral_propagator(d, hadamard(), static_cast<double>(t)),
                                                        alpha, layout);
            const ComplexVector psi = single_walker_recursion(d, kInvSqrt2, kInvSqrt2, t, alpha / alpha.norm());
            const auto n = static_cast<Eigen::Index>(d);
            const RealVector expected = psi.head(n).cwiseAbs2() + psi.tail(n).cwiseAbs2();
            EXPECT_LT((p - expected).cwiseAbs().maxCoeff(), 1e-10) << "d=" << d << " t=" << t;
        }
    }
}

TEST(IntensityDistribution, NoiseFloorIsUniform) {
    const ModeLayout layout(11);
    for (double t : {1.0, 3.0, 6.0}) {
        const BogoliubovTransform s = reference_walk(t);
        const ComplexVector alpha = reference_input(layout);
        const RealVector p = intensity_distribution(s, alpha, layout);
        const RealVector n = photon_means(s, alpha);
        const ComplexVector beta = apply_amplitudes(s, alpha);
        const RealVector noise = n - beta.cwiseAbs2();
        RealVector per_x = noise.head(11) + noise.tail(11);
        EXPECT_LT(per_x.maxCoeff() - per_x.minCoeff(), 1e-10 * per_x.maxCoeff()) << t;
        EXPECT_GE(p.minCoeff(), per_x.minCoeff() / n.sum() * (1.0 - 1e-12)) << t;
        EXPECT_NEAR(p.sum(), 1.0, 1e-12);
    }
}

TEST(IntensityDistribution, CoherentOnlyAndErrors) {
    const ModeLayout layout(11);
    const BogoliubovTransform s = reference_walk(4.0);
    const ComplexVector alpha = reference_input(layout);
    const RealVector p = intensity_distribution(s, alpha, layout, IntensitySource::CoherentOnly);
    const ComplexVector beta = apply_amplitudes(s, alpha);
    const RealVector expected = (beta.head(11).cwiseAbs2() + beta.tail(11).cwiseAbs2()) / beta.squaredNorm();
    EXPECT_LT((p - expected).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_NEAR(p.sum(), 1.0, 1e-12);
    EXPECT_THROW(intensity_distribution(spectral_propagator(11, hadamard(), 2.0), ComplexVector::Zero(22), layout),
                 ConstraintError);
}

TEST(CircularVariance, Extremes) {
    RealVector delta = RealVector::Zero(9);
    delta(0) = 1.0;
    EXPECT_EQ(circular_variance(delta), 0.0);
    EXPECT_NEAR(circular_variance(RealVector::Constant(9, 1.0 / 9.0)), 1.0, 1e-15);
    EXPECT_THROW(circular_variance(RealVector::Constant(9, 0.2)), ConstraintError);
}

TEST(CircularVariance, CoherentWalkOscillates) {
    const ModeLayout layout(11);
    std::vector<double> cv;
    for (std::size_t t = 0; t <= 15; ++t) {
        cv.push_back(circular_variance(intensity_distribution(
            spectral_propagator(11, hadamard(), static_cast<double>(t)), hadamard_input(layout), layout)));
    }
    bool decreases = false;
    for (std::size_t i = 1; i < cv.size(); ++i) {
        decreases = decreases || cv[i] < cv[i - 1];
    }
    EXPECT_TRUE(decreases);
}

TEST(Evaluate, ReportIsConsistent) {
    const ModeLayout layout(11);
    const BogoliubovTransform s = reference_walk(3.0);
    const ComplexVector alpha = reference_input(layout);
    const ObservableReport r = evaluate(s, alpha, layout, 3.0);
    EXPECT_EQ(r.t, 3.0);
    EXPECT_EQ(r.g_min, entanglement_bound(s));
    EXPECT_EQ(r.excess_noise, excess_noise(s, alpha));
    ASSERT_TRUE(r.amplification && r.intensity && r.circular_variance);
    EXPECT_EQ(*r.amplification, amplification(s, alpha));
    EXPECT_EQ(*r.circular_variance, circular_variance(*r.intensity));
    EXPECT_EQ(r.coin_squeezing_db, squeezing_db(r.reduced_coin_covariance));
    EXPECT_NEAR(r.moment_min_eigenvalue, min_eig(r.moment_matrix), 1e-9 * max_abs(r.moment_matrix));
    EXPECT_NEAR(r.coin_traced_min_eigenvalue, min_eig(r.coin_traced_moment_matrix),
                1e-9 * max_abs(r.coin_traced_moment_matrix));

    const ObservableReport vac = evaluate(spectral_propagator(11, hadamard(), 1.0), ComplexVector::Zero(22), layout, 1.0);
    EXPECT_FALSE(vac.amplification);
    EXPECT_FALSE(vac.intensity);
    EXPECT_FALSE(vac.circular_variance);
}

TEST(Properties, LinearWalksAreClassical) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t d = 0, t = 0;
        const BogoliubovTransform s = random_bs_walk(rng, d, t);
        const ComplexVector alpha = random_vector(2 * d, rng, 2.0);
        EXPECT_LE(std::abs(entanglement_bound(s)), 1e-12);
        EXPECT_NEAR(covariance_matrix(s).min_eigenvalue, 0.5, 1e-10);
        EXPECT_LE(max_abs(photon_moment_matrix(s, alpha)), 1e-10);
    }
}

TEST(Properties, DistributionsAreNormalized) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 6; ++trial) {
        const BogoliubovTransform s = random_walk_transform(6, rng, 6);
        const RealVector p = intensity_distribution(s, random_vector(12, rng), ModeLayout(6));
        EXPECT_NEAR(p.sum(), 1.0, 1e-12);
        EXPECT_GE(p.minCoeff(), 0.0);
    }
}
