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

#include "dgqw/walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dgqw/errors.hpp"

namespace dgqw {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positions(std::size_t d, const char *what) {
    if (d < 2) {
        throw ConstraintError(std::string(what) + ": need d >= 2, got " + std::to_string(d));
    }
}

// A coin acts on each vertex separately, so a single vertex is allowed.
void require_vertices(std::size_t d, const char *what) {
    if (d < 1) {
        throw ConstraintError(std::string(what) + ": need d >= 1");
    }
}

bool is_real(complex c) { return c.imag() == 0.0; }

}  // namespace

bool CoinSpec::is_real() const {
    return std::visit(overloaded{
                          [](const BsCoin &c) { return dgqw::is_real(c.tau) && dgqw::is_real(c.rho); },
                          [](const PdcCoin &c) { return dgqw::is_real(c.mu) && dgqw::is_real(c.nu); },
                          [](const CompositeCoin &c) {
                              for (const CoinSpec &p : c.parts) {
                                  if (!p.is_real()) {
                                      return false;
                                  }
                              }
                              return true;
                          },
                      },
                      variant);
}

void check_coin(const CoinSpec &spec) {
    std::visit(overloaded{
                   [](const BsCoin &c) {
                       const double norm = std::norm(c.tau) + std::norm(c.rho);
                       if (!std::isfinite(norm) || std::abs(norm - 1.0) > kCoinTolerance) {
                           throw ConstraintError("bs coin: |tau|^2 + |rho|^2 = " + std::to_string(norm) +
                                                 ", expected 1");
                       }
                   },
                   [](const PdcCoin &c) {
                       const double norm = std::norm(c.mu) - std::norm(c.nu);
                       // Relative check: large squeezing makes |mu|^2 and |nu|^2 nearly cancel.
                       const double scale = std::max(1.0, std::norm(c.mu));
                       if (!std::isfinite(norm) || std::abs(norm - 1.0) > kCoinTolerance * scale) {
                           throw ConstraintError("pdc coin: |mu|^2 - |nu|^2 = " + std::to_string(norm) +
                                                 ", expected 1");
                       }
                   },
                   [](const CompositeCoin &c) {
                       if (c.parts.empty()) {
                           throw ConstraintError("composite coin: empty coin list");
                       }
                       for (const CoinSpec &p : c.parts) {
                           check_coin(p);
                       }
                   },
               },
               spec.variant);
}

ComplexMatrix shift_matrix(std::size_t d) {
    require_positions(d, "shift_matrix");
    const auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix sigma = ComplexMatrix::Zero(n, n);
    for (Eigen::Index x = 0; x < n; ++x) {
        sigma((x + 1) % n, x) = 1.0;
    }
    return sigma;
}

BogoliubovTransform step_transform(std::size_t d) {
    const ComplexMatrix sigma = shift_matrix(d);
    const auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix u = ComplexMatrix::Zero(2 * n, 2 * n);
    u.topLeftCorner(n, n) = sigma;
    u.bottomRightCorner(n, n) = sigma.transpose();
    return {std::move(u), ComplexMatrix::Zero(2 * n, 2 * n)};
}

BogoliubovTransform pdc_coin(std::size_t d, complex mu, complex nu) {
    require_vertices(d, "pdc_coin");
    check_coin({PdcCoin{mu, nu}});
    const auto n = static_cast<Eigen::Index>(d);
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    ComplexMatrix u = mu * ComplexMatrix::Identity(2 * n, 2 * n);
    ComplexMatrix v = ComplexMatrix::Zero(2 * n, 2 * n);
    v.topRightCorner(n, n) = nu * id;
    v.bottomLeftCorner(n, n) = nu * id;
    return {std::move(u), std::move(v)};
}

BogoliubovTransform bs_coin(std::size_t d, complex tau, complex rho) {
    require_vertices(d, "bs_coin");
    check_coin({BsCoin{tau, rho}});
    const auto n = static_cast<Eigen::Index>(d);
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    ComplexMatrix u(2 * n, 2 * n);
    u.topLeftCorner(n, n) = tau * id;
    u.topRightCorner(n, n) = rho * id;
    u.bottomLeftCorner(n, n) = -std::conj(rho) * id;
    u.bottomRightCorner(n, n) = std::conj(tau) * id;
    return {std::move(u), ComplexMatrix::Zero(2 * n, 2 * n)};
}

BogoliubovTransform coin_transform(std::size_t d, const CoinSpec &spec) {
    return std::visit(overloaded{
                          [d](const BsCoin &c) { return bs_coin(d, c.tau, c.rho); },
                          [d](const PdcCoin &c) { return pdc_coin(d, c.mu, c.nu); },
                          [d](const CompositeCoin &c) { return composite_coin(d, c.parts); },
                      },
                      spec.variant);
}

BogoliubovTransform composite_coin(std::size_t d, const std::vector<CoinSpec> &specs) {
    require_vertices(d, "composite_coin");
    check_coin({CompositeCoin{specs}});
    BogoliubovTransform total = BogoliubovTransform::identity(2 * d);
    for (const CoinSpec &spec : specs) {
        total = compose(coin_transform(d, spec), total);
    }
    return total;
}

BogoliubovTransform single_step(std::size_t d, const CoinSpec &spec) {
    return compose(step_transform(d), coin_transform(d, spec));
}

CoinSpec coin_from_parameters(CoinKind kind, double value) {
    switch (kind) {
        case CoinKind::Pdc:
            return {PdcCoin{std::cosh(value), std::sinh(value)}};
        case CoinKind::Bs:
            return {BsCoin{std::cos(value), std::sin(value)}};
    }
    throw ConstraintError("coin_from_parameters: unknown coin kind");
}

double splitting_ratio(const CoinSpec &spec) {
    return std::visit(overloaded{
                          [](const BsCoin &c) {
                              const double t2 = std::norm(c.tau);
                              const double r2 = std::norm(c.rho);
                              if (t2 == 0.0) {
                                  return r2 == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                                   : std::numeric_limits<double>::infinity();
                              }
                              return r2 / t2;
                          },
                          [](const PdcCoin &c) { return std::norm(c.nu) / std::norm(c.mu); },
                          [](const CompositeCoin &) -> double {
                              throw ConstraintError("splitting_ratio: undefined for composite coins");
                          },
                      },
                      spec.variant);
}

RealVector classical_random_walk(std::size_t d, std::size_t t, double p_forward) {
    require_positions(d, "classical_random_walk");
    if (!(p_forward >= 0.0 && p_forward <= 1.0)) {
        throw ConstraintError("classical_random_walk: p_forward must lie in [0, 1]");
    }
    const auto n = static_cast<Eigen::Index>(d);
    RealVector p = RealVector::Zero(n);
    p(0) = 1.0;
    RealVector next(n);
    for (std::size_t step = 0; step < t; ++step) {
        for (Eigen::Index x = 0; x < n; ++x) {
            next(x) = p_forward * p((x + n - 1) % n) + (1.0 - p_forward) * p((x + 1) % n);
        }
        p.swap(next);
    }
    return p;
}

}  // namespace dgqw
