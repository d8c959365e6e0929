// Copyright 2026 The dqwalk Authors
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

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "dqwalk/momentum.hpp"
#include "oracles.hpp"

namespace dqwalk {
namespace {

const Variant kVariants[] = {Variant::SB, Variant::BS, Variant::BSB, Variant::SBS};

TEST(WalkBlock, MatchesFourierTransformOfDenseWalk) {
    std::mt19937_64 rng(41);
    const std::size_t n = 16;
    for (Variant v : {Variant::SB, Variant::BS, Variant::BSB, Variant::SBS, Variant::SQW}) {
        const double theta = oracle::uniform(rng, 0, 2 * oracle::kPi);
        const double phi = oracle::uniform(rng, 0, 2 * oracle::kPi);
        const WalkOperatorSpec op = v == Variant::SQW
                                        ? WalkOperatorSpec::split_step(CoinSpec(theta, phi), CoinSpec(0.4, phi))
                                        : WalkOperatorSpec(v, CoinSpec(theta, phi));
        const oracle::Mat w = oracle::walk_matrix(op, n);
        for (std::size_t j = 0; j < n; ++j) {
            const double k = 2 * oracle::kPi * static_cast<double>(j) / static_cast<double>(n);
            const oracle::Mat expect = oracle::fourier_block(w, n, k);
            EXPECT_LT(oracle::max_abs_diff(walk_block(op, k).u, expect), 1e-13) << to_string(v) << " k=" << k;
        }
    }
}

TEST(Eigenphases, AgreeWithGeneralEigensolver) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const WalkOperatorSpec op(kVariants[trial % 4],
                                  CoinSpec(oracle::uniform(rng, 0, 2 * oracle::kPi), oracle::uniform(rng, 0, 6)));
        const MomentumBlock block = walk_block(op, oracle::uniform(rng, -oracle::kPi, oracle::kPi));
        const Eigenphases e = eigenphases(block);
        Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(block.u);
        // Each returned phase must be the phase of some eigenvalue, as e^{-i w}.
        for (double w : {e.plus, e.minus}) {
            const Complex lam = std::polar(1.0, -w);
            const double gap = std::min(std::abs(es.eigenvalues()(0) - lam), std::abs(es.eigenvalues()(1) - lam));
            EXPECT_LT(gap, 1e-12);
        }
    }
}

TEST(Eigenphases, RejectNonUnitaryBlocks) {
    MomentumBlock b;
    b.u << 1.0, 0.1, 0.0, 1.0;
    EXPECT_THROW(eigenphases(b), std::invalid_argument);
}

TEST(Dispersion, AllVariantsSatisfyCosineRelation) {
    for (double theta : {0.0, oracle::kPi / 4, oracle::kPi / 2, oracle::kPi, 2.2}) {
        for (Variant v : kVariants) {
            const WalkOperatorSpec op(v, CoinSpec(theta, kWeylMajorana));
            for (int j = 0; j < 64; ++j) {
                const double k = -oracle::kPi + 2 * oracle::kPi * (j + 1) / 64.0;
                const Eigenphases e = eigenphases(walk_block(op, k));
                EXPECT_NEAR(std::cos(e.plus), std::cos(theta / 2) * std::cos(k), 1e-12);
                EXPECT_NEAR(e.plus, dispersion_omega(theta, k), 1e-10);
                EXPECT_NEAR(e.minus, -e.plus, 1e-12);
            }
        }
    }
}

TEST(Dispersion, ZeroCoinIsLinearAndHalfTurnIsFlat) {
    for (double k : {-2.0, -0.5, 0.0, 0.3, 3.0}) {
        EXPECT_NEAR(dispersion_omega(0.0, k), std::abs(k), 1e-12);
        EXPECT_NEAR(dispersion_omega(oracle::kPi, k), oracle::kPi / 2, 1e-12);
    }
}

TEST(GroupVelocity, MaximumIsCosineOfHalfAngle) {
    for (double theta : {0.0, oracle::kPi / 4, oracle::kPi / 2, oracle::kPi}) {
        for (Variant v : kVariants) {
            const WalkOperatorSpec op(v, CoinSpec(theta, kWeylMajorana));
            EXPECT_NEAR(max_group_velocity(op), std::abs(std::cos(theta / 2)), 1e-6) << to_string(v);
        }
    }
}

TEST(ExactStep, MatchesSeriesExponential) {
    std::mt19937_64 rng(43);
    const Complex i(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        const double kappa = oracle::uniform(rng, -3, 3);
        const double m = oracle::uniform(rng, -3, 3);
        const double phi = oracle::uniform(rng, 0, 6);
        const double eps = oracle::uniform(rng, 1e-3, 1.0);
        const Mat2 h = -kappa * pauli_z() + m * (std::cos(phi) * pauli_x() + std::sin(phi) * pauli_y());
        const oracle::Mat expect = oracle::expm(-i * eps * oracle::Mat(h));
        EXPECT_LT(oracle::max_abs_diff(exact_step_block(kappa, m, phi, eps), expect), 1e-13);
    }
    EXPECT_THROW(exact_step_block(1, 1, 0, 0.0), std::invalid_argument);
}

TEST(StepError, ShrinksWithStepSize) {
    for (Variant v : kVariants) {
        const double e1 = step_error(v, 1.0, 1.0, kWeylMajorana, 0.02);
        const double e2 = step_error(v, 1.0, 1.0, kWeylMajorana, 0.01);
        const double ratio = e1 / e2;
        EXPECT_NEAR(std::log2(ratio), expected_local_order(v), 0.05) << to_string(v);
    }
    EXPECT_THROW(step_error(Variant::SQW, 1, 1, 0, 0.1), std::invalid_argument);
}

TEST(OrderFit, RecoversExpectedOrders) {
    const std::vector<double> eps{0.1, 0.05, 0.02, 0.01, 0.005, 0.002};
    for (Variant v : kVariants) {
        for (double phi : {kWeylMajorana, kWeylDirac}) {
            const ScalingReport r = order_fit(v, 1.0, 1.0, phi, eps);
            EXPECT_NEAR(r.fitted_slope, expected_local_order(v), 0.1) << to_string(v);
            EXPECT_EQ(r.errors.size(), eps.size());
        }
    }
}

TEST(OrderFit, ValidatesInputs) {
    const std::vector<double> eps{0.1, 0.05, 0.02, 0.01};
    EXPECT_THROW(order_fit(Variant::SB, 1, 0, 0, eps), std::invalid_argument);
    EXPECT_THROW(order_fit(Variant::SB, 0, 1, 0, eps), std::invalid_argument);
    const std::vector<double> three{0.1, 0.01, 0.001};
    EXPECT_THROW(order_fit(Variant::SB, 1, 1, 0, three), std::invalid_argument);
    const std::vector<double> narrow{0.1, 0.09, 0.08, 0.07};
    EXPECT_THROW(order_fit(Variant::SB, 1, 1, 0, narrow), std::invalid_argument);
    EXPECT_THROW(order_fit(Variant::SQW, 1, 1, 0, eps), std::invalid_argument);
}

TEST(WalkBlock, FourierTransformHasNoOffBlockLeakage) {
    const std::size_t n = 16;
    const WalkOperatorSpec op(Variant::BSB, CoinSpec(1.3, 0.4));
    const oracle::Mat w = oracle::walk_matrix(op, n);
    // F maps (c, k_j) to (c, u) with plane waves e^{i k_j u} / sqrt(N).
    oracle::Mat f = oracle::Mat::Zero(2 * n, 2 * n);
    for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t u = 0; u < n; ++u) {
                const double k = 2 * oracle::kPi * static_cast<double>(j * u) / static_cast<double>(n);
                f(c * n + u, c * n + j) = std::polar(1.0 / std::sqrt(static_cast<double>(n)), k);
            }
        }
    }
    const oracle::Mat wk = f.adjoint() * w * f;
    for (std::size_t a = 0; a < 2 * n; ++a) {
        for (std::size_t b = 0; b < 2 * n; ++b) {
            if (a % n != b % n) {
                EXPECT_LT(std::abs(wk(a, b)), 1e-12);
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        const double k = 2 * oracle::kPi * static_cast<double>(j) / static_cast<double>(n);
        const Mat2 block = walk_block(op, k).u;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                EXPECT_LT(std::abs(wk(a * n + j, b * n + j) - block(a, b)), 1e-12);
            }
        }
    }
}

TEST(Eigenphases, VariantsShareTheirSpectrum) {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        const CoinSpec coin(oracle::uniform(rng, 0, 2 * oracle::kPi), oracle::uniform(rng, 0, 6));
        const double k = oracle::uniform(rng, -oracle::kPi, oracle::kPi);
        const Eigenphases ref = eigenphases(walk_block(WalkOperatorSpec(Variant::SB, coin), k));
        for (Variant v : {Variant::BS, Variant::BSB, Variant::SBS}) {
            const Eigenphases e = eigenphases(walk_block(WalkOperatorSpec(v, coin), k));
            EXPECT_NEAR(angle_difference(e.plus, ref.plus), 0.0, 1e-10) << to_string(v);
            EXPECT_NEAR(angle_difference(e.minus, ref.minus), 0.0, 1e-10) << to_string(v);
        }
    }
}

TEST(ExactStep, FormsASemigroup) {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 100; ++trial) {
        const double kappa = oracle::uniform(rng, -2, 2);
        const double m = oracle::uniform(rng, -2, 2);
        const double phi = oracle::uniform(rng, 0, 6);
        const double e1 = oracle::uniform(rng, 1e-3, 1.0);
        const double e2 = oracle::uniform(rng, 1e-3, 1.0);
        const Mat2 lhs = exact_step_block(kappa, m, phi, e1) * exact_step_block(kappa, m, phi, e2);
        EXPECT_LT((lhs - exact_step_block(kappa, m, phi, e1 + e2)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

}  // namespace
}  // namespace dqwalk
