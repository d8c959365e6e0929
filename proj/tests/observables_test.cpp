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

#include <gtest/gtest.h>

#include "dqwalk/observables.hpp"
#include "dqwalk/walk.hpp"
#include "oracles.hpp"

namespace dqwalk {
namespace {

TEST(Observables, ProductStateHasZeroEntropy) {
    const Lattice lat(4);
    for (double theta0 : {0.0, 0.7, oracle::kPi / 2, oracle::kPi}) {
        const WalkerState s = build_state({theta0, 1.1, PointSource{3}}, lat, kWeylMajorana);
        EXPECT_NEAR(entanglement_entropy(s), 0.0, 1e-12);
    }
}

TEST(Observables, BellLikeStateHasOneBit) {
    const Lattice lat(2);
    std::vector<Complex> v(8);
    v[0 * 4 + 0] = std::sqrt(0.5);
    v[1 * 4 + 3] = std::sqrt(0.5);
    EXPECT_NEAR(entanglement_entropy(WalkerState::from_amplitudes(lat, v, kWeylMajorana)), 1.0, 1e-14);
}

TEST(Observables, EntropyMatchesEigensolverOracle) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        const Lattice lat(1 + trial % 6);
        const WalkerState s =
            WalkerState::from_amplitudes(lat, oracle::random_amplitudes(rng, 2 * lat.size()), kWeylMajorana);
        const double got = entanglement_entropy(s);
        EXPECT_NEAR(got, oracle::entropy(oracle::to_vec(s), lat.size()), 1e-12);
        EXPECT_GE(got, 0.0);
        EXPECT_LE(got, 1.0 + 1e-12);
    }
}

TEST(Observables, ReducedDensityIsAStateMatrix) {
    std::mt19937_64 rng(52);
    const Lattice lat(5);
    const WalkerState s = WalkerState::from_amplitudes(lat, oracle::random_amplitudes(rng, 64), kWeylMajorana);
    const CoinDensity d = reduced_coin_density(s);
    EXPECT_NEAR(d.rho.trace().real(), 1.0, 1e-14);
    EXPECT_LT((d.rho - d.rho.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    const auto [lo, hi] = d.eigenvalues();
    EXPECT_GE(lo, 0.0);
    EXPECT_LE(hi, 1.0);
    EXPECT_NEAR(lo + hi, 1.0, 1e-14);
    const ChiralityProbabilities c = chirality_probabilities(s);
    EXPECT_NEAR(c.left, d.rho(0, 0).real(), 1e-15);
    EXPECT_NEAR(c.left + c.right, 1.0, 1e-14);
}

TEST(Observables, EntropyOfPureCoinDensityIsZero) {
    CoinDensity d;
    d.rho << 1.0, 0.0, 0.0, 0.0;
    EXPECT_EQ(entropy_bits(d), 0.0);
    d.rho << 0.5, 0.0, 0.0, 0.5;
    EXPECT_NEAR(entropy_bits(d), 1.0, 1e-15);
}

TEST(Observables, PositionDistributionAndMean) {
    const Lattice lat(3);
    std::vector<Complex> v(16);
    v[1] = std::sqrt(0.25);       // L at x = 1
    v[8 + 6] = std::sqrt(0.75);   // R at x = -2
    const WalkerState s = WalkerState::from_amplitudes(lat, v, kWeylMajorana);
    const auto p = position_distribution(s);
    EXPECT_NEAR(p[1], 0.25, 1e-15);
    EXPECT_NEAR(p[6], 0.75, 1e-15);
    EXPECT_NEAR(expectation_x(s), 0.25 * 1 + 0.75 * -2, 1e-15);
}

TEST(Observables, EntropyIsInvariantUnderBasisChange) {
    std::mt19937_64 rng(53);
    const Lattice lat(4);
    const WalkerState s = WalkerState::from_amplitudes(lat, oracle::random_amplitudes(rng, 32), kWeylMajorana);
    EXPECT_NEAR(entanglement_entropy(s), entanglement_entropy(change_basis(s, 0.9)), 1e-13);
}

}  // namespace
}  // namespace dqwalk
