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

#include <gtest/gtest.h>

#include "dqwalk/bloch.hpp"
#include "dqwalk/observables.hpp"
#include "oracles.hpp"

namespace dqwalk {
namespace {

double simulated_mean_x(const WalkOperatorSpec &op, std::size_t steps, const Lattice &lat, double theta0,
                        double phi0) {
    const WalkerState s = build_state({theta0, phi0, PointSource{}}, lat, kWeylMajorana);
    oracle::Vec v = oracle::to_vec(s);
    const oracle::Mat w = oracle::walk_matrix(op, lat.size());
    for (std::size_t t = 0; t < steps; ++t) {
        v = w * v;
    }
    const auto p = oracle::distribution(v, lat.size());
    double mean = 0.0;
    for (std::size_t u = 0; u < lat.size(); ++u) {
        mean += p[u] * static_cast<double>(lat.signed_coordinate(u));
    }
    return mean;
}

TEST(MomentForm, ReproducesSimulatedMean) {
    std::mt19937_64 rng(61);
    const Lattice lat(5);
    for (Variant v : {Variant::SB, Variant::BS, Variant::BSB, Variant::SBS}) {
        for (std::size_t steps : {1u, 4u, 9u}) {
            const WalkOperatorSpec op(v, CoinSpec(oracle::uniform(rng, 0.1, 3.0), kWeylMajorana));
            const BlochForm form = x_moment_form(op, steps, lat);
            for (int trial = 0; trial < 10; ++trial) {
                const double theta0 = oracle::uniform(rng, 0, oracle::kPi);
                const double phi0 = oracle::uniform(rng, 0, 2 * oracle::kPi);
                EXPECT_NEAR(form.mean_x(theta0, phi0), simulated_mean_x(op, steps, lat, theta0, phi0), 1e-12);
            }
        }
    }
}

TEST(MomentForm, RequiresStepsBelowHalfTheLattice) {
    const WalkOperatorSpec op(Variant::SB, CoinSpec(1.0, kWeylMajorana));
    EXPECT_THROW(x_moment_form(op, 4, Lattice(3)), std::invalid_argument);
    EXPECT_NO_THROW(x_moment_form(op, 3, Lattice(3)));
}

TEST(MomentForm, FreeWalkMovesByChirality) {
    const WalkOperatorSpec op(Variant::SB, CoinSpec(0.0, kWeylMajorana));
    const BlochForm form = x_moment_form(op, 5, Lattice(4));
    EXPECT_NEAR(form.b0, 0.0, 1e-14);
    EXPECT_NEAR(form.bz, -5.0, 1e-14);
    EXPECT_NEAR(form.bx, 0.0, 1e-14);
}

TEST(Alpha, OneStepClosedForms) {
    const Lattice lat(4);
    for (int j = 1; j < 20; ++j) {
        const double theta = oracle::kPi * j / 20.0;
        const CoinSpec c(theta, kWeylMajorana);
        EXPECT_NEAR(alpha_shift(WalkOperatorSpec(Variant::SB, c), 1, lat), theta, 1e-10);
        EXPECT_NEAR(alpha_shift(WalkOperatorSpec(Variant::BSB, c), 1, lat), theta / 2, 1e-10);
        EXPECT_NEAR(alpha_shift(WalkOperatorSpec(Variant::SBS, c), 1, lat), 0.0, 1e-10);
    }
}

TEST(Alpha, MajoranaBasisFormHasNoYComponent) {
    std::mt19937_64 rng(62);
    const Lattice lat(5);
    for (Variant v : {Variant::SB, Variant::BS, Variant::BSB, Variant::SBS}) {
        for (int trial = 0; trial < 5; ++trial) {
            const WalkOperatorSpec op(v, CoinSpec(oracle::uniform(rng, 0, oracle::kPi), kWeylMajorana));
            EXPECT_NEAR(x_moment_form(op, 1 + trial * 3, lat).by, 0.0, 1e-12);
        }
    }
}

TEST(BlochSweep, GridAgreesWithForm) {
    const WalkOperatorSpec op(Variant::BSB, CoinSpec(oracle::kPi / 3, kWeylMajorana));
    const BlochSweepResult r = bloch_sweep(op, 5, Lattice(4), 12);
    EXPECT_EQ(r.samples.size(), 144u);
    EXPECT_LT(r.max_form_deviation, 1e-10);
    EXPECT_NEAR(r.samples.front().theta0, 0.0, 0.0);
    EXPECT_NEAR(r.samples.back().theta0, oracle::kPi, 1e-15);
    EXPECT_THROW(bloch_sweep(op, 5, Lattice(4), 4), std::invalid_argument);
}

}  // namespace
}  // namespace dqwalk
