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

#include "dqwalk/bloch.hpp"

#include <cmath>
#include <future>
#include <stdexcept>
#include <string>

#include "dqwalk/observables.hpp"

namespace dqwalk {

namespace {

void require_no_wraparound(std::size_t steps, const Lattice &lattice) {
    if (steps >= lattice.size() / 2) {
        throw std::invalid_argument(
            "signed position moments need steps < N/2 (steps = " + std::to_string(steps) +
            ", N = " + std::to_string(lattice.size()) + ")");
    }
}

WalkerState evolve_point_source(const WalkOperatorSpec &op, std::size_t steps, const Lattice &lattice,
                                double theta0, double phi0) {
    InitialStateSpec spec{theta0, phi0, PointSource{0}};
    const WalkerState s0 = build_state(spec, lattice, op.basis_phi());
    return evolve(s0, op, steps, Observe::None).final_state;
}

// Exact |c> (x) |x = 0>.
WalkerState evolve_coin_basis_state(const WalkOperatorSpec &op, std::size_t steps, const Lattice &lattice, int c) {
    std::vector<Complex> v(2 * lattice.size());
    v[static_cast<std::size_t>(c) * lattice.size()] = 1.0;
    const WalkerState s0 = WalkerState::from_amplitudes(lattice, std::move(v), op.basis_phi());
    return evolve(s0, op, steps, Observe::None).final_state;
}

}  // namespace

double BlochForm::mean_x(double theta0, double phi0) const {
    const double nx = std::sin(theta0) * std::cos(phi0);
    const double ny = std::sin(theta0) * std::sin(phi0);
    const double nz = std::cos(theta0);
    return b0 + bx * nx + by * ny + bz * nz;
}

BlochForm x_moment_form(const WalkOperatorSpec &op, std::size_t steps, const Lattice &lattice) {
    require_no_wraparound(steps, lattice);
    const WalkerState evolved[2] = {
        evolve_coin_basis_state(op, steps, lattice, 0),
        evolve_coin_basis_state(op, steps, lattice, 1),
    };
    const std::size_t n = lattice.size();
    BlochForm f;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Complex total = 0.0;
            for (int c = 0; c < 2; ++c) {
                for (std::size_t u = 0; u < n; ++u) {
                    const double x = static_cast<double>(lattice.signed_coordinate(u));
                    total += std::conj(evolved[i].at(c, u)) * x * evolved[j].at(c, u);
                }
            }
            f.moment(i, j) = total;
        }
    }
    f.b0 = 0.5 * (f.moment(0, 0) + f.moment(1, 1)).real();
    f.bz = 0.5 * (f.moment(0, 0) - f.moment(1, 1)).real();
    f.bx = f.moment(0, 1).real();
    f.by = -f.moment(0, 1).imag();
    return f;
}

double alpha_shift(const WalkOperatorSpec &op, std::size_t steps, const Lattice &lattice) {
    const BlochForm f = x_moment_form(op, steps, lattice);
    const double b = std::sqrt(f.bx * f.bx + f.by * f.by + f.bz * f.bz);
    if (b < 1e-9) {
        throw std::invalid_argument("no positional signal: |b| = " + std::to_string(b) + " < 1e-9");
    }
    // Rounding noise in b_x must not flip the sign of a +-pi result.
    const double bx = std::abs(f.bx) < 1e-14 * b ? 0.0 : f.bx;
    return std::atan2(bx, -f.bz);
}

BlochSweepResult bloch_sweep(const WalkOperatorSpec &op, std::size_t steps, const Lattice &lattice,
                             std::size_t resolution) {
    if (resolution < 8) {
        throw std::invalid_argument("Bloch sweep resolution must be at least 8 per angle");
    }
    BlochSweepResult result;
    result.form = x_moment_form(op, steps, lattice);

    // One task per theta0 row; rows are independent evolutions.
    std::vector<std::future<std::vector<BlochSample>>> rows;
    for (std::size_t i = 0; i < resolution; ++i) {
        const double theta0 = kPi * static_cast<double>(i) / static_cast<double>(resolution - 1);
        rows.push_back(std::async(std::launch::async, [&, theta0] {
            std::vector<BlochSample> row;
            for (std::size_t j = 0; j < resolution; ++j) {
                const double phi0 = kTwoPi * static_cast<double>(j) / static_cast<double>(resolution);
                const WalkerState s = evolve_point_source(op, steps, lattice, theta0, phi0);
                row.push_back({theta0, phi0, expectation_x(s)});
            }
            return row;
        }));
    }
    for (auto &row : rows) {
        for (const BlochSample &sample : row.get()) {
            const double deviation = std::abs(sample.mean_x - result.form.mean_x(sample.theta0, sample.phi0));
            result.max_form_deviation = std::max(result.max_form_deviation, deviation);
            result.samples.push_back(sample);
        }
    }
    if (result.max_form_deviation > 1e-10) {
        throw VerificationError(
            "Bloch sweep disagrees with the moment form by " + std::to_string(result.max_form_deviation));
    }
    return result;
}

}  // namespace dqwalk
