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

#ifndef DQWALK_BLOCH_HPP
#define DQWALK_BLOCH_HPP

#include <cstddef>
#include <vector>

#include "dqwalk/walk.hpp"

namespace dqwalk {

/// <x> after T steps as a Hermitian form on the initial coin state.
///
/// For a point source at x = 0 with coin spinor psi, <x> = psi^dagger M psi,
/// M_ij = <i| (W^dagger)^T X W^T |j>. Writing M = b0 I + b . sigma gives
/// <x> = b0 + b . n with n the Bloch vector of psi (|0> at +z).
struct BlochForm {
    Mat2 moment = Mat2::Zero();
    double b0 = 0.0;
    double bx = 0.0;
    double by = 0.0;
    double bz = 0.0;

    double mean_x(double theta0, double phi0) const;
};

/// Throws std::invalid_argument unless steps < N/2.
BlochForm x_moment_form(const WalkOperatorSpec &op, std::size_t steps, const Lattice &lattice);

/// Rotation about the Bloch y-axis carrying the massless extremal axis
/// (-z direction of b) onto b: alpha = atan2(b_x, -b_z).
/// Throws when |b| < 1e-9.
double alpha_shift(const WalkOperatorSpec &op, std::size_t steps, const Lattice &lattice);

struct BlochSample {
    double theta0 = 0.0;
    double phi0 = 0.0;
    double mean_x = 0.0;
};

struct BlochSweepResult {
    BlochForm form;
    std::vector<BlochSample> samples;
    /// Largest |simulated <x> - psi^dagger M psi| over the grid.
    double max_form_deviation = 0.0;
};

/// Simulates every initial coin state on a resolution x resolution grid
/// (theta0 over [0, pi] inclusive, phi0 over [0, 2 pi)) and cross-checks
/// each value against the moment form; throws VerificationError if any
/// deviates by more than 1e-10.
BlochSweepResult bloch_sweep(const WalkOperatorSpec &op, std::size_t steps, const Lattice &lattice,
                             std::size_t resolution);

}  // namespace dqwalk

#endif
