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

#ifndef DQWALK_MOMENTUM_HPP
#define DQWALK_MOMENTUM_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "dqwalk/walk.hpp"

namespace dqwalk {

/// Fourier block of a walk operator at lattice momentum k: on plane waves
/// e^{iku} chi the operator acts as U(k) chi.
struct MomentumBlock {
    double k = 0.0;
    Mat2 u = Mat2::Identity();
};

/// The psi_L slice picks up e^{+ik} under the shift (it moves u -> u - 1).
MomentumBlock walk_block(const WalkOperatorSpec &op, double k);

/// exp(-i eps H(kappa)) with H(kappa) = -kappa sigma_z + m (cos phi sigma_x
/// + sin phi sigma_y), evaluated in closed form.
Mat2 exact_step_block(double kappa, double m, double phi, double eps);

/// omega(k) = arccos(cos(theta/2) cos k), in [0, pi].
double dispersion_omega(double theta, double k);

/// Eigenvalues of a one-step block are e^{-i omega}; `plus` >= `minus`.
struct Eigenphases {
    double plus = 0.0;
    double minus = 0.0;
};

Eigenphases eigenphases(const MomentumBlock &block);

/// Spectral-norm distance between the walk block at theta = 2 eps m,
/// k = eps kappa and the exact Dirac step, after removing a global phase.
double step_error(Variant variant, double kappa, double m, double phi, double eps);

struct ScalingReport {
    Variant variant = Variant::SB;
    double kappa = 0.0;
    double m = 0.0;
    double phi = 0.0;
    std::vector<double> epsilons;
    std::vector<double> errors;
    /// Least-squares slope of log(error) against log(eps).
    double fitted_slope = 0.0;
};

/// Expected per-step error order: 2 for SB/BS, 3 for BSB/SBS.
int expected_local_order(Variant variant);

ScalingReport order_fit(Variant variant, double kappa, double m, double phi, std::span<const double> epsilons);

/// max_k |d omega / d k| from central differences of the block eigenphases
/// on a uniform k-grid of `points` samples over (-pi, pi].
double max_group_velocity(const WalkOperatorSpec &op, std::size_t points = 4096, double h = 1e-5);

}  // namespace dqwalk

#endif
