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

#ifndef DQWALK_LINALG_HPP
#define DQWALK_LINALG_HPP

#include <complex>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace dqwalk {

using Complex = std::complex<double>;

/// Dense 2x2 complex matrix. Coins, momentum blocks and reduced coin
/// densities all use this representation.
using Mat2 = Eigen::Matrix2cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Raised when a numerical self-check (oracle comparison, cross-validation)
/// exceeds its tolerance.
class VerificationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

/// Reduces an angle into [0, period).
double reduce_angle(double angle, double period = kTwoPi);

/// Signed distance between two angles on the circle, in (-pi, pi].
double angle_difference(double a, double b);

bool is_unitary(const Mat2 &u, double tol = 1e-12);

/// Largest singular value, from the closed-form eigenvalues of m^dagger m.
double spectral_norm(const Mat2 &m);

/// Phase e^{i a} minimising ||a - e^{i a} b||_F, i.e. arg tr(b^dagger a).
Complex best_global_phase(const Mat2 &a, const Mat2 &b);

}  // namespace dqwalk

#endif
