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

#ifndef DQWALK_COINS_HPP
#define DQWALK_COINS_HPP

#include <utility>

#include "dqwalk/linalg.hpp"

namespace dqwalk {

/// Parameters of the Lorentz-covariant coin B_phi(theta).
///
/// theta is the mass angle (theta / 2 = eps * m) and phi the angle of the
/// rotation axis in the x-y plane, which selects the gamma-matrix basis.
/// theta is stored modulo 4 pi (B changes sign under theta -> theta + 2 pi),
/// phi modulo 2 pi.
class CoinSpec {
   public:
    CoinSpec() = default;
    CoinSpec(double theta, double phi);

    double theta() const { return theta_; }
    double phi() const { return phi_; }

    /// True when B is +-identity, i.e. the coin carries no basis information.
    bool is_trivial() const;

   private:
    double theta_ = 0.0;
    double phi_ = 0.0;
};

Mat2 rx(double theta);
Mat2 ry(double theta);
Mat2 rz(double phi);

/// B_phi(theta) = R_z(phi) R_x(theta) R_z(phi)^dagger, determinant 1.
Mat2 coin_matrix(const CoinSpec &spec);
Mat2 coin_matrix(double theta, double phi);

/// R_z(lambda) coin R_z(lambda)^dagger.
Mat2 conjugate_coin(const Mat2 &coin, double lambda);

struct GammaMatrices {
    Mat2 gamma0;
    Mat2 gamma1;
};

/// gamma^0 = cos(phi) sigma_x + sin(phi) sigma_y and gamma^1 fixed by
/// gamma^0 gamma^1 = -sigma_z.
GammaMatrices gamma_matrices(double phi);

/// Checks {gamma^mu, gamma^nu} = 2 g^{mu nu} I with g = diag(1, -1).
bool gamma_check(double phi, double tol = 1e-12);

}  // namespace dqwalk

#endif
