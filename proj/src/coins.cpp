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

#include "dqwalk/coins.hpp"

#include <cmath>
#include <stdexcept>

namespace dqwalk {

CoinSpec::CoinSpec(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw std::invalid_argument("coin angles must be finite");
    }
    theta_ = reduce_angle(theta, 2.0 * kTwoPi);
    phi_ = reduce_angle(phi);
}

bool CoinSpec::is_trivial() const {
    return std::abs(std::sin(theta_ / 2)) <= 1e-12;
}

Mat2 rx(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    Mat2 m;
    m << c, Complex(0, -s), Complex(0, -s), c;
    return m;
}

Mat2 ry(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    Mat2 m;
    m << c, -s, s, c;
    return m;
}

Mat2 rz(double phi) {
    Mat2 m;
    m << std::polar(1.0, -phi / 2), 0, 0, std::polar(1.0, phi / 2);
    return m;
}

Mat2 coin_matrix(double theta, double phi) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    const Complex minus_i(0, -1);
    Mat2 m;
    m << c, minus_i * std::polar(1.0, -phi) * s, minus_i * std::polar(1.0, phi) * s, c;
    return m;
}

Mat2 coin_matrix(const CoinSpec &spec) {
    return coin_matrix(spec.theta(), spec.phi());
}

Mat2 conjugate_coin(const Mat2 &coin, double lambda) {
    const Mat2 v = rz(lambda);
    return v * coin * v.adjoint();
}

GammaMatrices gamma_matrices(double phi) {
    GammaMatrices g;
    g.gamma0 = std::cos(phi) * pauli_x() + std::sin(phi) * pauli_y();
    // gamma0 gamma1 = -sigma_z  =>  gamma1 = gamma0^{-1} (-sigma_z).
    g.gamma1 = g.gamma0.inverse() * (-pauli_z());
    return g;
}

bool gamma_check(double phi, double tol) {
    const GammaMatrices g = gamma_matrices(phi);
    const Mat2 gammas[2] = {g.gamma0, g.gamma1};
    const double metric[2] = {1.0, -1.0};
    for (int mu = 0; mu < 2; ++mu) {
        for (int nu = 0; nu < 2; ++nu) {
            Mat2 anti = gammas[mu] * gammas[nu] + gammas[nu] * gammas[mu];
            Mat2 expected = Mat2::Zero();
            if (mu == nu) {
                expected = 2.0 * metric[mu] * Mat2::Identity();
            }
            if ((anti - expected).cwiseAbs().maxCoeff() > tol) {
                return false;
            }
        }
    }
    // The chirality choice is part of the basis definition.
    return (g.gamma0 * g.gamma1 + pauli_z()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace dqwalk
