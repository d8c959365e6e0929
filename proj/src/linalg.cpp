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

#include "dqwalk/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace dqwalk {

Mat2 pauli_x() {
    Mat2 m;
    m << 0, 1, 1, 0;
    return m;
}

Mat2 pauli_y() {
    Mat2 m;
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

Mat2 pauli_z() {
    Mat2 m;
    m << 1, 0, 0, -1;
    return m;
}

double reduce_angle(double angle, double period) {
    double r = std::fmod(angle, period);
    if (r < 0) {
        r += period;
    }
    // fmod of a tiny negative number can round up to exactly period.
    if (r >= period) {
        r = 0.0;
    }
    return r;
}

double angle_difference(double a, double b) {
    double d = reduce_angle(a - b + kPi) - kPi;
    return d == -kPi ? kPi : d;
}

bool is_unitary(const Mat2 &u, double tol) {
    if (!u.allFinite()) {
        return false;
    }
    Mat2 g = u.adjoint() * u - Mat2::Identity();
    return g.cwiseAbs().maxCoeff() <= tol && std::abs(std::abs(u.determinant()) - 1.0) <= tol;
}

double spectral_norm(const Mat2 &m) {
    // m^dagger m is Hermitian PSD: eigenvalues (t +- sqrt(t^2 - 4 det)) / 2.
    Mat2 g = m.adjoint() * m;
    double a = g(0, 0).real();
    double d = g(1, 1).real();
    double off = std::norm(g(0, 1));
    double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + off);
    return std::sqrt(std::max(0.0, 0.5 * (a + d) + half_gap));
}

Complex best_global_phase(const Mat2 &a, const Mat2 &b) {
    Complex overlap = (b.adjoint() * a).trace();
    if (std::abs(overlap) == 0.0) {
        return 1.0;
    }
    return overlap / std::abs(overlap);
}

}  // namespace dqwalk
