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

#include "dqwalk/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dqwalk {

namespace {

Mat2 diag(Complex a, Complex b) {
    Mat2 m;
    m << a, 0, 0, b;
    return m;
}

bool lattice_momentum_in_range(double k) {
    return k > -kPi && k <= kPi;
}

}  // namespace

MomentumBlock walk_block(const WalkOperatorSpec &op, double k) {
    const Mat2 shift = diag(std::polar(1.0, k), std::polar(1.0, -k));
    const Mat2 s_minus = diag(std::polar(1.0, k), 1.0);
    const Mat2 s_plus = diag(1.0, std::polar(1.0, -k));
    const CoinSpec &c = op.coin1();
    MomentumBlock block{k, Mat2::Identity()};
    switch (op.variant()) {
        case Variant::SB:
            block.u = shift * coin_matrix(c);
            break;
        case Variant::BS:
            block.u = coin_matrix(c) * shift;
            break;
        case Variant::BSB: {
            const Mat2 half = coin_matrix(c.theta() / 2, c.phi());
            block.u = half * shift * half;
            break;
        }
        case Variant::SBS:
            block.u = s_plus * coin_matrix(c) * s_minus;
            break;
        case Variant::SQW:
            block.u = s_plus * coin_matrix(op.coin2()) * s_minus * coin_matrix(c);
            break;
    }
    return block;
}

Mat2 exact_step_block(double kappa, double m, double phi, double eps) {
    if (!(eps > 0)) {
        throw std::invalid_argument("time step eps must be positive");
    }
    const double vx = eps * m * std::cos(phi);
    const double vy = eps * m * std::sin(phi);
    const double vz = -eps * kappa;
    const double a = std::sqrt(vx * vx + vy * vy + vz * vz);
    if (a == 0.0) {
        return Mat2::Identity();
    }
    const Mat2 n_sigma = (vx * pauli_x() + vy * pauli_y() + vz * pauli_z()) / a;
    return std::cos(a) * Mat2::Identity() - Complex(0, std::sin(a)) * n_sigma;
}

double dispersion_omega(double theta, double k) {
    return std::acos(std::clamp(std::cos(theta / 2) * std::cos(k), -1.0, 1.0));
}

Eigenphases eigenphases(const MomentumBlock &block) {
    if (!is_unitary(block.u, 1e-10)) {
        throw std::invalid_argument("eigenphases need a unitary block");
    }
    // U = e^{i alpha} V with V in SU(2), V = a0 I - i (a . sigma). The
    // eigenvalues of V are e^{-+ i omega} with omega = atan2(|a|, a0), which
    // stays accurate near degenerate eigenvalues.
    const double alpha = 0.5 * std::arg(block.u.determinant());
    const Mat2 v = block.u * std::polar(1.0, -alpha);
    const double a0 = 0.5 * (v(0, 0) + v(1, 1)).real();
    const double a1 = -0.5 * (v(0, 1) + v(1, 0)).imag();
    const double a2 = 0.5 * (v(1, 0) - v(0, 1)).real();
    const double a3 = 0.5 * (v(1, 1) - v(0, 0)).imag();
    const double omega = std::atan2(std::sqrt(a1 * a1 + a2 * a2 + a3 * a3), a0);
    return {omega - alpha, -omega - alpha};
}

double step_error(Variant variant, double kappa, double m, double phi, double eps) {
    if (variant == Variant::SQW) {
        throw std::invalid_argument("no eps-scaling rule for the split-step walk's two coins");
    }
    if (!(eps > 0)) {
        throw std::invalid_argument("time step eps must be positive");
    }
    const double k = eps * kappa;
    if (!lattice_momentum_in_range(k)) {
        throw std::invalid_argument("lattice momentum eps * kappa = " + std::to_string(k) + " outside (-pi, pi]");
    }
    const WalkOperatorSpec op(variant, CoinSpec(2.0 * eps * m, phi));
    const Mat2 walk = walk_block(op, k).u;
    const Mat2 exact = exact_step_block(kappa, m, phi, eps);
    return spectral_norm(walk - best_global_phase(walk, exact) * exact);
}

int expected_local_order(Variant variant) {
    switch (variant) {
        case Variant::SB:
        case Variant::BS:
            return 2;
        case Variant::BSB:
        case Variant::SBS:
            return 3;
        case Variant::SQW:
            break;
    }
    throw std::invalid_argument("no expected order for the split-step walk");
}

ScalingReport order_fit(Variant variant, double kappa, double m, double phi, std::span<const double> epsilons) {
    if (m == 0.0 || kappa == 0.0) {
        throw std::invalid_argument(
            "order fit is undefined for m = 0 or kappa = 0: coin and shift commute and the error vanishes");
    }
    if (epsilons.size() < 4) {
        throw std::invalid_argument("order fit needs at least 4 eps values");
    }
    const auto [lo, hi] = std::minmax_element(epsilons.begin(), epsilons.end());
    if (!(*lo > 0) || *hi / *lo < 10.0) {
        throw std::invalid_argument("eps values must be positive and span at least one decade");
    }

    ScalingReport report;
    report.variant = variant;
    report.kappa = kappa;
    report.m = m;
    report.phi = phi;
    report.epsilons.assign(epsilons.begin(), epsilons.end());
    std::vector<double> lx;
    std::vector<double> ly;
    for (double eps : epsilons) {
        const double err = step_error(variant, kappa, m, phi, eps);
        report.errors.push_back(err);
        lx.push_back(std::log(eps));
        ly.push_back(std::log(err));
    }
    const double n = static_cast<double>(lx.size());
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    report.fitted_slope = sxy / sxx;
    return report;
}

double max_group_velocity(const WalkOperatorSpec &op, std::size_t points, double h) {
    double best = 0.0;
    for (std::size_t j = 0; j < points; ++j) {
        const double k = -kPi + kTwoPi * static_cast<double>(j + 1) / static_cast<double>(points);
        const double up = eigenphases(walk_block(op, k + h)).plus;
        const double down = eigenphases(walk_block(op, k - h)).plus;
        best = std::max(best, std::abs(up - down) / (2 * h));
    }
    return best;
}

}  // namespace dqwalk
