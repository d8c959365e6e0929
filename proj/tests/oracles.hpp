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

// Reference implementations used only by the tests. Each one is written
// directly from the definitions, without calling the library code it is
// used to check.

#ifndef DQWALK_TESTS_ORACLES_HPP
#define DQWALK_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "dqwalk/coins.hpp"
#include "dqwalk/lattice_state.hpp"
#include "dqwalk/walk.hpp"

namespace oracle {

using dqwalk::Complex;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;

/// B_phi(theta) written out entry by entry.
inline Eigen::Matrix2cd coin(double theta, double phi) {
    const Complex i(0, 1);
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    Eigen::Matrix2cd b;
    b << c, -i * std::exp(-i * phi) * s, -i * std::exp(i * phi) * s, c;
    return b;
}

/// exp(a) by scaling and squaring around a 30-term Taylor series.
inline Mat expm(const Mat &a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (norm / std::pow(2.0, squarings) > 0.5) {
        ++squarings;
    }
    const Mat x = a / std::pow(2.0, squarings);
    Mat term = Mat::Identity(a.rows(), a.cols());
    Mat sum = term;
    for (int n = 1; n <= 30; ++n) {
        term = term * x / static_cast<double>(n);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = sum * sum;
    }
    return sum;
}

// State vectors use index c * N + u, c = 0 left-handed, c = 1 right-handed.

inline Vec coin_all(const Vec &v, const Eigen::Matrix2cd &b, std::size_t n) {
    Vec out(v.size());
    for (std::size_t u = 0; u < n; ++u) {
        const Complex l = v(u);
        const Complex r = v(n + u);
        out(u) = b(0, 0) * l + b(0, 1) * r;
        out(n + u) = b(1, 0) * l + b(1, 1) * r;
    }
    return out;
}

/// Moves the left-handed amplitude at u to u - 1 (move_left) and the
/// right-handed amplitude at u to u + 1 (move_right), periodically.
inline Vec translate(const Vec &v, std::size_t n, bool move_left, bool move_right) {
    Vec out = v;
    for (std::size_t u = 0; u < n; ++u) {
        if (move_left) {
            out((u + n - 1) % n) = v(u);
        }
        if (move_right) {
            out(n + (u + 1) % n) = v(n + u);
        }
    }
    return out;
}

/// One step of the named operator applied to v.
inline Vec step(const Vec &v, dqwalk::Variant variant, const Eigen::Matrix2cd &b1, const Eigen::Matrix2cd &b2,
                std::size_t n) {
    using dqwalk::Variant;
    switch (variant) {
        case Variant::SB:
            return translate(coin_all(v, b1, n), n, true, true);
        case Variant::BS:
            return coin_all(translate(v, n, true, true), b1, n);
        case Variant::BSB: {
            const Eigen::Matrix2cd half = b2;
            return coin_all(translate(coin_all(v, half, n), n, true, true), half, n);
        }
        case Variant::SBS:
            return translate(coin_all(translate(v, n, true, false), b1, n), n, false, true);
        case Variant::SQW:
            return translate(coin_all(translate(coin_all(v, b1, n), n, true, false), b2, n), n, false, true);
    }
    return v;
}

/// Dense step matrix, column by column. For BSB pass the half-angle coin as
/// b2; for SQW b1 acts first.
inline Mat walk_matrix(dqwalk::Variant variant, const Eigen::Matrix2cd &b1, const Eigen::Matrix2cd &b2,
                       std::size_t n) {
    Mat w(2 * n, 2 * n);
    for (std::size_t col = 0; col < 2 * n; ++col) {
        Vec e = Vec::Zero(static_cast<Eigen::Index>(2 * n));
        e(col) = 1.0;
        w.col(col) = step(e, variant, b1, b2, n);
    }
    return w;
}

inline Mat walk_matrix(const dqwalk::WalkOperatorSpec &op, std::size_t n) {
    using dqwalk::Variant;
    const auto &c1 = op.coin1();
    const Eigen::Matrix2cd b1 = coin(c1.theta(), c1.phi());
    switch (op.variant()) {
        case Variant::BSB:
            return walk_matrix(op.variant(), b1, coin(c1.theta() / 2, c1.phi()), n);
        case Variant::SQW:
            return walk_matrix(op.variant(), b1, coin(op.coin2().theta(), op.coin2().phi()), n);
        default:
            return walk_matrix(op.variant(), b1, b1, n);
    }
}

inline Vec to_vec(const dqwalk::WalkerState &s) {
    Vec v(static_cast<Eigen::Index>(s.amplitudes().size()));
    for (std::size_t i = 0; i < s.amplitudes().size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s.amplitudes()[i];
    }
    return v;
}

inline std::vector<double> distribution(const Vec &v, std::size_t n) {
    std::vector<double> p(n);
    for (std::size_t u = 0; u < n; ++u) {
        p[u] = std::norm(v(u)) + std::norm(v(n + u));
    }
    return p;
}

/// Coin-position entanglement entropy in bits via a Hermitian eigensolver.
inline double entropy(const Vec &v, std::size_t n) {
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (std::size_t u = 0; u < n; ++u) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                rho(a, b) += v(a * n + u) * std::conj(v(b * n + u));
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
    double s = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double lam = es.eigenvalues()(i);
        if (lam > 1e-15) {
            s -= lam * std::log2(lam);
        }
    }
    return s;
}

/// Fourier block <k| W |k> of a translation-invariant walk matrix, with
/// plane waves e^{i k u} on both chiralities. k must be 2 pi j / N.
inline Eigen::Matrix2cd fourier_block(const Mat &w, std::size_t n, double k) {
    Vec wave(static_cast<Eigen::Index>(n));
    for (std::size_t u = 0; u < n; ++u) {
        wave(u) = std::polar(1.0 / std::sqrt(static_cast<double>(n)), k * static_cast<double>(u));
    }
    Eigen::Matrix2cd block;
    for (int b = 0; b < 2; ++b) {
        Vec in = Vec::Zero(static_cast<Eigen::Index>(2 * n));
        in.segment(b * n, n) = wave;
        const Vec out = w * in;
        for (int a = 0; a < 2; ++a) {
            block(a, b) = wave.dot(out.segment(a * n, n));
        }
    }
    return block;
}

inline std::vector<Complex> random_amplitudes(std::mt19937_64 &rng, std::size_t count, bool real = false) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(count);
    double norm = 0.0;
    for (auto &z : v) {
        z = real ? Complex(g(rng), 0.0) : Complex(g(rng), g(rng));
        norm += std::norm(z);
    }
    for (auto &z : v) {
        z /= std::sqrt(norm);
    }
    return v;
}

inline double uniform(std::mt19937_64 &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double max_abs_diff(const Mat &a, const Mat &b) { return (a - b).cwiseAbs().maxCoeff(); }

/// Distance after removing the best global phase.
inline double phase_free_diff(const Mat &a, const Mat &b) {
    const Complex overlap = (b.adjoint() * a).trace();
    const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
    return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace oracle

#endif
