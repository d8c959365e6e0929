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

#include "dqwalk/walk.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "dqwalk/observables.hpp"

namespace dqwalk {

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::SB:
            return "sb";
        case Variant::BS:
            return "bs";
        case Variant::BSB:
            return "bsb";
        case Variant::SBS:
            return "sbs";
        case Variant::SQW:
            return "sqw";
    }
    throw std::logic_error("unknown variant");
}

Variant parse_variant(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (Variant v : {Variant::SB, Variant::BS, Variant::BSB, Variant::SBS, Variant::SQW}) {
        if (lower == to_string(v)) {
            return v;
        }
    }
    throw std::invalid_argument("unknown walk operator '" + std::string(name) + "' (expected sb, bs, bsb, sbs or sqw)");
}

WalkOperatorSpec::WalkOperatorSpec(Variant variant, CoinSpec coin) : WalkOperatorSpec(variant, coin, CoinSpec{}) {
    if (variant == Variant::SQW) {
        throw std::invalid_argument("the split-step walk takes two coins; use WalkOperatorSpec::split_step");
    }
}

WalkOperatorSpec::WalkOperatorSpec(Variant variant, CoinSpec coin1, CoinSpec coin2)
    : variant_(variant), coin1_(coin1), coin2_(coin2) {
}

WalkOperatorSpec WalkOperatorSpec::split_step(CoinSpec coin1, CoinSpec coin2) {
    return WalkOperatorSpec(Variant::SQW, coin1, coin2);
}

const CoinSpec &WalkOperatorSpec::coin2() const {
    if (variant_ != Variant::SQW) {
        throw std::logic_error("only the split-step walk has a second coin");
    }
    return coin2_;
}

WalkOperatorSpec WalkOperatorSpec::rotated(double lambda) const {
    WalkOperatorSpec out = *this;
    out.coin1_ = CoinSpec(coin1_.theta(), coin1_.phi() + lambda);
    out.coin2_ = CoinSpec(coin2_.theta(), coin2_.phi() + lambda);
    return out;
}

void WalkOperatorSpec::check_basis(double basis_phi) const {
    auto check = [&](const CoinSpec &c, const char *which) {
        if (!c.is_trivial() && !same_basis(c.phi(), basis_phi)) {
            throw std::invalid_argument(
                std::string(which) + " axis angle " + std::to_string(c.phi()) +
                " does not match the state basis angle " + std::to_string(basis_phi));
        }
    };
    check(coin1_, "coin");
    if (variant_ == Variant::SQW) {
        check(coin2_, "second coin");
    }
}

double WalkOperatorSpec::basis_phi(double fallback) const {
    if (!coin1_.is_trivial()) {
        return coin1_.phi();
    }
    if (variant_ == Variant::SQW && !coin2_.is_trivial()) {
        return coin2_.phi();
    }
    return fallback;
}

namespace kernels {

void apply_coin(std::span<Complex> amplitudes, const Mat2 &u) {
    const std::size_t n = amplitudes.size() / 2;
    const Complex a = u(0, 0), b = u(0, 1), c = u(1, 0), d = u(1, 1);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex l = amplitudes[i];
        const Complex r = amplitudes[n + i];
        amplitudes[i] = a * l + b * r;
        amplitudes[n + i] = c * l + d * r;
    }
}

void apply_half_shift(std::span<Complex> amplitudes, HalfShift side) {
    const std::size_t n = amplitudes.size() / 2;
    if (side == HalfShift::Minus) {
        // new[u] = old[u + 1]
        auto left = amplitudes.subspan(0, n);
        std::rotate(left.begin(), left.begin() + 1, left.end());
    } else {
        // new[u] = old[u - 1]
        auto right = amplitudes.subspan(n, n);
        std::rotate(right.begin(), right.end() - 1, right.end());
    }
}

void apply_shift(std::span<Complex> amplitudes) {
    apply_half_shift(amplitudes, HalfShift::Minus);
    apply_half_shift(amplitudes, HalfShift::Plus);
}

StepRule::StepRule(const WalkOperatorSpec &op) : variant_(op.variant()) {
    const CoinSpec &c = op.coin1();
    switch (variant_) {
        case Variant::SB:
        case Variant::BS:
        case Variant::SBS:
            first_ = coin_matrix(c);
            break;
        case Variant::BSB:
            first_ = coin_matrix(c.theta() / 2, c.phi());
            break;
        case Variant::SQW:
            first_ = coin_matrix(c);
            second_ = coin_matrix(op.coin2());
            break;
    }
}

void StepRule::apply(std::span<Complex> amplitudes) const {
    switch (variant_) {
        case Variant::SB:
            apply_coin(amplitudes, first_);
            apply_shift(amplitudes);
            break;
        case Variant::BS:
            apply_shift(amplitudes);
            apply_coin(amplitudes, first_);
            break;
        case Variant::BSB:
            apply_coin(amplitudes, first_);
            apply_shift(amplitudes);
            apply_coin(amplitudes, first_);
            break;
        case Variant::SBS:
            apply_half_shift(amplitudes, HalfShift::Minus);
            apply_coin(amplitudes, first_);
            apply_half_shift(amplitudes, HalfShift::Plus);
            break;
        case Variant::SQW:
            apply_coin(amplitudes, first_);
            apply_half_shift(amplitudes, HalfShift::Minus);
            apply_coin(amplitudes, second_);
            apply_half_shift(amplitudes, HalfShift::Plus);
            break;
    }
}

}  // namespace kernels

namespace {

std::vector<Complex> copy_amplitudes(const WalkerState &s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

}  // namespace

WalkerState apply_coin(const WalkerState &s, const Mat2 &u) {
    auto v = copy_amplitudes(s);
    kernels::apply_coin(v, u);
    return WalkerState::from_amplitudes(s.lattice(), std::move(v), s.basis_phi());
}

WalkerState apply_shift(const WalkerState &s) {
    auto v = copy_amplitudes(s);
    kernels::apply_shift(v);
    return WalkerState::from_amplitudes(s.lattice(), std::move(v), s.basis_phi());
}

WalkerState apply_half_shift(const WalkerState &s, HalfShift side) {
    auto v = copy_amplitudes(s);
    kernels::apply_half_shift(v, side);
    return WalkerState::from_amplitudes(s.lattice(), std::move(v), s.basis_phi());
}

WalkerState step(const WalkerState &s, const WalkOperatorSpec &op) {
    op.check_basis(s.basis_phi());
    auto v = copy_amplitudes(s);
    kernels::StepRule(op).apply(v);
    return WalkerState::from_amplitudes(s.lattice(), std::move(v), s.basis_phi());
}

std::span<const double> SpacetimeRecord::distribution_row(std::size_t t) const {
    const std::size_t n = lattice.size();
    if (distribution.size() < (t + 1) * n) {
        throw std::out_of_range("distribution row " + std::to_string(t) + " not recorded");
    }
    return std::span<const double>(distribution).subspan(t * n, n);
}

Evolution evolve(const WalkerState &initial, const WalkOperatorSpec &op, std::size_t steps, Observe observe) {
    op.check_basis(initial.basis_phi());
    const Lattice &lattice = initial.lattice();
    const std::size_t n = lattice.size();

    SpacetimeRecord rec{.lattice = lattice, .op = op};
    rec.basis_phi = initial.basis_phi();
    rec.steps = steps;
    rec.observed = observe;
    rec.wraparound = steps >= n / 2;

    const bool want_p = has_flag(observe, Observe::Distribution);
    const bool want_chi = has_flag(observe, Observe::Chirality);
    const bool want_s = has_flag(observe, Observe::Entropy);
    const bool want_x = has_flag(observe, Observe::MeanX);
    if (want_p) {
        rec.distribution.resize((steps + 1) * n);
    }

    auto v = copy_amplitudes(initial);
    auto record_row = [&](std::size_t t) {
        if (want_p) {
            reductions::position_distribution(v, std::span<double>(rec.distribution).subspan(t * n, n));
        }
        if (want_chi) {
            auto chi = reductions::chirality_probabilities(v);
            rec.p_left.push_back(chi.left);
            rec.p_right.push_back(chi.right);
        }
        if (want_s) {
            rec.entropy.push_back(entropy_bits(reductions::reduced_coin_density(v)));
        }
        if (want_x) {
            rec.mean_x.push_back(t < n / 2 ? reductions::expectation_x(v, lattice)
                                           : std::numeric_limits<double>::quiet_NaN());
        }
    };

    const kernels::StepRule rule(op);
    record_row(0);
    for (std::size_t t = 1; t <= steps; ++t) {
        rule.apply(v);
        record_row(t);
    }
    WalkerState final_state = WalkerState::from_amplitudes(lattice, std::move(v), initial.basis_phi());
    return Evolution{std::move(rec), std::move(final_state)};
}

namespace {

Eigen::MatrixXcd coin_operator(const Mat2 &coin, std::size_t n) {
    // (coin x I_N) in c-major order.
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            m.block(r * n, c * n, n, n) = coin(r, c) * Eigen::MatrixXcd::Identity(n, n);
        }
    }
    return m;
}

// Translation T_delta |x> = |x + delta>.
Eigen::MatrixXcd translation(std::size_t n, int delta) {
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t to = (x + n + static_cast<std::size_t>(delta + static_cast<int>(n))) % n;
        t(to, x) = 1.0;
    }
    return t;
}

Eigen::MatrixXcd shift_operator(std::size_t n, bool move_left, bool move_right) {
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    s.block(0, 0, n, n) = move_left ? translation(n, -1) : Eigen::MatrixXcd::Identity(n, n);
    s.block(n, n, n, n) = move_right ? translation(n, +1) : Eigen::MatrixXcd::Identity(n, n);
    return s;
}

}  // namespace

Eigen::MatrixXcd dense_walk_matrix(const WalkOperatorSpec &op, const Lattice &lattice) {
    const std::size_t n = lattice.size();
    if (n > kDenseMaxSites) {
        throw std::invalid_argument(
            "dense walk matrix limited to N <= " + std::to_string(kDenseMaxSites) + ", got N = " + std::to_string(n));
    }
    const Eigen::MatrixXcd shift = shift_operator(n, true, true);
    const Eigen::MatrixXcd s_minus = shift_operator(n, true, false);
    const Eigen::MatrixXcd s_plus = shift_operator(n, false, true);
    const CoinSpec &c = op.coin1();
    switch (op.variant()) {
        case Variant::SB:
            return shift * coin_operator(coin_matrix(c), n);
        case Variant::BS:
            return coin_operator(coin_matrix(c), n) * shift;
        case Variant::BSB: {
            Eigen::MatrixXcd half = coin_operator(coin_matrix(c.theta() / 2, c.phi()), n);
            return half * shift * half;
        }
        case Variant::SBS:
            return s_plus * coin_operator(coin_matrix(c), n) * s_minus;
        case Variant::SQW:
            return s_plus * coin_operator(coin_matrix(op.coin2()), n) * s_minus * coin_operator(coin_matrix(c), n);
    }
    throw std::logic_error("unknown variant");
}

}  // namespace dqwalk
