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

#include "dqwalk/lattice_state.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dqwalk {

namespace {

double squared_norm(std::span<const Complex> v) {
    double total = 0.0;
    for (const auto &z : v) {
        total += std::norm(z);
    }
    return total;
}

// Applies the norm policy to a raw vector: renormalise small deviations,
// reject large ones with the measured norm in the message.
void enforce_unit_norm(std::vector<Complex> &v, const char *what) {
    double n = std::sqrt(squared_norm(v));
    double deviation = std::abs(n - 1.0);
    if (!std::isfinite(n) || deviation > kRenormalizeLimit) {
        std::ostringstream msg;
        msg << what << " is not normalised (norm = " << n << ")";
        throw std::invalid_argument(msg.str());
    }
    if (deviation > kNormTolerance) {
        for (auto &z : v) {
            z /= n;
        }
    }
}

std::vector<Complex> uniform_spinor(const Lattice &lattice, Complex left, Complex right) {
    const std::size_t n = lattice.size();
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Complex> v(2 * n);
    for (std::size_t u = 0; u < n; ++u) {
        v[u] = left * amp;
        v[n + u] = right * amp;
    }
    return v;
}

// diag(1, phase) on the coin index.
std::vector<Complex> scale_right_component(std::span<const Complex> amps, std::size_t n, Complex phase) {
    std::vector<Complex> out(amps.begin(), amps.end());
    for (std::size_t u = 0; u < n; ++u) {
        out[n + u] *= phase;
    }
    return out;
}

}  // namespace

Lattice::Lattice(int qubits) : qubits_(qubits) {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw std::invalid_argument("lattice qubit count must be in [1, 16], got " + std::to_string(qubits));
    }
}

std::size_t Lattice::wrap(std::int64_t u) const {
    auto n = static_cast<std::int64_t>(size());
    std::int64_t r = u % n;
    if (r < 0) {
        r += n;
    }
    return static_cast<std::size_t>(r);
}

std::int64_t Lattice::signed_coordinate(std::size_t u) const {
    auto n = static_cast<std::int64_t>(size());
    return ((static_cast<std::int64_t>(u) + n / 2) % n) - n / 2;
}

WalkerState::WalkerState(const Lattice &lattice, std::vector<Complex> amplitudes, double basis_phi)
    : lattice_(lattice), amplitudes_(std::move(amplitudes)), basis_phi_(reduce_angle(basis_phi)) {
}

WalkerState WalkerState::from_amplitudes(const Lattice &lattice, std::vector<Complex> amplitudes, double basis_phi) {
    if (amplitudes.size() != 2 * lattice.size()) {
        throw std::invalid_argument(
            "amplitude count " + std::to_string(amplitudes.size()) + " does not match 2N = " +
            std::to_string(2 * lattice.size()));
    }
    if (!std::isfinite(basis_phi)) {
        throw std::invalid_argument("basis angle must be finite");
    }
    enforce_unit_norm(amplitudes, "state");
    return WalkerState(lattice, std::move(amplitudes), basis_phi);
}

std::span<const Complex> WalkerState::slice(Chirality c) const {
    return std::span<const Complex>(amplitudes_).subspan(static_cast<std::size_t>(c) * size(), size());
}

double WalkerState::norm() const {
    return std::sqrt(squared_norm(amplitudes_));
}

WalkerState build_state(const InitialStateSpec &spec, const Lattice &lattice, double basis_phi) {
    if (!std::isfinite(spec.theta0) || !std::isfinite(spec.phi0)) {
        throw std::invalid_argument("initial coin angles must be finite");
    }
    const std::size_t n = lattice.size();
    std::vector<Complex> profile(n);
    if (const auto *point = std::get_if<PointSource>(&spec.profile)) {
        if (point->u0 >= n) {
            throw std::invalid_argument(
                "point source u0 = " + std::to_string(point->u0) + " outside lattice of size " + std::to_string(n));
        }
        profile[point->u0] = 1.0;
    } else {
        const auto &p = std::get<Profile>(spec.profile).amplitudes;
        if (p.size() != n) {
            throw std::invalid_argument(
                "profile length " + std::to_string(p.size()) + " does not match lattice size " + std::to_string(n));
        }
        profile = p;
        enforce_unit_norm(profile, "position profile");
    }

    const Complex left = std::cos(spec.theta0 / 2);
    const Complex right = std::polar(1.0, spec.phi0) * std::sin(spec.theta0 / 2);
    std::vector<Complex> v(2 * n);
    for (std::size_t u = 0; u < n; ++u) {
        v[u] = left * profile[u];
        v[n + u] = right * profile[u];
    }
    return WalkerState::from_amplitudes(lattice, std::move(v), basis_phi);
}

WalkerState dirac_plane_wave(const Lattice &lattice, int energy_sign) {
    if (energy_sign != 1 && energy_sign != -1) {
        throw std::invalid_argument("energy sign must be +1 or -1");
    }
    const double r = 1.0 / std::sqrt(2.0);
    return WalkerState::from_amplitudes(
        lattice, uniform_spinor(lattice, r, Complex(0, energy_sign * r)), kWeylMajorana);
}

WalkerState majorana_plane_wave(const Lattice &lattice, double delta) {
    return WalkerState::from_amplitudes(
        lattice, uniform_spinor(lattice, std::cos(delta), std::sin(delta)), kWeylMajorana);
}

WalkerState charge_conjugate(const WalkerState &s) {
    const double lambda = s.basis_phi() - kWeylMajorana;
    std::vector<Complex> conj(s.amplitudes().size());
    for (std::size_t i = 0; i < conj.size(); ++i) {
        conj[i] = std::conj(s.amplitudes()[i]);
    }
    auto out = scale_right_component(conj, s.size(), std::polar(1.0, 2.0 * lambda));
    return WalkerState::from_amplitudes(s.lattice(), std::move(out), s.basis_phi());
}

double majorana_residual(const WalkerState &s) {
    const WalkerState c = charge_conjugate(s);
    double total = 0.0;
    for (std::size_t i = 0; i < c.amplitudes().size(); ++i) {
        total += std::norm(s.amplitudes()[i] - c.amplitudes()[i]);
    }
    return std::sqrt(total);
}

WalkerState change_basis(const WalkerState &s, double lambda) {
    auto out = scale_right_component(s.amplitudes(), s.size(), std::polar(1.0, lambda));
    return WalkerState::from_amplitudes(s.lattice(), std::move(out), s.basis_phi() + lambda);
}

Complex inner_product(const WalkerState &a, const WalkerState &b) {
    if (!(a.lattice() == b.lattice())) {
        throw std::invalid_argument("inner product of states on different lattices");
    }
    Complex total = 0.0;
    for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
        total += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return total;
}

bool same_basis(double phi_a, double phi_b) {
    return std::abs(angle_difference(phi_a, phi_b)) <= 1e-12;
}

}  // namespace dqwalk
