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

#ifndef DQWALK_LATTICE_STATE_HPP
#define DQWALK_LATTICE_STATE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "dqwalk/linalg.hpp"

namespace dqwalk {

/// Coin angle of the Weyl-Dirac basis (gamma^0 = sigma_x).
inline constexpr double kWeylDirac = 0.0;
/// Coin angle of the Weyl-Majorana basis (gamma^0 = sigma_y); every walk
/// operator is real here.
inline constexpr double kWeylMajorana = kPi / 2.0;

inline constexpr double kNormTolerance = 1e-10;
/// Inputs whose norm deviates by less than this are renormalised, larger
/// deviations are rejected.
inline constexpr double kRenormalizeLimit = 1e-6;

/// Periodic one-dimensional lattice of N = 2^k sites addressed by k qubits.
///
/// Sites are labelled by the register value u in [0, N). Signed observables
/// use the coordinate x = ((u + N/2) mod N) - N/2, so u = 0 is the origin,
/// u = N - 1 is x = -1 and the site u = N/2 is x = -N/2.
class Lattice {
   public:
    static constexpr int kMaxQubits = 16;

    explicit Lattice(int qubits);

    int qubits() const { return qubits_; }
    std::size_t size() const { return std::size_t{1} << qubits_; }

    std::size_t wrap(std::int64_t u) const;
    std::int64_t signed_coordinate(std::size_t u) const;
    std::size_t register_index(std::int64_t x) const { return wrap(x); }

    bool operator==(const Lattice &) const = default;

   private:
    int qubits_;
};

enum class Chirality : int { Left = 0, Right = 1 };

/// Discrete spinor field on a lattice: amplitudes psi(c, u) with c = 0 the
/// left-handed and c = 1 the right-handed component.
///
/// Storage is c-major (index c * N + u). The state carries the coin-basis
/// angle its components are expressed in, so that charge conjugation needs
/// no outside convention. Always unit norm.
class WalkerState {
   public:
    /// Validates the norm: deviations below kRenormalizeLimit are corrected,
    /// anything larger throws std::invalid_argument.
    static WalkerState from_amplitudes(const Lattice &lattice, std::vector<Complex> amplitudes, double basis_phi);

    const Lattice &lattice() const { return lattice_; }
    double basis_phi() const { return basis_phi_; }
    std::size_t size() const { return lattice_.size(); }

    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<const Complex> slice(Chirality c) const;
    const Complex &at(int c, std::size_t u) const { return amplitudes_[static_cast<std::size_t>(c) * size() + u]; }

    double norm() const;

   private:
    WalkerState(const Lattice &lattice, std::vector<Complex> amplitudes, double basis_phi);

    Lattice lattice_;
    std::vector<Complex> amplitudes_;
    double basis_phi_;
};

struct PointSource {
    std::size_t u0 = 0;
};

/// Arbitrary normalised position profile D(u), one entry per lattice site.
struct Profile {
    std::vector<Complex> amplitudes;
};

/// Separable initial state (cos(theta0/2)|0> + e^{i phi0} sin(theta0/2)|1>) (x) D.
struct InitialStateSpec {
    double theta0 = 0.0;
    double phi0 = 0.0;
    std::variant<PointSource, Profile> profile = PointSource{};
};

WalkerState build_state(const InitialStateSpec &spec, const Lattice &lattice, double basis_phi);

/// Zero-momentum Dirac plane wave (1, +-i)/sqrt(2) (x) uniform, in the
/// Weyl-Majorana basis. energy_sign is +1 or -1.
WalkerState dirac_plane_wave(const Lattice &lattice, int energy_sign);

/// Zero-momentum Majorana plane wave (cos delta, sin delta) (x) uniform, in
/// the Weyl-Majorana basis.
WalkerState majorana_plane_wave(const Lattice &lattice, double delta);

/// Charge conjugate in the state's own basis: C conj(s) with
/// C = diag(1, e^{2i(basis_phi - pi/2)}). Plain conjugation in the
/// Weyl-Majorana basis, sigma_z conj(s) in the Weyl-Dirac basis.
WalkerState charge_conjugate(const WalkerState &s);

/// ||s - charge_conjugate(s)||_2; zero iff s obeys the Majorana condition.
double majorana_residual(const WalkerState &s);

/// Coin-basis rotation diag(1, e^{i lambda}) applied at every site; this is
/// R_z(lambda) up to the global phase e^{i lambda / 2}. The recorded basis
/// angle advances by lambda.
WalkerState change_basis(const WalkerState &s, double lambda);

/// sum conj(a) b. Throws on lattice mismatch.
Complex inner_product(const WalkerState &a, const WalkerState &b);

/// True when the two basis angles agree modulo 2 pi within 1e-12.
bool same_basis(double phi_a, double phi_b);

}  // namespace dqwalk

#endif
