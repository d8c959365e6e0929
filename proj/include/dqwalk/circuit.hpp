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

#ifndef DQWALK_CIRCUIT_HPP
#define DQWALK_CIRCUIT_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dqwalk/walk.hpp"

namespace dqwalk {

// Register layout: qubit 0 is the coin, qubits 1..k hold the position
// register little-endian (bit j of u on qubit j + 1), so u = 0 is |0...0>.
// The full computational-basis index of (c, u) is c + 2 u. Work qubits, if
// any, follow the position register.

enum class GateKind { X, RX, RY, RZ, H, MCX };

struct Control {
    int qubit = 0;
    /// Fires on |1> when true, on |0> otherwise.
    bool on_one = true;

    bool operator==(const Control &) const = default;
};

struct Gate {
    GateKind kind = GateKind::X;
    int target = 0;
    double angle = 0.0;
    std::vector<Control> controls;

    static Gate x(int q) { return {GateKind::X, q, 0.0, {}}; }
    static Gate h(int q) { return {GateKind::H, q, 0.0, {}}; }
    static Gate rx(int q, double a) { return {GateKind::RX, q, a, {}}; }
    static Gate ry(int q, double a) { return {GateKind::RY, q, a, {}}; }
    static Gate rz(int q, double a) { return {GateKind::RZ, q, a, {}}; }
    static Gate mcx(std::vector<Control> controls, int target) {
        return {GateKind::MCX, target, 0.0, std::move(controls)};
    }

    bool operator==(const Gate &) const = default;
};

std::string gate_name(const Gate &g);

struct ProgramInfo {
    std::size_t steps = 0;
    std::string variant;
    double theta = 0.0;
    double phi = 0.0;
    int position_qubits = 0;
    int work_qubits = 0;
    /// Coin operators actually emitted (zero-angle coins are elided).
    std::size_t coin_blocks = 0;
    /// Coin-controlled increment/decrement blocks.
    std::size_t shift_blocks = 0;
};

struct GateProgram {
    int num_qubits = 0;
    std::vector<Gate> gates;
    ProgramInfo info;

    /// Appends another program on the same register, summing the counters.
    void append(const GateProgram &other);
    /// Throws std::invalid_argument on out-of-range or repeated qubits or
    /// non-finite angles.
    void validate() const;
};

/// u -> u + 1 (mod 2^k) on position qubits 1..k of a (k+1)-qubit register:
/// MCX(qubits 1..j-1 -> qubit j) for j = k down to 1.
GateProgram compile_increment(int k);
/// Exact adjoint of compile_increment (reversed order, every gate
/// self-inverse).
GateProgram compile_decrement(int k);

/// Coin B_phi(theta) on qubit 0 as RZ(-phi), RX(theta), RZ(phi) in time
/// order. Trivial coins produce no gates; phi = 0 drops the RZ pair.
GateProgram compile_coin(const CoinSpec &coin, int k);

/// One walk step. The shift is a coin=1 controlled increment (right mover)
/// together with a coin=0 controlled decrement (left mover).
GateProgram compile_step(const WalkOperatorSpec &op, int k);

enum class PositionPrep { Point, Uniform };

/// Coin RY(theta0) then RZ(phi0) on qubit 0, which prepares
/// cos(theta0/2)|0> + e^{i phi0} sin(theta0/2)|1> up to a global phase;
/// Uniform adds H on every position qubit.
GateProgram compile_state_prep(double theta0, double phi0, PositionPrep position, int k);

/// Preparation followed by `steps` walk steps.
GateProgram compile_walk(const GateProgram &prep, const WalkOperatorSpec &op, int k, std::size_t steps);

/// Largest register accepted by simulate.
inline constexpr int kMaxSimulatedQubits = 20;

/// Ideal statevector execution starting from `initial` (default |0...0>).
std::vector<Complex> simulate(const GateProgram &program, std::optional<std::span<const Complex>> initial = {});

/// Drops work qubits from a statevector, throwing VerificationError if any
/// amplitude outside the all-zero work subspace exceeds tol.
std::vector<Complex> project_work_qubits(std::span<const Complex> state, int logical_qubits, double tol = 1e-10);

std::vector<Complex> to_register_order(const WalkerState &s);
WalkerState from_register_order(std::span<const Complex> amplitudes, const Lattice &lattice, double basis_phi);

/// Unitary of a program without work qubits, in c-major (c * N + u) order to
/// match dense_walk_matrix.
Eigen::MatrixXcd program_matrix(const GateProgram &program);

/// Action of a program on the first `logical_qubits` qubits (coin + k
/// position qubits) with all higher work qubits starting in |0>. Throws
/// VerificationError if a work qubit is left excited.
Eigen::MatrixXcd logical_matrix(const GateProgram &program, int logical_qubits);

/// Max column distance ||A e_i - e^{i a} R e_i|| after aligning one global
/// phase a = arg tr(R^dagger A).
double phase_aligned_distance(const Eigen::MatrixXcd &actual, const Eigen::MatrixXcd &reference);

/// Max over computational-basis inputs of ||program e_i - e^{i a} R e_i||,
/// with one global phase a aligned over the whole matrix. `reference` uses
/// c-major order.
double verify(const GateProgram &program, const Eigen::MatrixXcd &reference);

}  // namespace dqwalk

#endif
