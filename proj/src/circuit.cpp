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

#include "dqwalk/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dqwalk {

namespace {

constexpr int kCoinQubit = 0;

void require_position_qubits(int k) {
    if (k < 1 || k > kMaxSimulatedQubits - 1) {
        throw std::invalid_argument("position qubit count must be in [1, 19], got " + std::to_string(k));
    }
}

GateProgram empty_program(int k) {
    GateProgram p;
    p.num_qubits = k + 1;
    p.info.position_qubits = k;
    return p;
}

GateProgram controlled(const GateProgram &p, Control c) {
    GateProgram out = p;
    for (Gate &g : out.gates) {
        g.controls.insert(g.controls.begin(), c);
    }
    out.info.shift_blocks = 1;
    return out;
}

// Row-major 2x2 matrix of a single-qubit gate.
Mat2 single_qubit_matrix(const Gate &g) {
    switch (g.kind) {
        case GateKind::X:
            return pauli_x();
        case GateKind::H: {
            Mat2 m;
            m << 1, 1, 1, -1;
            return m / std::sqrt(2.0);
        }
        case GateKind::RX:
            return rx(g.angle);
        case GateKind::RY:
            return ry(g.angle);
        case GateKind::RZ:
            return rz(g.angle);
        case GateKind::MCX:
            break;
    }
    throw std::logic_error("not a single-qubit gate");
}

}  // namespace

std::string gate_name(const Gate &g) {
    switch (g.kind) {
        case GateKind::X:
            return "x";
        case GateKind::RX:
            return "rx";
        case GateKind::RY:
            return "ry";
        case GateKind::RZ:
            return "rz";
        case GateKind::H:
            return "h";
        case GateKind::MCX:
            return "mcx";
    }
    return "?";
}

void GateProgram::append(const GateProgram &other) {
    if (other.num_qubits != num_qubits) {
        throw std::invalid_argument("cannot append programs on different registers");
    }
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    info.steps += other.info.steps;
    info.coin_blocks += other.info.coin_blocks;
    info.shift_blocks += other.info.shift_blocks;
    if (info.variant.empty()) {
        info.variant = other.info.variant;
        info.theta = other.info.theta;
        info.phi = other.info.phi;
    }
}

void GateProgram::validate() const {
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate &g = gates[i];
        auto fail = [&](const std::string &why) {
            throw std::invalid_argument("gate " + std::to_string(i) + " (" + gate_name(g) + "): " + why);
        };
        std::vector<int> used{g.target};
        for (const Control &c : g.controls) {
            used.push_back(c.qubit);
        }
        for (int q : used) {
            if (q < 0 || q >= num_qubits) {
                fail("qubit " + std::to_string(q) + " outside register of " + std::to_string(num_qubits));
            }
        }
        std::sort(used.begin(), used.end());
        if (std::adjacent_find(used.begin(), used.end()) != used.end()) {
            fail("repeated qubit");
        }
        if (!std::isfinite(g.angle)) {
            fail("non-finite angle");
        }
        if (g.kind != GateKind::MCX && !g.controls.empty()) {
            fail("only MCX gates take controls");
        }
    }
}

GateProgram compile_increment(int k) {
    require_position_qubits(k);
    GateProgram p = empty_program(k);
    for (int j = k; j >= 1; --j) {
        std::vector<Control> controls;
        for (int q = 1; q < j; ++q) {
            controls.push_back({q, true});
        }
        p.gates.push_back(Gate::mcx(std::move(controls), j));
    }
    return p;
}

GateProgram compile_decrement(int k) {
    GateProgram p = compile_increment(k);
    std::reverse(p.gates.begin(), p.gates.end());
    return p;
}

GateProgram compile_coin(const CoinSpec &coin, int k) {
    require_position_qubits(k);
    GateProgram p = empty_program(k);
    if (coin.is_trivial()) {
        return p;
    }
    const bool rotate_axis = coin.phi() != 0.0;
    if (rotate_axis) {
        p.gates.push_back(Gate::rz(kCoinQubit, -coin.phi()));
    }
    p.gates.push_back(Gate::rx(kCoinQubit, coin.theta()));
    if (rotate_axis) {
        p.gates.push_back(Gate::rz(kCoinQubit, coin.phi()));
    }
    p.info.coin_blocks = 1;
    return p;
}

GateProgram compile_step(const WalkOperatorSpec &op, int k) {
    require_position_qubits(k);
    const GateProgram left = controlled(compile_decrement(k), {kCoinQubit, false});
    const GateProgram right = controlled(compile_increment(k), {kCoinQubit, true});
    const CoinSpec &c = op.coin1();

    GateProgram p = empty_program(k);
    switch (op.variant()) {
        case Variant::SB:
            p.append(compile_coin(c, k));
            p.append(right);
            p.append(left);
            break;
        case Variant::BS:
            p.append(right);
            p.append(left);
            p.append(compile_coin(c, k));
            break;
        case Variant::BSB: {
            const CoinSpec half(c.theta() / 2, c.phi());
            p.append(compile_coin(half, k));
            p.append(right);
            p.append(left);
            p.append(compile_coin(half, k));
            break;
        }
        case Variant::SBS:
            p.append(left);
            p.append(compile_coin(c, k));
            p.append(right);
            break;
        case Variant::SQW:
            p.append(compile_coin(c, k));
            p.append(left);
            p.append(compile_coin(op.coin2(), k));
            p.append(right);
            break;
    }
    p.info.steps = 1;
    p.info.variant = std::string(to_string(op.variant()));
    p.info.theta = c.theta();
    p.info.phi = c.phi();
    return p;
}

GateProgram compile_state_prep(double theta0, double phi0, PositionPrep position, int k) {
    require_position_qubits(k);
    if (!std::isfinite(theta0) || !std::isfinite(phi0)) {
        throw std::invalid_argument("state preparation angles must be finite");
    }
    GateProgram p = empty_program(k);
    if (theta0 != 0.0) {
        p.gates.push_back(Gate::ry(kCoinQubit, theta0));
    }
    if (phi0 != 0.0) {
        p.gates.push_back(Gate::rz(kCoinQubit, phi0));
    }
    if (position == PositionPrep::Uniform) {
        for (int q = 1; q <= k; ++q) {
            p.gates.push_back(Gate::h(q));
        }
    }
    return p;
}

GateProgram compile_walk(const GateProgram &prep, const WalkOperatorSpec &op, int k, std::size_t steps) {
    GateProgram p = prep;
    const GateProgram one = compile_step(op, k);
    for (std::size_t t = 0; t < steps; ++t) {
        p.append(one);
    }
    p.info.variant = one.info.variant;
    p.info.theta = one.info.theta;
    p.info.phi = one.info.phi;
    return p;
}

std::vector<Complex> simulate(const GateProgram &program, std::optional<std::span<const Complex>> initial) {
    if (program.num_qubits < 1 || program.num_qubits > kMaxSimulatedQubits) {
        throw std::invalid_argument("simulation supports 1..20 qubits, got " + std::to_string(program.num_qubits));
    }
    program.validate();
    const std::size_t dim = std::size_t{1} << program.num_qubits;
    std::vector<Complex> state(dim);
    if (initial) {
        if (initial->size() != dim) {
            throw std::invalid_argument("initial state has " + std::to_string(initial->size()) +
                                        " amplitudes, register needs " + std::to_string(dim));
        }
        std::copy(initial->begin(), initial->end(), state.begin());
    } else {
        state[0] = 1.0;
    }

    for (const Gate &g : program.gates) {
        const std::size_t tbit = std::size_t{1} << g.target;
        if (g.kind == GateKind::MCX) {
            std::size_t mask = 0;
            std::size_t want = 0;
            for (const Control &c : g.controls) {
                mask |= std::size_t{1} << c.qubit;
                if (c.on_one) {
                    want |= std::size_t{1} << c.qubit;
                }
            }
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & tbit) == 0 && (i & mask) == want) {
                    std::swap(state[i], state[i | tbit]);
                }
            }
            continue;
        }
        const Mat2 m = single_qubit_matrix(g);
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & tbit) != 0) {
                continue;
            }
            const Complex a = state[i];
            const Complex b = state[i | tbit];
            state[i] = m(0, 0) * a + m(0, 1) * b;
            state[i | tbit] = m(1, 0) * a + m(1, 1) * b;
        }
    }
    return state;
}

std::vector<Complex> project_work_qubits(std::span<const Complex> state, int logical_qubits, double tol) {
    const std::size_t keep = std::size_t{1} << logical_qubits;
    if (state.size() < keep) {
        throw std::invalid_argument("state smaller than the logical register");
    }
    double leak = 0.0;
    for (std::size_t i = keep; i < state.size(); ++i) {
        leak = std::max(leak, std::abs(state[i]));
    }
    if (leak > tol) {
        throw VerificationError("work qubits not returned to |0>: leaked amplitude " + std::to_string(leak));
    }
    return {state.begin(), state.begin() + static_cast<std::ptrdiff_t>(keep)};
}

std::vector<Complex> to_register_order(const WalkerState &s) {
    const std::size_t n = s.size();
    std::vector<Complex> out(2 * n);
    for (int c = 0; c < 2; ++c) {
        for (std::size_t u = 0; u < n; ++u) {
            out[static_cast<std::size_t>(c) + 2 * u] = s.at(c, u);
        }
    }
    return out;
}

WalkerState from_register_order(std::span<const Complex> amplitudes, const Lattice &lattice, double basis_phi) {
    const std::size_t n = lattice.size();
    if (amplitudes.size() != 2 * n) {
        throw std::invalid_argument("register size does not match lattice");
    }
    std::vector<Complex> v(2 * n);
    for (int c = 0; c < 2; ++c) {
        for (std::size_t u = 0; u < n; ++u) {
            v[static_cast<std::size_t>(c) * n + u] = amplitudes[static_cast<std::size_t>(c) + 2 * u];
        }
    }
    return WalkerState::from_amplitudes(lattice, std::move(v), basis_phi);
}

Eigen::MatrixXcd program_matrix(const GateProgram &program) {
    if (program.num_qubits != program.info.position_qubits + 1 || program.info.position_qubits < 1) {
        throw std::invalid_argument("program matrix needs a coin + position register without work qubits");
    }
    return logical_matrix(program, program.num_qubits);
}

Eigen::MatrixXcd logical_matrix(const GateProgram &program, int logical_qubits) {
    if (logical_qubits < 2 || logical_qubits > program.num_qubits) {
        throw std::invalid_argument("logical register must hold a coin and at least one position qubit");
    }
    const std::size_t n = std::size_t{1} << (logical_qubits - 1);
    const std::size_t full = std::size_t{1} << program.num_qubits;
    Eigen::MatrixXcd m(2 * n, 2 * n);
    std::vector<Complex> basis(full);
    for (std::size_t col = 0; col < 2 * n; ++col) {
        // c-major column index -> register index.
        const std::size_t c = col / n;
        const std::size_t u = col % n;
        std::fill(basis.begin(), basis.end(), Complex{});
        basis[c + 2 * u] = 1.0;
        const auto out = project_work_qubits(simulate(program, std::span<const Complex>(basis)), logical_qubits);
        for (std::size_t row = 0; row < 2 * n; ++row) {
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = out[row / n + 2 * (row % n)];
        }
    }
    return m;
}

double phase_aligned_distance(const Eigen::MatrixXcd &actual, const Eigen::MatrixXcd &reference) {
    if (actual.rows() != reference.rows() || actual.cols() != reference.cols()) {
        throw std::invalid_argument("matrix shapes differ");
    }
    const Complex overlap = (reference.adjoint() * actual).trace();
    const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
    double worst = 0.0;
    for (Eigen::Index col = 0; col < actual.cols(); ++col) {
        worst = std::max(worst, (actual.col(col) - phase * reference.col(col)).norm());
    }
    return worst;
}

double verify(const GateProgram &program, const Eigen::MatrixXcd &reference) {
    const Eigen::Index dim = Eigen::Index{1} << program.num_qubits;
    if (reference.rows() != dim || reference.cols() != dim) {
        throw std::invalid_argument("reference is " + std::to_string(reference.rows()) + "x" +
                                    std::to_string(reference.cols()) + ", program acts on dimension " +
                                    std::to_string(dim));
    }
    return phase_aligned_distance(program_matrix(program), reference);
}

}  // namespace dqwalk
