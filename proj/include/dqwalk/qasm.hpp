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

#ifndef DQWALK_QASM_HPP
#define DQWALK_QASM_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "dqwalk/circuit.hpp"

namespace dqwalk {

/// Lowers a program to gates OpenQASM 2.0 can express directly: negative
/// controls become X-conjugated positive controls, and an MCX with c > 2
/// controls becomes the clean-ancilla Toffoli ladder
///
///   ccx c0 c1 w0; ccx c2 w0 w1; ... ; ccx c_{c-1} w_{c-3} t; (uncompute)
///
/// using c - 2 work qubits appended after the register. Work qubits start
/// and end in |0>.
GateProgram decompose(const GateProgram &program);

/// OpenQASM 2.0 text of decompose(program) on a single register `q`.
std::string export_qasm(const GateProgram &program);

/// Parses the OpenQASM 2.0 subset that export_qasm emits (qreg, x, h, rx,
/// ry, rz, cx, ccx). Angles may be numbers or simple pi expressions.
GateProgram parse_qasm(std::string_view text);

struct GateCounts {
    std::size_t logical_gates = 0;
    std::size_t decomposed_gates = 0;
    /// ASAP layer count of the decomposed program.
    std::size_t depth_estimate = 0;
    std::size_t steps = 0;
    std::size_t coin_rotations = 0;
    std::size_t controlled_shift_blocks = 0;
    int qubits = 0;
    int work_qubits = 0;
};

GateCounts gate_counts(const GateProgram &program);

std::size_t circuit_depth(const GateProgram &program);

}  // namespace dqwalk

#endif
