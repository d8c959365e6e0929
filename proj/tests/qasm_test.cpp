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

#include <cmath>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "dqwalk/circuit.hpp"
#include "dqwalk/qasm.hpp"
#include "dqwalk/walk.hpp"
#include "oracles.hpp"

namespace dqwalk {
namespace {

TEST(Decompose, ToffoliLadderReproducesWideControls) {
    std::mt19937_64 rng(81);
    for (int controls = 1; controls <= 5; ++controls) {
        GateProgram p;
        p.num_qubits = controls + 1;
        std::vector<Control> cs;
        for (int q = 0; q < controls; ++q) {
            cs.push_back({q, (rng() & 1u) != 0});
        }
        p.gates.push_back(Gate::mcx(cs, controls));
        const GateProgram d = decompose(p);
        EXPECT_EQ(d.num_qubits, p.num_qubits + std::max(0, controls - 2));
        for (const Gate &g : d.gates) {
            EXPECT_LE(g.controls.size(), 2u);
            for (const Control &c : g.controls) {
                EXPECT_TRUE(c.on_one);
            }
        }
        const auto dim = std::size_t{1} << p.num_qubits;
        for (std::size_t in = 0; in < dim; ++in) {
            std::vector<Complex> a(dim);
            a[in] = 1.0;
            std::vector<Complex> b(std::size_t{1} << d.num_qubits);
            b[in] = 1.0;
            const auto ra = simulate(p, std::span<const Complex>(a));
            const auto rb = project_work_qubits(simulate(d, std::span<const Complex>(b)), p.num_qubits);
            for (std::size_t i = 0; i < dim; ++i) {
                EXPECT_NEAR(std::abs(ra[i] - rb[i]), 0.0, 1e-15);
            }
        }
    }
}

TEST(Qasm, RoundTripPreservesStepUnitary) {
    for (int k = 1; k <= 3; ++k) {
        for (Variant v : {Variant::SB, Variant::BS, Variant::BSB, Variant::SBS}) {
            const WalkOperatorSpec op(v, CoinSpec(0.77, kWeylMajorana));
            const GateProgram step = compile_step(op, k);
            const GateProgram parsed = parse_qasm(export_qasm(step));
            const double err =
                phase_aligned_distance(logical_matrix(parsed, k + 1), oracle::walk_matrix(op, std::size_t{1} << k));
            EXPECT_LT(err, 1e-10) << to_string(v) << " k=" << k;
        }
    }
}

TEST(Qasm, ExportHasHeaderAndSingleRegister) {
    const GateProgram p = compile_step(WalkOperatorSpec(Variant::SB, CoinSpec(1.0, 0.5)), 4);
    const std::string text = export_qasm(p);
    EXPECT_EQ(text.rfind("OPENQASM 2.0;", 0), 0u);
    EXPECT_NE(text.find("include \"qelib1.inc\";"), std::string::npos);
    EXPECT_NE(text.find("qreg q["), std::string::npos);
    EXPECT_EQ(text.find("qreg", text.find("qreg") + 1), std::string::npos);
}

TEST(Qasm, ParsesHandWrittenProgram) {
    const std::string text =
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n"
        "qreg a[1]; qreg b[2];\n"
        "// comment line\n"
        "h a[0];\nrz(pi/2) b[1];\ncx a[0], b[0];\nccx a[0], b[0], b[1]; // trailing\n";
    const GateProgram p = parse_qasm(text);
    EXPECT_EQ(p.num_qubits, 3);
    ASSERT_EQ(p.gates.size(), 4u);
    EXPECT_EQ(p.gates[1].kind, GateKind::RZ);
    EXPECT_EQ(p.gates[1].target, 2);
    EXPECT_NEAR(p.gates[1].angle, oracle::kPi / 2, 1e-15);
    EXPECT_EQ(p.gates[3].controls.size(), 2u);
}

TEST(Qasm, RejectsMalformedInput) {
    EXPECT_THROW(parse_qasm("qreg q[1]; x q[0];"), std::invalid_argument);
    EXPECT_THROW(parse_qasm("OPENQASM 3.0; qreg q[1];"), std::invalid_argument);
    EXPECT_THROW(parse_qasm("OPENQASM 2.0; qreg q[1]; u3(1,2,3) q[0];"), std::invalid_argument);
    EXPECT_THROW(parse_qasm("OPENQASM 2.0; qreg q[1]; x r[0];"), std::invalid_argument);
    EXPECT_THROW(parse_qasm("OPENQASM 2.0; qreg q[1]; x q[1];"), std::invalid_argument);
    EXPECT_THROW(parse_qasm("OPENQASM 2.0; qreg q[1]; rx q[0];"), std::invalid_argument);
}

TEST(Depth, CountsParallelLayers) {
    GateProgram p;
    p.num_qubits = 3;
    p.gates = {Gate::h(0), Gate::h(1), Gate::h(2), Gate::mcx({{0, true}}, 1), Gate::x(2)};
    EXPECT_EQ(circuit_depth(p), 2u);
}

TEST(GateCounts, ReportsWalkStructure) {
    const int k = 4;
    const WalkOperatorSpec op(Variant::SB, CoinSpec(oracle::kPi / 2, kWeylMajorana));
    const GateProgram prog = compile_walk(compile_state_prep(oracle::kPi / 2, 0, PositionPrep::Point, k), op, k, 7);
    const GateCounts c = gate_counts(prog);
    EXPECT_EQ(c.qubits, 5);
    EXPECT_EQ(c.steps, 7u);
    EXPECT_EQ(c.coin_rotations, 7u);
    EXPECT_EQ(c.controlled_shift_blocks, 14u);
    EXPECT_GT(c.decomposed_gates, c.logical_gates);
    EXPECT_GT(c.work_qubits, 0);

    const GateProgram free_walk =
        compile_walk(compile_state_prep(0, 0, PositionPrep::Point, k), WalkOperatorSpec(Variant::SB, CoinSpec(0, 0)), k, 3);
    EXPECT_EQ(gate_counts(free_walk).coin_rotations, 0u);
}

}  // namespace
}  // namespace dqwalk
