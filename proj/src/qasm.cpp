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

#include "dqwalk/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dqwalk/io.hpp"

namespace dqwalk {

namespace {

int work_qubits_needed(const GateProgram &program) {
    int needed = 0;
    for (const Gate &g : program.gates) {
        if (g.kind == GateKind::MCX) {
            needed = std::max(needed, static_cast<int>(g.controls.size()) - 2);
        }
    }
    return needed;
}

void emit_positive_mcx(std::vector<Gate> &out, const std::vector<int> &controls, int target, int first_work) {
    auto ccx = [](int a, int b, int t) { return Gate::mcx({{a, true}, {b, true}}, t); };
    const std::size_t c = controls.size();
    if (c <= 2) {
        std::vector<Control> cs;
        for (int q : controls) {
            cs.push_back({q, true});
        }
        out.push_back(Gate::mcx(std::move(cs), target));
        return;
    }
    std::vector<Gate> compute;
    compute.push_back(ccx(controls[0], controls[1], first_work));
    for (std::size_t i = 2; i + 1 < c; ++i) {
        const int w = first_work + static_cast<int>(i) - 2;
        compute.push_back(ccx(controls[i], w, w + 1));
    }
    out.insert(out.end(), compute.begin(), compute.end());
    out.push_back(ccx(controls[c - 1], first_work + static_cast<int>(c) - 3, target));
    out.insert(out.end(), compute.rbegin(), compute.rend());
}

std::string format_angle(double a) {
    std::ostringstream s;
    s << std::setprecision(17) << a;
    return s.str();
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

std::string strip_comments(std::string_view text) {
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text.compare(i, 2, "//") == 0) {
            while (i < text.size() && text[i] != '\n') {
                ++i;
            }
            continue;
        }
        out.push_back(text[i++]);
    }
    return out;
}

}  // namespace

GateProgram decompose(const GateProgram &program) {
    program.validate();
    GateProgram out;
    out.info = program.info;
    const int work = work_qubits_needed(program);
    out.num_qubits = program.num_qubits + work;
    out.info.work_qubits = work;
    for (const Gate &g : program.gates) {
        if (g.kind != GateKind::MCX) {
            out.gates.push_back(g);
            continue;
        }
        std::vector<int> flipped;
        std::vector<int> controls;
        for (const Control &c : g.controls) {
            controls.push_back(c.qubit);
            if (!c.on_one) {
                flipped.push_back(c.qubit);
            }
        }
        for (int q : flipped) {
            out.gates.push_back(Gate::x(q));
        }
        emit_positive_mcx(out.gates, controls, g.target, program.num_qubits);
        for (int q : flipped) {
            out.gates.push_back(Gate::x(q));
        }
    }
    return out;
}

std::string export_qasm(const GateProgram &program) {
    const GateProgram low = decompose(program);
    std::ostringstream s;
    s << "OPENQASM 2.0;\n";
    s << "include \"qelib1.inc\";\n";
    s << "// q[0] is the coin: |0> left-handed (moves to u-1), |1> right-handed (moves to u+1).\n";
    s << "// q[1.." << program.info.position_qubits << "] hold the position register little-endian; u = 0 is |0...0>.\n";
    if (low.info.work_qubits > 0) {
        s << "// q[" << program.num_qubits << ".." << low.num_qubits - 1
          << "] are clean work qubits for multi-controlled X; they start and end in |0>.\n";
    }
    if (!program.info.variant.empty()) {
        s << "// walk: " << program.info.variant << ", theta = " << format_angle(program.info.theta)
          << ", phi = " << format_angle(program.info.phi) << ", steps = " << program.info.steps << "\n";
    }
    s << "qreg q[" << low.num_qubits << "];\n";
    for (const Gate &g : low.gates) {
        switch (g.kind) {
            case GateKind::X:
            case GateKind::H:
                s << gate_name(g) << " q[" << g.target << "];\n";
                break;
            case GateKind::RX:
            case GateKind::RY:
            case GateKind::RZ:
                s << gate_name(g) << "(" << format_angle(g.angle) << ") q[" << g.target << "];\n";
                break;
            case GateKind::MCX:
                if (g.controls.empty()) {
                    s << "x q[" << g.target << "];\n";
                } else if (g.controls.size() == 1) {
                    s << "cx q[" << g.controls[0].qubit << "], q[" << g.target << "];\n";
                } else {
                    s << "ccx q[" << g.controls[0].qubit << "], q[" << g.controls[1].qubit << "], q[" << g.target
                      << "];\n";
                }
                break;
        }
    }
    return s.str();
}

GateProgram parse_qasm(std::string_view text) {
    const std::string body = strip_comments(text);
    std::map<std::string, int> offsets;
    int total = 0;
    bool saw_header = false;
    GateProgram p;

    auto fail = [](const std::string &stmt, const std::string &why) {
        throw std::invalid_argument("QASM: " + why + " in '" + stmt + "'");
    };
    auto parse_operand = [&](const std::string &stmt, std::string arg) {
        arg = trim(arg);
        const auto open = arg.find('[');
        const auto close = arg.find(']');
        if (open == std::string::npos || close == std::string::npos || close < open) {
            fail(stmt, "expected reg[index]");
        }
        const std::string reg = trim(arg.substr(0, open));
        const auto it = offsets.find(reg);
        if (it == offsets.end()) {
            fail(stmt, "unknown register '" + reg + "'");
        }
        return it->second + std::stoi(arg.substr(open + 1, close - open - 1));
    };

    std::stringstream statements(body);
    std::string raw;
    while (std::getline(statements, raw, ';')) {
        const std::string stmt = trim(raw);
        if (stmt.empty()) {
            continue;
        }
        if (stmt.rfind("OPENQASM", 0) == 0) {
            if (trim(stmt.substr(8)) != "2.0") {
                fail(stmt, "only OpenQASM 2.0 is supported");
            }
            saw_header = true;
            continue;
        }
        if (stmt.rfind("include", 0) == 0) {
            continue;
        }
        if (stmt.rfind("qreg", 0) == 0) {
            const std::string decl = trim(stmt.substr(4));
            const auto open = decl.find('[');
            const auto close = decl.find(']');
            if (open == std::string::npos || close == std::string::npos) {
                fail(stmt, "malformed qreg");
            }
            offsets[trim(decl.substr(0, open))] = total;
            total += std::stoi(decl.substr(open + 1, close - open - 1));
            continue;
        }

        // name[(param)] operand, operand, ...
        std::size_t name_end = 0;
        while (name_end < stmt.size() && (std::isalnum(static_cast<unsigned char>(stmt[name_end])) ||
                                          stmt[name_end] == '_')) {
            ++name_end;
        }
        const std::string name = stmt.substr(0, name_end);
        std::string rest = stmt.substr(name_end);
        double angle = 0.0;
        bool has_param = false;
        if (!trim(rest).empty() && trim(rest)[0] == '(') {
            rest = trim(rest);
            const auto close = rest.find(')');
            if (close == std::string::npos) {
                fail(stmt, "unterminated parameter list");
            }
            angle = parse_angle(rest.substr(1, close - 1));
            has_param = true;
            rest = rest.substr(close + 1);
        }
        std::vector<int> qs;
        std::stringstream operands(rest);
        std::string operand;
        while (std::getline(operands, operand, ',')) {
            qs.push_back(parse_operand(stmt, operand));
        }

        auto expect = [&](std::size_t n_operands, bool param) {
            if (qs.size() != n_operands || has_param != param) {
                fail(stmt, "wrong operand or parameter count for '" + name + "'");
            }
        };
        if (name == "x") {
            expect(1, false);
            p.gates.push_back(Gate::x(qs[0]));
        } else if (name == "h") {
            expect(1, false);
            p.gates.push_back(Gate::h(qs[0]));
        } else if (name == "rx") {
            expect(1, true);
            p.gates.push_back(Gate::rx(qs[0], angle));
        } else if (name == "ry") {
            expect(1, true);
            p.gates.push_back(Gate::ry(qs[0], angle));
        } else if (name == "rz") {
            expect(1, true);
            p.gates.push_back(Gate::rz(qs[0], angle));
        } else if (name == "cx") {
            expect(2, false);
            p.gates.push_back(Gate::mcx({{qs[0], true}}, qs[1]));
        } else if (name == "ccx") {
            expect(3, false);
            p.gates.push_back(Gate::mcx({{qs[0], true}, {qs[1], true}}, qs[2]));
        } else {
            fail(stmt, "unsupported gate '" + name + "'");
        }
    }
    if (!saw_header) {
        throw std::invalid_argument("QASM: missing OPENQASM header");
    }
    p.num_qubits = total;
    p.validate();
    return p;
}

std::size_t circuit_depth(const GateProgram &program) {
    std::vector<std::size_t> level(static_cast<std::size_t>(program.num_qubits), 0);
    std::size_t depth = 0;
    for (const Gate &g : program.gates) {
        std::vector<int> qs{g.target};
        for (const Control &c : g.controls) {
            qs.push_back(c.qubit);
        }
        std::size_t layer = 0;
        for (int q : qs) {
            layer = std::max(layer, level[static_cast<std::size_t>(q)]);
        }
        ++layer;
        for (int q : qs) {
            level[static_cast<std::size_t>(q)] = layer;
        }
        depth = std::max(depth, layer);
    }
    return depth;
}

GateCounts gate_counts(const GateProgram &program) {
    const GateProgram low = decompose(program);
    GateCounts c;
    c.logical_gates = program.gates.size();
    c.decomposed_gates = low.gates.size();
    c.depth_estimate = circuit_depth(low);
    c.steps = program.info.steps;
    c.coin_rotations = program.info.coin_blocks;
    c.controlled_shift_blocks = program.info.shift_blocks;
    c.qubits = program.num_qubits;
    c.work_qubits = low.info.work_qubits;
    return c;
}

}  // namespace dqwalk
