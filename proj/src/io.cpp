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

#include "dqwalk/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dqwalk {

namespace {

double parse_number(std::string_view s, std::string_view whole) {
    double value = 0.0;
    const char *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument("cannot parse angle '" + std::string(whole) + "'");
    }
    return value;
}

void write_number(std::ostream &out, double v) {
    if (std::isfinite(v)) {
        out << v;
    }
}

nlohmann::json series(const std::vector<double> &values) {
    nlohmann::json arr = nlohmann::json::array();
    for (double v : values) {
        arr.push_back(std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr));
    }
    return arr;
}

nlohmann::json coin_json(const CoinSpec &c) {
    return {{"theta", c.theta()}, {"phi", c.phi()}};
}

}  // namespace

double parse_angle(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    if (s.empty()) {
        throw std::invalid_argument("empty angle");
    }
    const auto pi_at = s.find("pi");
    if (pi_at == std::string::npos) {
        return parse_number(s, text);
    }

    // [sign][coef][*]pi[*factor][/divisor]
    std::string_view head(s.data(), pi_at);
    std::string_view tail(s.data() + pi_at + 2, s.size() - pi_at - 2);
    double sign = 1.0;
    if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
        sign = head.front() == '-' ? -1.0 : 1.0;
        head.remove_prefix(1);
    }
    if (!head.empty() && head.back() == '*') {
        head.remove_suffix(1);
    }
    double value = sign * (head.empty() ? 1.0 : parse_number(head, text)) * kPi;
    while (!tail.empty()) {
        const char op = tail.front();
        if (op != '*' && op != '/') {
            throw std::invalid_argument("cannot parse angle '" + std::string(text) + "'");
        }
        tail.remove_prefix(1);
        const auto next = tail.find_first_of("*/");
        const double operand = parse_number(tail.substr(0, next), text);
        if (op == '*') {
            value *= operand;
        } else {
            if (operand == 0.0) {
                throw std::invalid_argument("division by zero in angle '" + std::string(text) + "'");
            }
            value /= operand;
        }
        tail = next == std::string_view::npos ? std::string_view{} : tail.substr(next);
    }
    return value;
}

nlohmann::json state_to_json(const WalkerState &s) {
    nlohmann::json amps = nlohmann::json::array();
    for (const Complex &z : s.amplitudes()) {
        amps.push_back({z.real(), z.imag()});
    }
    return {{"k", s.lattice().qubits()}, {"basis_phi", s.basis_phi()}, {"amplitudes", std::move(amps)}};
}

WalkerState state_from_json(const nlohmann::json &j) {
    const Lattice lattice(j.at("k").get<int>());
    const auto &amps = j.at("amplitudes");
    if (!amps.is_array()) {
        throw std::invalid_argument("state JSON: amplitudes must be an array");
    }
    std::vector<Complex> v;
    v.reserve(amps.size());
    for (const auto &pair : amps) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("state JSON: each amplitude must be [re, im]");
        }
        v.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return WalkerState::from_amplitudes(lattice, std::move(v), j.at("basis_phi").get<double>());
}

nlohmann::json op_to_json(const WalkOperatorSpec &op) {
    nlohmann::json j = {{"variant", std::string(to_string(op.variant()))}};
    if (op.variant() == Variant::SQW) {
        j["coin1"] = coin_json(op.coin1());
        j["coin2"] = coin_json(op.coin2());
    } else {
        j["coin"] = coin_json(op.coin());
    }
    return j;
}

void write_spacetime_csv(std::ostream &out, const SpacetimeRecord &record) {
    if (!has_flag(record.observed, Observe::Distribution)) {
        throw std::invalid_argument("record has no position distribution");
    }
    const Lattice &lat = record.lattice;
    const auto n = static_cast<std::int64_t>(lat.size());
    out << std::setprecision(17);
    out << "t,x,P\n";
    for (std::size_t t = 0; t <= record.steps; ++t) {
        const auto row = record.distribution_row(t);
        for (std::int64_t x = -n / 2; x < n / 2; ++x) {
            out << t << ',' << x << ',' << row[lat.register_index(x)] << '\n';
        }
    }
}

void write_series_csv(std::ostream &out, const SpacetimeRecord &record) {
    out << std::setprecision(17);
    out << "t,pL,pR,entropy,mean_x\n";
    auto cell = [&](const std::vector<double> &v, std::size_t t) {
        if (t < v.size()) {
            write_number(out, v[t]);
        }
    };
    for (std::size_t t = 0; t <= record.steps; ++t) {
        out << t << ',';
        cell(record.p_left, t);
        out << ',';
        cell(record.p_right, t);
        out << ',';
        cell(record.entropy, t);
        out << ',';
        cell(record.mean_x, t);
        out << '\n';
    }
}

nlohmann::json record_metadata(const SpacetimeRecord &record) {
    nlohmann::json j;
    j["operator"] = op_to_json(record.op);
    j["lattice"] = {{"k", record.lattice.qubits()}, {"N", record.lattice.size()}, {"boundary", "periodic"}};
    j["position_convention"] = "x = ((u + N/2) mod N) - N/2 for register value u";
    j["basis_phi"] = record.basis_phi;
    j["steps"] = record.steps;
    j["wraparound"] = record.wraparound;
    if (record.wraparound) {
        j["warning"] = "steps >= N/2: the walker can wrap around the periodic lattice; mean_x is null from t = N/2";
    }
    j["series"] = {
        {"pL", series(record.p_left)},
        {"pR", series(record.p_right)},
        {"entropy", series(record.entropy)},
        {"mean_x", series(record.mean_x)},
    };
    return j;
}

void write_scaling_csv(std::ostream &out, const ScalingReport &report) {
    out << std::setprecision(17);
    out << "eps,error\n";
    for (std::size_t i = 0; i < report.epsilons.size(); ++i) {
        out << report.epsilons[i] << ',' << report.errors[i] << '\n';
    }
}

nlohmann::json gate_counts_to_json(const GateCounts &counts) {
    return {
        {"logical_gates", counts.logical_gates},
        {"decomposed_gates", counts.decomposed_gates},
        {"depth_estimate", counts.depth_estimate},
        {"steps", counts.steps},
        {"coin_rotations", counts.coin_rotations},
        {"controlled_shift_blocks", counts.controlled_shift_blocks},
        {"qubits", counts.qubits},
        {"work_qubits", counts.work_qubits},
    };
}

}  // namespace dqwalk
