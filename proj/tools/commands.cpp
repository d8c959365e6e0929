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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqwalk/bloch.hpp"
#include "dqwalk/circuit.hpp"
#include "dqwalk/io.hpp"
#include "dqwalk/momentum.hpp"
#include "dqwalk/observables.hpp"
#include "dqwalk/qasm.hpp"
#include "dqwalk/walk.hpp"

namespace dqwalk::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

std::string fmt(double v, int precision = 6) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

std::vector<double> parse_angle_list(const std::string &text) {
    std::vector<double> out;
    for (const auto &part : split(text, ',')) {
        out.push_back(parse_angle(part));
    }
    return out;
}

std::vector<Variant> parse_variant_list(const std::string &text, bool allow_sqw) {
    if (text == "all") {
        return {Variant::SB, Variant::BS, Variant::BSB, Variant::SBS};
    }
    std::vector<Variant> out;
    for (const auto &part : split(text, ',')) {
        const Variant v = parse_variant(part);
        if (v == Variant::SQW && !allow_sqw) {
            throw UsageError("this command does not accept the split-step (sqw) operator");
        }
        out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Shared option groups.

struct OperatorOptions {
    std::string op = "sb";
    std::string theta = "pi/2";
    std::string phi = "pi/2";
    std::string theta2;
    std::string phi2;

    void attach(CLI::App &app) {
        app.add_option("--op", op, "Walk operator: sb, bs, bsb, sbs or sqw")->capture_default_str();
        app.add_option("--theta", theta, "Coin angle (radians or pi fractions)")->capture_default_str();
        app.add_option("--phi", phi, "Coin basis angle")->capture_default_str();
        app.add_option("--theta2", theta2, "Second coin angle (sqw only; default --theta)");
        app.add_option("--phi2", phi2, "Second coin basis angle (sqw only; default --phi)");
    }

    WalkOperatorSpec build() const {
        const Variant v = parse_variant(op);
        const CoinSpec c1(parse_angle(theta), parse_angle(phi));
        if (v != Variant::SQW) {
            if (!theta2.empty() || !phi2.empty()) {
                throw UsageError("--theta2/--phi2 only apply to --op sqw");
            }
            return WalkOperatorSpec(v, c1);
        }
        const CoinSpec c2(parse_angle(theta2.empty() ? theta : theta2), parse_angle(phi2.empty() ? phi : phi2));
        return WalkOperatorSpec::split_step(c1, c2);
    }
};

struct InitOptions {
    enum class Kind { Point, Uniform, MajoranaPlane, DiracPlane, ProfileFile, StateFile };
    Kind kind = Kind::Point;
    double theta0 = 0.0;
    double phi0 = 0.0;
    std::int64_t x0 = 0;
    double delta = 0.0;
    int sign = 1;
    std::string path;
};

InitOptions parse_init(const std::string &text) {
    InitOptions init;
    for (const auto &raw : split(text, ',')) {
        if (raw.empty()) {
            continue;
        }
        const auto eq = raw.find('=');
        if (eq == std::string::npos) {
            if (raw == "point") {
                init.kind = InitOptions::Kind::Point;
            } else if (raw == "uniform") {
                init.kind = InitOptions::Kind::Uniform;
            } else if (raw == "majorana-plane") {
                init.kind = InitOptions::Kind::MajoranaPlane;
            } else if (raw == "dirac-plane") {
                init.kind = InitOptions::Kind::DiracPlane;
            } else {
                throw UsageError("unknown initial state '" + raw + "'");
            }
            continue;
        }
        const std::string key = raw.substr(0, eq);
        const std::string value = raw.substr(eq + 1);
        if (key == "theta0") {
            init.theta0 = parse_angle(value);
        } else if (key == "phi0") {
            init.phi0 = parse_angle(value);
        } else if (key == "x0") {
            init.x0 = std::stoll(value);
        } else if (key == "delta") {
            init.delta = parse_angle(value);
        } else if (key == "sign") {
            init.sign = std::stoi(value);
            if (init.sign != 1 && init.sign != -1) {
                throw UsageError("sign must be +1 or -1");
            }
        } else if (key == "profile") {
            init.kind = InitOptions::Kind::ProfileFile;
            init.path = value;
        } else if (key == "state") {
            init.kind = InitOptions::Kind::StateFile;
            init.path = value;
        } else {
            throw UsageError("unknown initial-state key '" + key + "'");
        }
    }
    return init;
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

WalkerState in_basis(WalkerState s, double basis_phi) {
    if (same_basis(s.basis_phi(), basis_phi)) {
        return s;
    }
    return change_basis(s, basis_phi - s.basis_phi());
}

WalkerState make_state(const InitOptions &init, const Lattice &lattice, const WalkOperatorSpec &op) {
    const double basis = op.basis_phi();
    switch (init.kind) {
        case InitOptions::Kind::Point:
            return build_state({init.theta0, init.phi0, PointSource{lattice.register_index(init.x0)}}, lattice, basis);
        case InitOptions::Kind::Uniform: {
            const double a = 1.0 / std::sqrt(static_cast<double>(lattice.size()));
            return build_state({init.theta0, init.phi0, Profile{std::vector<Complex>(lattice.size(), a)}}, lattice,
                               basis);
        }
        case InitOptions::Kind::MajoranaPlane:
            return in_basis(majorana_plane_wave(lattice, init.delta), basis);
        case InitOptions::Kind::DiracPlane:
            return in_basis(dirac_plane_wave(lattice, init.sign), basis);
        case InitOptions::Kind::ProfileFile: {
            // A JSON array of [re, im] pairs indexed by register value u.
            const json j = read_json_file(init.path);
            std::vector<Complex> profile;
            for (const auto &pair : j) {
                profile.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
            }
            return build_state({init.theta0, init.phi0, Profile{std::move(profile)}}, lattice, basis);
        }
        case InitOptions::Kind::StateFile: {
            WalkerState s = state_from_json(read_json_file(init.path));
            if (!(s.lattice() == lattice)) {
                throw UsageError("state file has k=" + std::to_string(s.lattice().qubits()) + ", --qubits is " +
                                 std::to_string(lattice.qubits()));
            }
            return in_basis(std::move(s), basis);
        }
    }
    throw std::logic_error("unhandled initial state kind");
}

// ---------------------------------------------------------------------------
// Output handling.

class Output {
   public:
    explicit Output(const std::string &flag) {
        if (!flag.empty()) {
            dir_ = flag;
        } else if (const char *env = std::getenv("DQWALK_OUT"); env != nullptr && *env != '\0') {
            dir_ = env;
        } else {
            dir_ = ".";
        }
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (!fs::is_directory(dir_)) {
            throw UsageError("output directory '" + dir_.string() + "' cannot be created");
        }
    }

    fs::path path(const std::string &name) const { return dir_ / name; }

    template <typename Writer>
    fs::path write(const std::string &name, Writer &&writer) const {
        const fs::path p = path(name);
        std::ofstream out(p);
        if (!out) {
            throw UsageError("cannot write '" + p.string() + "'");
        }
        writer(out);
        return p;
    }

    fs::path write_json(const std::string &name, const json &j) const {
        return write(name, [&](std::ostream &os) { os << j.dump(2) << '\n'; });
    }

   private:
    fs::path dir_;
};

json sidecar(const std::string &command, const std::string &data_file, const std::string &columns) {
    return {{"generator", "dqwalk"}, {"command", command}, {"data_file", data_file}, {"columns", columns}};
}

// ---------------------------------------------------------------------------
// Subcommands.

struct RunArgs {
    OperatorOptions op;
    std::size_t steps = 16;
    int qubits = 7;
    std::string init = "theta0=pi/2,phi0=0";
    std::string prefix = "run";
    std::string checkpoint;
    std::string out;
};

int cmd_run(const RunArgs &a, std::ostream &out, std::ostream &err) {
    const WalkOperatorSpec op = a.op.build();
    const Lattice lattice(a.qubits);
    const WalkerState initial = make_state(parse_init(a.init), lattice, op);
    const Output dir(a.out);

    const Evolution ev = evolve(initial, op, a.steps, Observe::All);
    const SpacetimeRecord &rec = ev.record;

    json meta = record_metadata(rec);
    meta["initial_state"] = a.init;
    meta["final_norm_deviation"] = std::abs(ev.final_state.norm() - 1.0);

    const std::string spacetime = a.prefix + "_spacetime.csv";
    const std::string series = a.prefix + "_observables.csv";
    dir.write(spacetime, [&](std::ostream &os) { write_spacetime_csv(os, rec); });
    dir.write(series, [&](std::ostream &os) { write_series_csv(os, rec); });

    json st = sidecar("run", spacetime, "t,x,P");
    st.update(meta);
    dir.write_json(a.prefix + "_spacetime.json", st);
    json ob = sidecar("run", series, "t,pL,pR,entropy,mean_x");
    ob.update(meta);
    ob.erase("series");
    dir.write_json(a.prefix + "_observables.json", ob);

    if (!a.checkpoint.empty()) {
        dir.write_json(a.checkpoint, state_to_json(ev.final_state));
    }
    if (rec.wraparound) {
        err << "warning: " << a.steps << " steps on N=" << lattice.size()
            << " sites can wrap around the periodic lattice (see metadata)\n";
    }
    out << "run: " << to_string(op.variant()) << ", N=" << lattice.size() << ", T=" << a.steps
        << ", final pL=" << fmt(rec.p_left.back()) << " pR=" << fmt(rec.p_right.back())
        << " S=" << fmt(rec.entropy.back()) << "\n";
    out << "wrote " << dir.path(spacetime).string() << " and " << dir.path(series).string() << "\n";
    return kExitOk;
}

struct DispersionArgs {
    std::string ops = "all";
    std::string theta = "pi/2";
    std::string phi = "pi/2";
    std::size_t points = 64;
    std::string out;
};

int cmd_dispersion(const DispersionArgs &a, std::ostream &out) {
    if (a.points < 2) {
        throw UsageError("--points must be at least 2");
    }
    const double theta = parse_angle(a.theta);
    const CoinSpec coin(theta, parse_angle(a.phi));
    const Output dir(a.out);
    const double expected_velocity = std::abs(std::cos(coin.theta() / 2));
    bool all_ok = true;

    for (Variant v : parse_variant_list(a.ops, false)) {
        const WalkOperatorSpec op(v, coin);
        const std::string name = "dispersion_" + std::string(to_string(v)) + ".csv";
        double worst = 0.0;
        dir.write(name, [&](std::ostream &os) {
            os << std::setprecision(17) << "k,omega_plus,omega_minus,omega_eq42\n";
            for (std::size_t j = 0; j < a.points; ++j) {
                const double k = -kPi + kTwoPi * static_cast<double>(j + 1) / static_cast<double>(a.points);
                const Eigenphases e = eigenphases(walk_block(op, k));
                const double w = dispersion_omega(theta, k);
                worst = std::max({worst, std::abs(e.plus - w), std::abs(e.minus + w)});
                os << k << ',' << e.plus << ',' << e.minus << ',' << w << '\n';
            }
        });
        const double velocity = max_group_velocity(op);
        const bool ok = worst <= 1e-10 && std::abs(velocity - expected_velocity) <= 1e-6;
        all_ok = all_ok && ok;

        json meta = sidecar("dispersion", name, "k,omega_plus,omega_minus,omega_eq42");
        meta["operator"] = op_to_json(op);
        meta["k_grid"] = "k_j = -pi + 2 pi (j + 1) / points, j = 0..points-1";
        meta["points"] = a.points;
        meta["max_eigenphase_deviation"] = worst;
        meta["max_group_velocity"] = velocity;
        meta["expected_max_group_velocity"] = expected_velocity;
        meta["pass"] = ok;
        dir.write_json("dispersion_" + std::string(to_string(v)) + ".json", meta);

        out << to_string(v) << ": max |omega - arccos(cos(theta/2) cos k)| = " << fmt(worst, 3)
            << ", max group velocity = " << fmt(velocity, 10) << " (expected " << fmt(expected_velocity, 10)
            << ") " << (ok ? "pass" : "FAIL") << "\n";
    }
    return all_ok ? kExitOk : kExitVerification;
}

struct OrderArgs {
    std::string ops = "sb";
    double kappa = 1.0;
    double m = 1.0;
    std::string phi = "pi/2";
    std::string eps = "0.1,0.05,0.02,0.01,0.005,0.002";
    double tolerance = 0.1;
    std::string out;
};

int cmd_order(const OrderArgs &a, std::ostream &out) {
    std::vector<double> eps;
    for (const auto &part : split(a.eps, ',')) {
        eps.push_back(std::stod(part));
    }
    const double phi = parse_angle(a.phi);
    const Output dir(a.out);
    bool all_ok = true;

    for (Variant v : parse_variant_list(a.ops, false)) {
        const ScalingReport report = order_fit(v, a.kappa, a.m, phi, eps);
        const int expected = expected_local_order(v);
        const bool ok = std::abs(report.fitted_slope - expected) <= a.tolerance;
        all_ok = all_ok && ok;

        const std::string name = "order_" + std::string(to_string(v)) + ".csv";
        dir.write(name, [&](std::ostream &os) { write_scaling_csv(os, report); });
        json meta = sidecar("order", name, "eps,error");
        meta["variant"] = std::string(to_string(v));
        meta["kappa"] = a.kappa;
        meta["m"] = a.m;
        meta["phi"] = phi;
        meta["fitted_slope"] = report.fitted_slope;
        meta["expected_slope"] = expected;
        meta["tolerance"] = a.tolerance;
        meta["pass"] = ok;
        dir.write_json("order_" + std::string(to_string(v)) + ".json", meta);

        out << to_string(v) << ": slope " << fmt(report.fitted_slope, 6) << " (expected " << expected << " +- "
            << a.tolerance << ") " << (ok ? "pass" : "FAIL") << "\n";
    }
    return all_ok ? kExitOk : kExitVerification;
}

struct AlphaArgs {
    std::string ops = "sb,bsb,sbs";
    std::string thetas;
    std::size_t points = 16;
    std::size_t steps = 7;
    int qubits = 7;
    std::string phi = "pi/2";
    std::string out;
};

double alpha_closed_form_t1(Variant v, double theta) {
    switch (v) {
        case Variant::SB:
            return theta;
        case Variant::BSB:
            return theta / 2;
        default:
            return 0.0;
    }
}

int cmd_alpha(const AlphaArgs &a, std::ostream &out) {
    const Lattice lattice(a.qubits);
    if (a.steps >= lattice.size() / 2) {
        throw UsageError("--steps must be below N/2 = " + std::to_string(lattice.size() / 2) + " for --qubits " +
                         std::to_string(a.qubits));
    }
    std::vector<double> thetas;
    if (!a.thetas.empty()) {
        thetas = parse_angle_list(a.thetas);
    } else {
        for (std::size_t j = 0; j < a.points; ++j) {
            thetas.push_back(kPi * static_cast<double>(j) / static_cast<double>(a.points));
        }
    }
    const double phi = parse_angle(a.phi);
    const Output dir(a.out);
    const std::vector<Variant> variants = parse_variant_list(a.ops, false);

    json rows = json::array();
    dir.write("alpha.csv", [&](std::ostream &os) {
        os << std::setprecision(17) << "operator,theta,alpha,alpha_t1_closed_form\n";
        for (Variant v : variants) {
            for (double theta : thetas) {
                const WalkOperatorSpec op(v, CoinSpec(theta, phi));
                const BlochForm form = x_moment_form(op, a.steps, lattice);
                const double b = std::sqrt(form.bx * form.bx + form.by * form.by + form.bz * form.bz);
                os << to_string(v) << ',' << theta << ',';
                double alpha = std::nan("");
                if (b >= 1e-9) {
                    alpha = alpha_shift(op, a.steps, lattice);
                    os << alpha;
                }
                os << ',' << alpha_closed_form_t1(v, theta) << '\n';
                rows.push_back({{"operator", std::string(to_string(v))},
                                {"theta", theta},
                                {"b0", form.b0},
                                {"bx", form.bx},
                                {"by", form.by},
                                {"bz", form.bz},
                                {"alpha", std::isfinite(alpha) ? json(alpha) : json(nullptr)}});
            }
        }
    });
    json meta = sidecar("alpha", "alpha.csv", "operator,theta,alpha,alpha_t1_closed_form");
    meta["steps"] = a.steps;
    meta["phi"] = phi;
    meta["lattice_qubits"] = a.qubits;
    meta["definition"] = "<x> = b0 + b . n(theta0, phi0); alpha = atan2(bx, -bz); empty when |b| < 1e-9";
    meta["alpha_t1_closed_form"] = "sb: theta, bsb: theta/2, bs and sbs: 0 (valid for T = 1)";
    meta["moment_forms"] = rows;
    dir.write_json("alpha.json", meta);
    out << "alpha: " << variants.size() * thetas.size() << " rows at T=" << a.steps << " written to "
        << dir.path("alpha.csv").string() << "\n";
    return kExitOk;
}

struct EntropyArgs {
    std::string ops = "sb,bsb,sbs";
    std::string theta = "pi/2";
    std::string phi = "pi/2";
    std::string theta0 = "pi/2";
    std::string phi0s = "0,pi/4,pi/2";
    int qubits = 8;
    std::size_t steps = 100;
    std::string window = "10:100";
    std::string out;
};

struct EntropySeries {
    Variant variant;
    double phi0;
    std::vector<double> values;
    double mean = 0.0;
    double variance = 0.0;
};

int cmd_entropy(const EntropyArgs &a, std::ostream &out) {
    const auto bounds = split(a.window, ':');
    if (bounds.size() != 2) {
        throw UsageError("--window must look like START:END");
    }
    const std::size_t t0 = std::stoul(bounds[0]);
    const std::size_t t1 = std::stoul(bounds[1]);
    if (t0 > t1 || t1 > a.steps) {
        throw UsageError("--window must satisfy START <= END <= --steps");
    }
    const CoinSpec coin(parse_angle(a.theta), parse_angle(a.phi));
    const double theta0 = parse_angle(a.theta0);
    const Lattice lattice(a.qubits);
    const Output dir(a.out);

    std::vector<std::future<EntropySeries>> jobs;
    for (Variant v : parse_variant_list(a.ops, false)) {
        for (double phi0 : parse_angle_list(a.phi0s)) {
            jobs.push_back(std::async(std::launch::async, [=] {
                const WalkOperatorSpec op(v, coin);
                const WalkerState psi = build_state({theta0, phi0, PointSource{}}, lattice, op.basis_phi());
                EntropySeries s{v, phi0, evolve(psi, op, a.steps, Observe::Entropy).record.entropy};
                const auto first = s.values.begin() + static_cast<std::ptrdiff_t>(t0);
                const auto last = s.values.begin() + static_cast<std::ptrdiff_t>(t1) + 1;
                const double count = static_cast<double>(last - first);
                for (auto it = first; it != last; ++it) {
                    s.mean += *it / count;
                }
                for (auto it = first; it != last; ++it) {
                    s.variance += (*it - s.mean) * (*it - s.mean) / count;
                }
                return s;
            }));
        }
    }
    std::vector<EntropySeries> results;
    for (auto &j : jobs) {
        results.push_back(j.get());
    }

    bool in_range = true;
    dir.write("entropy.csv", [&](std::ostream &os) {
        os << std::setprecision(17) << "operator,phi0,t,entropy\n";
        for (const auto &s : results) {
            for (std::size_t t = 0; t < s.values.size(); ++t) {
                in_range = in_range && s.values[t] >= -1e-12 && s.values[t] <= 1.0 + 1e-12;
                os << to_string(s.variant) << ',' << s.phi0 << ',' << t << ',' << s.values[t] << '\n';
            }
            in_range = in_range && std::abs(s.values.front()) <= 1e-12;
        }
    });
    dir.write("entropy_summary.csv", [&](std::ostream &os) {
        os << std::setprecision(17) << "operator,phi0,mean,variance,t_start,t_end\n";
        for (const auto &s : results) {
            os << to_string(s.variant) << ',' << s.phi0 << ',' << s.mean << ',' << s.variance << ',' << t0 << ','
               << t1 << '\n';
        }
    });
    json meta = sidecar("entropy", "entropy.csv", "operator,phi0,t,entropy");
    meta["summary_file"] = "entropy_summary.csv";
    meta["summary_columns"] = "operator,phi0,mean,variance,t_start,t_end";
    meta["coin"] = {{"theta", coin.theta()}, {"phi", coin.phi()}};
    meta["theta0"] = theta0;
    meta["lattice_qubits"] = a.qubits;
    meta["steps"] = a.steps;
    meta["window"] = {t0, t1};
    meta["units"] = "bits (log base 2)";
    meta["variance"] = "population variance over the window, inclusive";
    meta["wraparound"] = a.steps >= lattice.size() / 2;
    dir.write_json("entropy.json", meta);
    dir.write_json("entropy_summary.json", meta);

    for (const auto &s : results) {
        out << to_string(s.variant) << " phi0=" << fmt(s.phi0, 4) << ": mean " << fmt(s.mean) << ", variance "
            << fmt(s.variance, 4) << " over t in [" << t0 << ", " << t1 << "]\n";
    }
    if (!in_range) {
        out << "entropy outside [0, 1] or S(0) != 0: FAIL\n";
        return kExitVerification;
    }
    return kExitOk;
}

struct CircuitArgs {
    OperatorOptions op;
    std::size_t steps = 7;
    int qubits = 4;
    std::string init = "theta0=pi/2,phi0=0";
    std::string verify = "auto";
    std::string prefix = "circuit";
    std::string out;
};

int cmd_circuit(const CircuitArgs &a, std::ostream &out) {
    const WalkOperatorSpec op = a.op.build();
    const Lattice lattice(a.qubits);
    if (a.verify != "auto" && a.verify != "on" && a.verify != "off") {
        throw UsageError("--verify must be auto, on or off");
    }
    const InitOptions init = parse_init(a.init);
    PositionPrep prep_kind = PositionPrep::Point;
    if (init.kind == InitOptions::Kind::Uniform) {
        prep_kind = PositionPrep::Uniform;
    } else if (init.kind != InitOptions::Kind::Point || init.x0 != 0) {
        throw UsageError("circuit preparation supports a coin state at x0=0 or a uniform position profile");
    }
    const GateProgram prep = compile_state_prep(init.theta0, init.phi0, prep_kind, a.qubits);
    const GateProgram program = compile_walk(prep, op, a.qubits, a.steps);
    const GateCounts counts = gate_counts(program);
    const std::string qasm = export_qasm(program);
    const Output dir(a.out);
    dir.write(a.prefix + ".qasm", [&](std::ostream &os) { os << qasm; });

    json report = gate_counts_to_json(counts);
    report["operator"] = op_to_json(op);
    report["initial_state"] = a.init;
    report["register"] = "qubit 0 = coin, qubits 1..k = position (little-endian), higher = work qubits";
    report["qasm_file"] = a.prefix + ".qasm";

    const bool run_checks = a.verify == "on" || (a.verify == "auto" && a.qubits <= 3);
    bool ok = true;
    if (run_checks) {
        if (a.qubits > 6) {
            throw UsageError("dense verification is limited to --qubits <= 6");
        }
        const GateProgram one = compile_step(op, a.qubits);
        const Eigen::MatrixXcd reference = dense_walk_matrix(op, lattice);
        const double step_error = verify(one, reference);
        const GateProgram parsed = parse_qasm(export_qasm(one));
        const double roundtrip_error = phase_aligned_distance(logical_matrix(parsed, a.qubits + 1), reference);

        // Whole program, including preparation, against the statevector walk.
        const WalkerState psi = make_state(init, lattice, op);
        const WalkerState expect = evolve(psi, op, a.steps, Observe::None).final_state;
        const auto simulated = project_work_qubits(simulate(parse_qasm(qasm)), a.qubits + 1);
        const auto reference_state = to_register_order(expect);
        Complex overlap = 0.0;
        for (std::size_t i = 0; i < simulated.size(); ++i) {
            overlap += std::conj(reference_state[i]) * simulated[i];
        }
        const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
        double program_error = 0.0;
        for (std::size_t i = 0; i < simulated.size(); ++i) {
            program_error = std::max(program_error, std::abs(simulated[i] - phase * reference_state[i]));
        }

        ok = step_error < 1e-10 && roundtrip_error < 1e-10 && program_error < 1e-10;
        report["verification"] = {{"step_vs_dense", step_error},
                                  {"qasm_roundtrip", roundtrip_error},
                                  {"program_vs_statevector", program_error},
                                  {"tolerance", 1e-10},
                                  {"verdict", ok ? "pass" : "fail"}};
        out << "verification: " << (ok ? "pass (<1e-10)" : "FAIL") << " [step " << fmt(step_error, 3)
            << ", qasm " << fmt(roundtrip_error, 3) << ", program " << fmt(program_error, 3) << "]\n";
    } else {
        report["verification"] = {{"verdict", "skipped"}};
    }
    dir.write_json(a.prefix + "_counts.json", report);

    out << "circuit: " << counts.qubits << " qubits (" << counts.work_qubits << " work), " << counts.steps
        << " steps, " << counts.logical_gates << " logical / " << counts.decomposed_gates
        << " elementary gates, depth " << counts.depth_estimate << ", " << counts.coin_rotations
        << " coin rotations, " << counts.controlled_shift_blocks << " controlled shift blocks\n";
    out << "wrote " << dir.path(a.prefix + ".qasm").string() << "\n";
    return ok ? kExitOk : kExitVerification;
}

struct CheckArgs {
    std::uint64_t seed = 1;
    std::size_t trials = 20;
    int qubits = 6;
    std::size_t steps = 10;
    std::string theta = "pi/2";
    std::string out;
};

std::vector<Complex> random_amplitudes(std::mt19937_64 &rng, std::size_t count, bool real) {
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

int cmd_check(const CheckArgs &a, std::ostream &out) {
    const Lattice lattice(a.qubits);
    const double theta = parse_angle(a.theta);
    std::mt19937_64 rng(a.seed);
    const std::vector<Variant> variants{Variant::SB, Variant::BS, Variant::BSB, Variant::SBS, Variant::SQW};
    auto make_op = [&](Variant v, double phi) {
        return v == Variant::SQW ? WalkOperatorSpec::split_step(CoinSpec(theta, phi), CoinSpec(theta / 2, phi))
                                 : WalkOperatorSpec(v, CoinSpec(theta, phi));
    };

    double norm_drift = 0.0;
    double basis_gap = 0.0;
    double imaginary = 0.0;
    for (std::size_t trial = 0; trial < a.trials; ++trial) {
        const auto complex_amps = random_amplitudes(rng, 2 * lattice.size(), false);
        const auto real_amps = random_amplitudes(rng, 2 * lattice.size(), true);
        for (Variant v : variants) {
            const WalkOperatorSpec maj = make_op(v, kWeylMajorana);
            const WalkOperatorSpec dir_op = make_op(v, kWeylDirac);
            const WalkerState psi = WalkerState::from_amplitudes(lattice, complex_amps, kWeylMajorana);
            const auto r1 = evolve(psi, maj, a.steps, Observe::Distribution);
            const auto r2 = evolve(change_basis(psi, kWeylDirac - kWeylMajorana), dir_op, a.steps,
                                   Observe::Distribution);
            norm_drift = std::max(norm_drift, std::abs(r1.final_state.norm() - 1.0));
            for (std::size_t i = 0; i < r1.record.distribution.size(); ++i) {
                basis_gap = std::max(basis_gap, std::abs(r1.record.distribution[i] - r2.record.distribution[i]));
            }
            WalkerState real = WalkerState::from_amplitudes(lattice, real_amps, kWeylMajorana);
            for (std::size_t t = 0; t < a.steps; ++t) {
                real = step(real, maj);
                for (const Complex &z : real.amplitudes()) {
                    imaginary = std::max(imaginary, std::abs(z.imag()));
                }
            }
        }
    }
    struct Line {
        const char *name;
        double value;
        double tol;
    };
    const Line lines[] = {{"norm conservation", norm_drift, 1e-12},
                          {"basis independence of P(x,t)", basis_gap, 1e-12},
                          {"real Majorana amplitudes stay real", imaginary, 1e-12}};
    bool ok = true;
    json results = json::array();
    for (const auto &l : lines) {
        const bool pass = l.value < l.tol;
        ok = ok && pass;
        out << (pass ? "pass " : "FAIL ") << l.name << ": max deviation " << fmt(l.value, 3) << " (< "
            << fmt(l.tol, 1) << ")\n";
        results.push_back({{"property", l.name}, {"max_deviation", l.value}, {"tolerance", l.tol}, {"pass", pass}});
    }
    if (!a.out.empty() || std::getenv("DQWALK_OUT") != nullptr) {
        const Output dir(a.out);
        dir.write_json("check.json", {{"generator", "dqwalk"},
                                      {"command", "check"},
                                      {"seed", a.seed},
                                      {"trials", a.trials},
                                      {"lattice_qubits", a.qubits},
                                      {"steps", a.steps},
                                      {"results", results}});
    }
    return ok ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Discrete-time quantum walk simulator and circuit compiler", "dqwalk"};
    app.require_subcommand(1);

    RunArgs run;
    auto *run_cmd = app.add_subcommand("run", "Evolve a walker and write P(x,t) and observable series");
    run.op.attach(*run_cmd);
    run_cmd->add_option("--steps", run.steps, "Number of walk steps T")->capture_default_str();
    run_cmd->add_option("--qubits", run.qubits, "Position qubits k (N = 2^k sites)")->capture_default_str();
    run_cmd
        ->add_option("--init", run.init,
                     "Initial state: theta0=..,phi0=..[,x0=..] | uniform,theta0=..,phi0=.. | "
                     "majorana-plane,delta=.. | dirac-plane,sign=+-1 | profile=FILE | state=FILE")
        ->capture_default_str();
    run_cmd->add_option("--prefix", run.prefix, "File name prefix")->capture_default_str();
    run_cmd->add_option("--checkpoint", run.checkpoint, "Also write the final state as JSON to this file");
    run_cmd->add_option("--out", run.out, "Output directory (default $DQWALK_OUT or .)");

    DispersionArgs disp;
    auto *disp_cmd = app.add_subcommand("dispersion", "Tabulate momentum-space eigenphases");
    disp_cmd->add_option("--op", disp.ops, "Comma-separated variants or 'all'")->capture_default_str();
    disp_cmd->add_option("--theta", disp.theta, "Coin angle")->capture_default_str();
    disp_cmd->add_option("--phi", disp.phi, "Coin basis angle")->capture_default_str();
    disp_cmd->add_option("--points", disp.points, "Number of k points")->capture_default_str();
    disp_cmd->add_option("--out", disp.out, "Output directory");

    OrderArgs order;
    auto *order_cmd = app.add_subcommand("order", "Fit the local error order against the exact Dirac step");
    order_cmd->add_option("--op", order.ops, "Comma-separated variants or 'all'")->capture_default_str();
    order_cmd->add_option("--kappa", order.kappa, "Momentum")->capture_default_str();
    order_cmd->add_option("--m", order.m, "Mass")->capture_default_str();
    order_cmd->add_option("--phi", order.phi, "Coin basis angle")->capture_default_str();
    order_cmd->add_option("--eps", order.eps, "Comma-separated step sizes")->capture_default_str();
    order_cmd->add_option("--tolerance", order.tolerance, "Allowed |slope - expected|")->capture_default_str();
    order_cmd->add_option("--out", order.out, "Output directory");

    AlphaArgs alpha;
    auto *alpha_cmd = app.add_subcommand("alpha", "Shift angle of <x> on the Bloch sphere");
    alpha_cmd->add_option("--op", alpha.ops, "Comma-separated variants")->capture_default_str();
    alpha_cmd->add_option("--thetas", alpha.thetas, "Comma-separated coin angles (default: grid)");
    alpha_cmd->add_option("--points", alpha.points, "Grid theta_j = j pi / points")->capture_default_str();
    alpha_cmd->add_option("--steps", alpha.steps, "Number of walk steps T")->capture_default_str();
    alpha_cmd->add_option("--qubits", alpha.qubits, "Position qubits k")->capture_default_str();
    alpha_cmd->add_option("--phi", alpha.phi, "Coin basis angle")->capture_default_str();
    alpha_cmd->add_option("--out", alpha.out, "Output directory");

    EntropyArgs ent;
    auto *ent_cmd = app.add_subcommand("entropy", "Coin-position entanglement entropy series");
    ent_cmd->add_option("--op", ent.ops, "Comma-separated variants")->capture_default_str();
    ent_cmd->add_option("--theta", ent.theta, "Coin angle")->capture_default_str();
    ent_cmd->add_option("--phi", ent.phi, "Coin basis angle")->capture_default_str();
    ent_cmd->add_option("--theta0", ent.theta0, "Initial coin polar angle")->capture_default_str();
    ent_cmd->add_option("--phi0", ent.phi0s, "Comma-separated initial coin azimuths")->capture_default_str();
    ent_cmd->add_option("--qubits", ent.qubits, "Position qubits k")->capture_default_str();
    ent_cmd->add_option("--steps", ent.steps, "Number of walk steps T")->capture_default_str();
    ent_cmd->add_option("--window", ent.window, "Summary window START:END (inclusive)")->capture_default_str();
    ent_cmd->add_option("--out", ent.out, "Output directory");

    CircuitArgs circ;
    auto *circ_cmd = app.add_subcommand("circuit", "Compile the walk to gates, export QASM and verify");
    circ.op.attach(*circ_cmd);
    circ_cmd->add_option("--steps", circ.steps, "Number of walk steps T")->capture_default_str();
    circ_cmd->add_option("--qubits", circ.qubits, "Position qubits k")->capture_default_str();
    circ_cmd->add_option("--init", circ.init, "theta0=..,phi0=.. or uniform,theta0=..,phi0=..")
        ->capture_default_str();
    circ_cmd->add_option("--verify", circ.verify, "auto (k <= 3), on or off")->capture_default_str();
    circ_cmd->add_option("--prefix", circ.prefix, "File name prefix")->capture_default_str();
    circ_cmd->add_option("--out", circ.out, "Output directory");

    CheckArgs check;
    auto *check_cmd = app.add_subcommand("check", "Randomized invariant checks on all operator variants");
    check_cmd->add_option("--seed", check.seed, "RNG seed")->capture_default_str();
    check_cmd->add_option("--trials", check.trials, "Random initial states")->capture_default_str();
    check_cmd->add_option("--qubits", check.qubits, "Position qubits k")->capture_default_str();
    check_cmd->add_option("--steps", check.steps, "Number of walk steps T")->capture_default_str();
    check_cmd->add_option("--theta", check.theta, "Coin angle")->capture_default_str();
    check_cmd->add_option("--out", check.out, "Also write check.json here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << "run 'dqwalk --help' for usage\n";
        return kExitUsage;
    }

    try {
        if (run_cmd->parsed()) {
            return cmd_run(run, out, err);
        }
        if (disp_cmd->parsed()) {
            return cmd_dispersion(disp, out);
        }
        if (order_cmd->parsed()) {
            return cmd_order(order, out);
        }
        if (alpha_cmd->parsed()) {
            return cmd_alpha(alpha, out);
        }
        if (ent_cmd->parsed()) {
            return cmd_entropy(ent, out);
        }
        if (circ_cmd->parsed()) {
            return cmd_circuit(circ, out);
        }
        if (check_cmd->parsed()) {
            return cmd_check(check, out);
        }
    } catch (const VerificationError &e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "error: value out of range: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}

}  // namespace dqwalk::cli
