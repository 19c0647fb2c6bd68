// Copyright 2026 The qsteer Authors
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

#include "qsteer/circuits/builders.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsteer {

namespace {

enum class ControlPrep { superposition, level0, level1 };

void check_unit_interval(double x, const char *what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " + std::to_string(x));
    }
}

void prepare_control(Circuit &c, std::size_t q, ControlPrep prep, double alpha) {
    switch (prep) {
        case ControlPrep::level0:
            return;
        case ControlPrep::level1:
            c.append(GateKind::X, {q});
            return;
        case ControlPrep::superposition:
            if (alpha == 0.5) {
                c.append(GateKind::H, {q});
            } else if (alpha == 0.0) {
                c.append(GateKind::X, {q});
            } else if (alpha != 1.0) {
                c.append(GateKind::Ry, {q}, 2.0 * std::acos(std::sqrt(alpha)));
            }
            return;
    }
}

void prepare_system(Circuit &c, std::size_t q, PrepLabel prep) {
    switch (prep) {
        case PrepLabel::plus:
            c.append(GateKind::H, {q});
            break;
        case PrepLabel::minus:
            c.append(GateKind::X, {q});
            c.append(GateKind::H, {q});
            break;
        case PrepLabel::zero:
            break;
        case PrepLabel::one:
            c.append(GateKind::X, {q});
            break;
    }
}

void append_readout(Circuit &c, std::size_t control, std::size_t system, Readout readout) {
    if (readout == Readout::none) {
        return;
    }
    c.append(GateKind::H, {control});
    if (readout == Readout::sigma_y) {
        c.append(GateKind::Sdg, {system});
        c.append(GateKind::H, {system});
    }
}

Circuit dephased(double w, double theta, PrepLabel prep, const BuildOptions &opts, ControlPrep cprep) {
    check_unit_interval(w, "dephasing visibility w");
    Circuit c({"C", "B", "E1", "E2"});
    const std::size_t C = 0, B = 1, E1 = 2, E2 = 3;
    const double phi = dephasing_angle(w);

    prepare_control(c, C, cprep, opts.control.alpha);
    prepare_system(c, B, prep);
    c.append(GateKind::Rz, {B}, 2.0 * opts.conv.eta() * theta);

    // Each environment ends up rotated by Ry(phi) or Ry(0) about the parity
    // with B, depending on the control level, then imprints a sigma_z kick.
    c.append(GateKind::Ry, {E1}, phi / 2.0);
    c.append(GateKind::Ry, {E2}, phi / 2.0);
    c.append(GateKind::CNOT, {B, E1});
    c.append(GateKind::CNOT, {B, E2});
    c.append(GateKind::CNOT, {C, B});
    c.append(GateKind::CNOT, {B, E1});
    c.append(GateKind::CNOT, {B, E2});
    c.append(GateKind::Ry, {E1}, phi / 2.0);
    c.append(GateKind::Ry, {E2}, -phi / 2.0);
    c.append(GateKind::CNOT, {B, E1});
    c.append(GateKind::CNOT, {B, E2});
    c.append(GateKind::CNOT, {C, B});
    c.append(GateKind::CNOT, {B, E1});
    c.append(GateKind::CNOT, {B, E2});
    c.append(GateKind::H, {B});
    c.append(GateKind::CNOT, {E1, B});
    c.append(GateKind::CNOT, {E2, B});
    c.append(GateKind::H, {B});

    append_readout(c, C, B, opts.readout);
    c.set_measured({C, B});
    return c;
}

// Ry(angle) on `target` when `control` reads 1 (or 0 when `anti`), as two
// CNOTs and two rotations.
void controlled_ry(Circuit &c, std::size_t control, std::size_t target, double angle, bool anti) {
    c.append(GateKind::Ry, {target}, angle / 2.0);
    c.append(GateKind::CNOT, {control, target});
    c.append(GateKind::Ry, {target}, anti ? angle / 2.0 : -angle / 2.0);
    c.append(GateKind::CNOT, {control, target});
}

void controlled_env_prep(Circuit &c, std::size_t control, std::size_t a, std::size_t b, double zeta, double xi,
                         bool anti) {
    const double half_pi = std::numbers::pi / 2.0;
    controlled_ry(c, control, b, zeta, anti);
    controlled_ry(c, control, a, (xi + half_pi) / 2.0, anti);
    c.append(GateKind::CNOT, {b, a});
    controlled_ry(c, control, a, (xi - half_pi) / 2.0, anti);
    c.append(GateKind::CNOT, {b, a});
}

// Pauli on `system` when (control, a, b) = (control_level, a_level, b_level).
void controlled_pauli(Circuit &c, GateKind pauli, std::size_t control, int control_level, std::size_t a, int a_level,
                      std::size_t b, int b_level, std::size_t system) {
    GateAnnotation ann{kControlledToffoliNs, std::nullopt, kControlledToffoliCnots};
    std::vector<std::size_t> flips;
    if (control_level == 0) {
        flips.push_back(control);
    }
    if (a_level == 0) {
        flips.push_back(a);
    }
    if (b_level == 0) {
        flips.push_back(b);
    }
    for (auto q : flips) {
        c.append(GateKind::X, {q});
    }
    if (pauli == GateKind::Y) {
        c.append(GateKind::Sdg, {system});
    } else if (pauli == GateKind::Z) {
        c.append(GateKind::H, {system});
    }
    c.append(GateKind::CToffoli, {control, a, b, system}, 0.0, ann);
    if (pauli == GateKind::Y) {
        c.append(GateKind::S, {system});
    } else if (pauli == GateKind::Z) {
        c.append(GateKind::H, {system});
    }
    for (auto q : flips) {
        c.append(GateKind::X, {q});
    }
}

Circuit depolarized(double v, double theta, PrepLabel prep, const BuildOptions &opts, ControlPrep cprep) {
    check_unit_interval(v, "depolarizing visibility v");
    Circuit c({"C", "B", "E1", "E1b", "E2", "E2b"});
    const std::size_t C = 0, B = 1, E1a = 2, E1b = 3, E2a = 4, E2b = 5;
    auto [zeta, xi] = depolarizing_angles(v);

    prepare_control(c, C, cprep, opts.control.alpha);
    prepare_system(c, B, prep);
    c.append(GateKind::Rz, {B}, 2.0 * opts.conv.eta() * theta);

    controlled_env_prep(c, C, E1a, E1b, zeta, xi, /*anti=*/true);
    controlled_env_prep(c, C, E2a, E2b, zeta, xi, /*anti=*/false);

    struct Env {
        std::size_t a, b;
        int control_level;
    };
    for (const Env &e : {Env{E1a, E1b, 0}, Env{E2a, E2b, 1}}) {
        controlled_pauli(c, GateKind::X, C, e.control_level, e.a, 0, e.b, 1, B);
        controlled_pauli(c, GateKind::Y, C, e.control_level, e.a, 1, e.b, 0, B);
        controlled_pauli(c, GateKind::Z, C, e.control_level, e.a, 1, e.b, 1, B);
    }

    append_readout(c, C, B, opts.readout);
    c.set_measured({C, B});
    return c;
}

ControlPrep pure_only(const BuildOptions &opts) {
    if (opts.control.kind != ControlState::Kind::pure_superposition) {
        throw std::invalid_argument("incoherent controls need the ensemble builders");
    }
    return ControlPrep::superposition;
}

template <typename F>
CircuitEnsemble ensemble(const BuildOptions &opts, F build) {
    CircuitEnsemble e;
    if (opts.control.kind == ControlState::Kind::pure_superposition) {
        e.members.push_back({1.0, build(ControlPrep::superposition)});
        return e;
    }
    const double a = opts.control.alpha;
    if (a > 0.0) {
        e.members.push_back({a, build(ControlPrep::level0)});
    }
    if (a < 1.0) {
        e.members.push_back({1.0 - a, build(ControlPrep::level1)});
    }
    return e;
}

}  // namespace

PrepLabel parse_prep_label(std::string_view s) {
    if (s == "+" || s == "plus") {
        return PrepLabel::plus;
    }
    if (s == "-" || s == "minus") {
        return PrepLabel::minus;
    }
    if (s == "0" || s == "zero") {
        return PrepLabel::zero;
    }
    if (s == "1" || s == "one") {
        return PrepLabel::one;
    }
    throw std::invalid_argument("unknown preparation label: " + std::string(s));
}

std::string_view prep_label_name(PrepLabel p) {
    switch (p) {
        case PrepLabel::plus:
            return "plus";
        case PrepLabel::minus:
            return "minus";
        case PrepLabel::zero:
            return "zero";
        case PrepLabel::one:
            return "one";
    }
    return "?";
}

DensityMatrix prep_state(PrepLabel p) {
    switch (p) {
        case PrepLabel::plus:
            return DensityMatrix::from_matrix(0.5 * (identity(2) + pauli_x()));
        case PrepLabel::minus:
            return DensityMatrix::from_matrix(0.5 * (identity(2) - pauli_x()));
        case PrepLabel::zero:
            return DensityMatrix::basis_state(2, 0);
        case PrepLabel::one:
            return DensityMatrix::basis_state(2, 1);
    }
    throw std::invalid_argument("unknown preparation label");
}

double dephasing_angle(double w) {
    check_unit_interval(w, "dephasing visibility w");
    return 2.0 * std::asin(std::sqrt(w / 2.0));
}

std::pair<double, double> depolarizing_angles(double v) {
    check_unit_interval(v, "depolarizing visibility v");
    return {2.0 * std::asin(std::sqrt(v / 2.0)), 2.0 * std::asin(std::sqrt(v / (4.0 - 2.0 * v)))};
}

ComplexMatrix env_prep_unitary(double zeta, double xi) {
    Circuit c({"a", "b"});
    const double half_pi = std::numbers::pi / 2.0;
    c.append(GateKind::Ry, {1}, zeta);
    c.append(GateKind::Ry, {0}, (xi + half_pi) / 2.0);
    c.append(GateKind::CNOT, {1, 0});
    c.append(GateKind::Ry, {0}, (xi - half_pi) / 2.0);
    c.append(GateKind::CNOT, {1, 0});
    ComplexMatrix u = identity(4);
    for (const auto &op : c.operations()) {
        u = apply_left(u, gate_matrix(op.gate), op.gate.qubits, 2);
    }
    return u;
}

Circuit build_dephased_circuit(double w, double theta, PrepLabel prep, const BuildOptions &opts) {
    return dephased(w, theta, prep, opts, pure_only(opts));
}

Circuit build_depolarized_circuit(double v, double theta, PrepLabel prep, const BuildOptions &opts) {
    return depolarized(v, theta, prep, opts, pure_only(opts));
}

CircuitEnsemble build_dephased_ensemble(double w, double theta, PrepLabel prep, const BuildOptions &opts) {
    return ensemble(opts, [&](ControlPrep cp) { return dephased(w, theta, prep, opts, cp); });
}

CircuitEnsemble build_depolarized_ensemble(double v, double theta, PrepLabel prep, const BuildOptions &opts) {
    return ensemble(opts, [&](ControlPrep cp) { return depolarized(v, theta, prep, opts, cp); });
}

}  // namespace qsteer
