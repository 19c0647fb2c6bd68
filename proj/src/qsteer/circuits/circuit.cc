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

#include "qsteer/circuits/circuit.h"

#include <algorithm>
#include <stdexcept>

namespace qsteer {

namespace {

void check_qubits(const std::vector<std::size_t> &qubits, std::size_t n) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] >= n) {
            throw std::invalid_argument("qubit index " + std::to_string(qubits[i]) + " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (qubits[i] == qubits[j]) {
                throw std::invalid_argument("gate uses qubit " + std::to_string(qubits[i]) + " twice");
            }
        }
    }
}

}  // namespace

Circuit::Circuit(std::vector<std::string> roles) : roles_(std::move(roles)) {
    if (roles_.empty()) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
    for (std::size_t i = 0; i < roles_.size(); ++i) {
        if (roles_[i].empty()) {
            throw std::invalid_argument("empty qubit role");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (roles_[i] == roles_[j]) {
                throw std::invalid_argument("duplicate qubit role " + roles_[i]);
            }
        }
    }
}

std::size_t Circuit::qubit(std::string_view role) const {
    auto it = std::find(roles_.begin(), roles_.end(), role);
    if (it == roles_.end()) {
        throw std::invalid_argument("no qubit with role " + std::string(role));
    }
    return static_cast<std::size_t>(it - roles_.begin());
}

void Circuit::append(Gate g, GateAnnotation annotation) {
    if (g.qubits.size() != gate_arity(g.kind)) {
        throw std::invalid_argument(std::string(gate_name(g.kind)) + " expects " +
                                    std::to_string(gate_arity(g.kind)) + " qubits");
    }
    check_qubits(g.qubits, num_qubits());
    if (annotation.duration_ns && *annotation.duration_ns < 0.0) {
        throw std::invalid_argument("negative gate duration");
    }
    if (annotation.error_rate && !(*annotation.error_rate >= 0.0 && *annotation.error_rate <= 1.0)) {
        throw std::invalid_argument("gate error rate outside [0, 1]");
    }
    ops_.push_back({std::move(g), annotation});
}

void Circuit::append(GateKind kind, std::vector<std::size_t> qubits, double angle, GateAnnotation annotation) {
    append(Gate{kind, std::move(qubits), angle}, annotation);
}

void Circuit::set_measured(std::vector<std::size_t> qubits) {
    check_qubits(qubits, num_qubits());
    measured_ = std::move(qubits);
}

std::size_t Circuit::expanded_cnot_count() const {
    std::size_t n = 0;
    for (const auto &op : ops_) {
        if (op.annotation.cnot_equivalent) {
            n += *op.annotation.cnot_equivalent;
        } else if (op.gate.kind == GateKind::CNOT) {
            n += 1;
        }
    }
    return n;
}

std::size_t Circuit::single_qubit_gate_count() const {
    return static_cast<std::size_t>(
        std::count_if(ops_.begin(), ops_.end(), [](const Operation &op) { return is_single_qubit(op.gate.kind); }));
}

}  // namespace qsteer
