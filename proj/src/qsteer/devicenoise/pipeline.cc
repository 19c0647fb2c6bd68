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

#include "qsteer/devicenoise/pipeline.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsteer {

namespace {

void check_probability(double g, const char *what) {
    if (!(g >= 0.0 && g <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
    }
}

PairParams pair_or_worst(const Circuit &c, const DeviceParams &p, std::size_t a, std::size_t b) {
    if (auto pp = p.pair(c.roles()[a], c.roles()[b])) {
        return *pp;
    }
    return p.worst_pair();
}

}  // namespace

double gate_error_rate(const Operation &op, const Circuit &c, const DeviceParams &p) {
    if (op.annotation.error_rate) {
        return *op.annotation.error_rate;
    }
    const auto &q = op.gate.qubits;
    if (is_single_qubit(op.gate.kind)) {
        return p.qubit(c.roles()[q[0]]).gate_error;
    }
    if (op.annotation.cnot_equivalent) {
        double worst = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            for (std::size_t j = i + 1; j < q.size(); ++j) {
                worst = std::max(worst, pair_or_worst(c, p, q[i], q[j]).cnot_error);
            }
        }
        return 1.0 - std::pow(1.0 - worst, static_cast<double>(*op.annotation.cnot_equivalent));
    }
    if (op.gate.kind == GateKind::CNOT) {
        return pair_or_worst(c, p, q[0], q[1]).cnot_error;
    }
    throw std::invalid_argument("no error rate for " + std::string(gate_name(op.gate.kind)) +
                                " without an error or cnots annotation");
}

double gate_duration_ns(const Operation &op, const Circuit &c, const DeviceParams &p) {
    if (op.annotation.duration_ns) {
        return *op.annotation.duration_ns;
    }
    switch (op.gate.kind) {
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::Rz:
        case GateKind::Ry:
            return p.single_qubit_time_ns;
        case GateKind::H:
            return p.h_factor * p.single_qubit_time_ns;
        case GateKind::S:
        case GateKind::Sdg:
            return p.s_factor * p.single_qubit_time_ns;
        case GateKind::CNOT:
            return pair_or_worst(c, p, op.gate.qubits[0], op.gate.qubits[1]).cnot_time_ns;
        default:
            throw std::invalid_argument("no duration for " + std::string(gate_name(op.gate.kind)) +
                                        " without a duration annotation");
    }
}

double accumulate_gate_error(std::span<const double> rates) {
    double survive = 1.0;
    for (double g : rates) {
        check_probability(g, "gate error");
        survive *= 1.0 - g;
    }
    return 1.0 - survive;
}

double accumulate_gate_error(const Circuit &c, const DeviceParams &p) {
    std::vector<double> rates;
    rates.reserve(c.operations().size());
    for (const auto &op : c.operations()) {
        rates.push_back(gate_error_rate(op, c, p));
    }
    return accumulate_gate_error(rates);
}

double total_gate_time(const Circuit &c, const DeviceParams &p) {
    double t = 0.0;
    for (const auto &op : c.operations()) {
        t += gate_duration_ns(op, c, p);
    }
    return t;
}

ComplexMatrix gate_error_channel(const ComplexMatrix &rho, double gamma, std::size_t n_qubits) {
    check_probability(gamma, "gate error");
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (static_cast<std::size_t>(rho.rows()) != dim || static_cast<std::size_t>(rho.cols()) != dim) {
        throw std::invalid_argument("gate_error_channel: dimension mismatch");
    }
    const cplx tr = rho.trace();
    return (1.0 - gamma) * rho + (gamma * tr / static_cast<double>(dim)) * identity(dim);
}

DensityMatrix gate_error_channel(const DensityMatrix &rho, double gamma, std::size_t n_qubits) {
    return DensityMatrix::from_matrix(gate_error_channel(rho.matrix(), gamma, n_qubits));
}

ComplexMatrix readout_error_channel(const ComplexMatrix &rho, double gamma, std::size_t qubit, std::size_t n_qubits) {
    check_probability(gamma, "readout error");
    if (qubit >= n_qubits) {
        throw std::invalid_argument("readout_error_channel: qubit out of range");
    }
    const std::size_t q[] = {qubit};
    return (1.0 - gamma) * rho + gamma * apply_unitary(rho, pauli_x(), q, n_qubits);
}

DensityMatrix readout_error_channel(const DensityMatrix &rho, double gamma) {
    if (rho.dim() != 2) {
        throw std::invalid_argument("readout_error_channel: expected a single qubit");
    }
    ComplexMatrix m = readout_error_channel(rho.matrix(), gamma, 0, 1);
    return DensityMatrix::from_matrix(m);
}

MeasurementRecord readout_error_channel(const MeasurementRecord &r, const std::vector<double> &gammas) {
    const std::size_t k = r.qubits().size();
    if (gammas.size() != k) {
        throw std::invalid_argument("readout_error_channel: one rate per measured qubit required");
    }
    std::vector<double> p = r.probabilities();
    for (std::size_t pos = 0; pos < k; ++pos) {
        const double g = gammas[pos];
        check_probability(g, "readout error");
        if (g == 0.0) {
            continue;
        }
        const std::size_t bit = std::size_t{1} << (k - 1 - pos);
        std::vector<double> next(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i] = (1.0 - g) * p[i] + g * p[i ^ bit];
        }
        p = std::move(next);
    }
    return MeasurementRecord::create(r.qubits(), std::move(p));
}

NoisePipeline NoisePipeline::from_device(const Circuit &c, const DeviceParams &p, DephasingFormula formula) {
    NoisePipeline out;
    out.duration_ns = total_gate_time(c, p);
    out.rates = LindbladRates::from_device(p, c.roles(), formula);
    out.gate_error = accumulate_gate_error(c, p);
    for (auto q : c.measured()) {
        out.readout_errors.push_back(p.qubit(c.roles()[q]).readout_error);
    }
    return out;
}

NoisePipeline NoisePipeline::noiseless(const Circuit &c) {
    NoisePipeline out;
    out.rates = LindbladRates::zero(c.num_qubits());
    out.readout_errors.assign(c.measured().size(), 0.0);
    return out;
}

ComplexMatrix NoisePipeline::apply_channels(const ComplexMatrix &rho) const {
    ComplexMatrix m = lindblad_evolve(rho, duration_ns, rates);
    return gate_error_channel(m, gate_error, rates.num_qubits());
}

MeasurementRecord simulate(const Circuit &c, const NoisePipeline &noise) {
    if (noise.rates.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("noise pipeline does not match the circuit register");
    }
    ComplexMatrix rho = noise.apply_channels(final_state(c));
    return readout_error_channel(measure(rho, c.num_qubits(), c.measured()), noise.readout_errors);
}

MeasurementRecord noisy_pipeline(const Circuit &c, const DeviceParams &p, DephasingFormula formula) {
    return simulate(c, NoisePipeline::from_device(c, p, formula));
}

MeasurementRecord noisy_pipeline(const CircuitEnsemble &e, const DeviceParams &p, DephasingFormula formula) {
    std::vector<double> weights;
    std::vector<MeasurementRecord> records;
    for (const auto &m : e.members) {
        weights.push_back(m.weight);
        records.push_back(noisy_pipeline(m.circuit, p, formula));
    }
    return mix(weights, records);
}

}  // namespace qsteer
