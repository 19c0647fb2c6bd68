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

#include "qsteer/circuits/simulator.h"

#include <cmath>
#include <stdexcept>

namespace qsteer {

MeasurementRecord MeasurementRecord::create(std::vector<std::size_t> qubits, std::vector<double> probabilities) {
    if (probabilities.size() != (std::size_t{1} << qubits.size())) {
        throw std::invalid_argument("measurement record size does not match qubit count");
    }
    double total = 0.0;
    for (double &p : probabilities) {
        if (!(p >= -1e-14)) {
            throw std::invalid_argument("measurement record has a negative probability");
        }
        if (p < 0.0) {
            p = 0.0;
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("measurement record does not sum to one");
    }
    return MeasurementRecord(std::move(qubits), std::move(probabilities));
}

double MeasurementRecord::marginal(std::size_t position, int bit) const {
    const std::size_t k = qubits_.size();
    if (position >= k) {
        throw std::invalid_argument("marginal: position out of range");
    }
    const std::size_t shift = k - 1 - position;
    double acc = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        if (static_cast<int>((i >> shift) & 1U) == bit) {
            acc += probs_[i];
        }
    }
    return acc;
}

ComplexMatrix apply_left(const ComplexMatrix &m, const ComplexMatrix &u, std::span<const std::size_t> qubits,
                         std::size_t n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t k = qubits.size();
    const std::size_t sub = std::size_t{1} << k;
    if (static_cast<std::size_t>(m.rows()) != dim || static_cast<std::size_t>(u.rows()) != sub ||
        static_cast<std::size_t>(u.cols()) != sub) {
        throw std::invalid_argument("apply_left: dimension mismatch");
    }
    std::vector<std::size_t> offset(sub, 0);
    std::size_t mask = 0;
    for (std::size_t j = 0; j < sub; ++j) {
        for (std::size_t t = 0; t < k; ++t) {
            if ((j >> (k - 1 - t)) & 1U) {
                offset[j] |= std::size_t{1} << (n_qubits - 1 - qubits[t]);
            }
        }
    }
    for (std::size_t t = 0; t < k; ++t) {
        mask |= std::size_t{1} << (n_qubits - 1 - qubits[t]);
    }

    ComplexMatrix out = m;
    std::vector<cplx> v(sub);
    const auto cols = m.cols();
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & mask) {
            continue;
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            for (std::size_t j = 0; j < sub; ++j) {
                v[j] = m(base | offset[j], c);
            }
            for (std::size_t i = 0; i < sub; ++i) {
                cplx acc = 0.0;
                for (std::size_t j = 0; j < sub; ++j) {
                    acc += u(i, j) * v[j];
                }
                out(base | offset[i], c) = acc;
            }
        }
    }
    return out;
}

ComplexMatrix apply_unitary(const ComplexMatrix &rho, const ComplexMatrix &u, std::span<const std::size_t> qubits,
                            std::size_t n_qubits) {
    ComplexMatrix x = apply_left(rho, u, qubits, n_qubits);
    ComplexMatrix y = apply_left(x.adjoint(), u, qubits, n_qubits);
    return y.adjoint();
}

ComplexMatrix apply_gate(const ComplexMatrix &rho, const Gate &g, std::size_t n_qubits) {
    return apply_unitary(rho, gate_matrix(g), g.qubits, n_qubits);
}

ComplexMatrix final_state(const Circuit &c) {
    const std::size_t dim = std::size_t{1} << c.num_qubits();
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    rho(0, 0) = 1.0;
    for (const auto &op : c.operations()) {
        rho = apply_gate(rho, op.gate, c.num_qubits());
    }
    return rho;
}

MeasurementRecord measure(const ComplexMatrix &rho, std::size_t n_qubits, const std::vector<std::size_t> &qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (static_cast<std::size_t>(rho.rows()) != dim) {
        throw std::invalid_argument("measure: dimension mismatch");
    }
    const std::size_t k = qubits.size();
    std::vector<double> probs(std::size_t{1} << k, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        std::size_t outcome = 0;
        for (std::size_t t = 0; t < k; ++t) {
            outcome = (outcome << 1) | ((i >> (n_qubits - 1 - qubits[t])) & 1U);
        }
        probs[outcome] += rho(i, i).real();
    }
    return MeasurementRecord::create(qubits, std::move(probs));
}

MeasurementRecord simulate(const Circuit &c) {
    return measure(final_state(c), c.num_qubits(), c.measured());
}

ComplexMatrix final_state(const CircuitEnsemble &e) {
    if (e.members.empty()) {
        throw std::invalid_argument("empty circuit ensemble");
    }
    ComplexMatrix acc;
    for (const auto &m : e.members) {
        ComplexMatrix rho = m.weight * final_state(m.circuit);
        acc = acc.size() == 0 ? rho : ComplexMatrix(acc + rho);
    }
    return acc;
}

MeasurementRecord simulate(const CircuitEnsemble &e) {
    std::vector<double> weights;
    std::vector<MeasurementRecord> records;
    for (const auto &m : e.members) {
        weights.push_back(m.weight);
        records.push_back(simulate(m.circuit));
    }
    return mix(weights, records);
}

MeasurementRecord mix(const std::vector<double> &weights, const std::vector<MeasurementRecord> &records) {
    if (weights.size() != records.size() || records.empty()) {
        throw std::invalid_argument("mix: weights and records differ in length");
    }
    std::vector<double> acc(records.front().probabilities().size(), 0.0);
    for (std::size_t r = 0; r < records.size(); ++r) {
        if (records[r].qubits() != records.front().qubits()) {
            throw std::invalid_argument("mix: records measure different qubits");
        }
        for (std::size_t i = 0; i < acc.size(); ++i) {
            acc[i] += weights[r] * records[r].probabilities()[i];
        }
    }
    return MeasurementRecord::create(records.front().qubits(), std::move(acc));
}

}  // namespace qsteer
