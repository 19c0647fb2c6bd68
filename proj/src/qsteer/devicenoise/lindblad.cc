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

#include "qsteer/devicenoise/lindblad.h"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include <unsupported/Eigen/MatrixFunctions>

namespace qsteer {

namespace {

constexpr double kNsPerUs = 1000.0;

double rate_from(double t_us) {
    return std::isinf(t_us) ? 0.0 : 1.0 / t_us;
}

ComplexMatrix sigma_minus() {
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    s(0, 1) = 1.0;
    return s;
}

// Row-major vectorization: vec(A X B) = (A (x) B^T) vec(X).
ComplexMatrix left_right(const ComplexMatrix &a, const ComplexMatrix &b) {
    return tensor(a, b.transpose());
}

ComplexMatrix dissipator(const ComplexMatrix &l) {
    const ComplexMatrix ldl = l.adjoint() * l;
    const ComplexMatrix id = identity(l.rows());
    return left_right(l, l.adjoint()) - 0.5 * left_right(ldl, id) - 0.5 * left_right(id, ldl);
}

// Master-equation right-hand side, rates in 1/us, returns d rho / d(ns).
ComplexMatrix rhs(const ComplexMatrix &rho, const LindbladRates &rates) {
    const std::size_t n = rates.num_qubits();
    ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
    const std::size_t dim = rho.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const auto &r = rates.per_qubit[k];
        const std::size_t bit = std::size_t{1} << (n - 1 - k);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                const bool bi = i & bit, bj = j & bit;
                cplx d = 0.0;
                // sigma_- rho sigma_+ feeds |0><0| from |1><1|.
                if (!bi && !bj) {
                    d += r.gamma_t1 * rho(i | bit, j | bit);
                }
                // -1/2 {sigma_+ sigma_-, rho}: sigma_+ sigma_- = |1><1|.
                d -= 0.5 * r.gamma_t1 * ((bi ? 1.0 : 0.0) + (bj ? 1.0 : 0.0)) * rho(i, j);
                // gamma_t2 (Z rho Z - rho) kills coherences at 2 gamma_t2.
                if (bi != bj) {
                    d -= 2.0 * r.gamma_t2 * rho(i, j);
                }
                out(i, j) += d;
            }
        }
    }
    return out / kNsPerUs;
}

struct PropagatorCache {
    std::shared_mutex mutex;
    std::map<std::tuple<double, double, double>, ComplexMatrix> entries;
};

PropagatorCache &cache() {
    static PropagatorCache c;
    return c;
}

}  // namespace

DephasingFormula parse_dephasing_formula(std::string_view s) {
    if (s == "as-printed" || s == "as_printed") {
        return DephasingFormula::as_printed;
    }
    if (s == "standard") {
        return DephasingFormula::standard;
    }
    throw std::invalid_argument("unknown dephasing formula: " + std::string(s));
}

std::string_view dephasing_formula_name(DephasingFormula f) {
    return f == DephasingFormula::as_printed ? "as-printed" : "standard";
}

LindbladRates LindbladRates::from_device(const DeviceParams &p, const std::vector<std::string> &roles,
                                         DephasingFormula formula) {
    LindbladRates out;
    out.formula = formula;
    for (const auto &role : roles) {
        const auto &q = p.qubit(role);
        const double g1 = rate_from(q.t1_us);
        const double g2 = formula == DephasingFormula::as_printed ? g1 - 0.5 * rate_from(q.t2_us)
                                                                  : 0.5 * (rate_from(q.t2_us) - 0.5 * g1);
        if (g2 < 0.0) {
            throw std::invalid_argument("negative dephasing rate for role " + role + " under the " +
                                        std::string(dephasing_formula_name(formula)) + " formula");
        }
        out.per_qubit.push_back({g1, g2});
    }
    return out;
}

LindbladRates LindbladRates::zero(std::size_t n_qubits) {
    LindbladRates out;
    out.per_qubit.assign(n_qubits, QubitRates{});
    return out;
}

ComplexMatrix qubit_liouvillian(const QubitRates &r) {
    if (!(r.gamma_t1 >= 0.0 && r.gamma_t2 >= 0.0)) {
        throw std::invalid_argument("Lindblad rates must be non-negative");
    }
    return r.gamma_t1 * dissipator(sigma_minus()) + r.gamma_t2 * dissipator(pauli_z());
}

ComplexMatrix qubit_propagator(const QubitRates &r, double t_ns) {
    if (!(t_ns >= 0.0)) {
        throw std::invalid_argument("evolution time must be non-negative");
    }
    const auto key = std::make_tuple(r.gamma_t1, r.gamma_t2, t_ns);
    auto &c = cache();
    {
        std::shared_lock lock(c.mutex);
        if (auto it = c.entries.find(key); it != c.entries.end()) {
            return it->second;
        }
    }
    ComplexMatrix lt = qubit_liouvillian(r) * (t_ns / kNsPerUs);
    ComplexMatrix p = lt.exp();
    std::unique_lock lock(c.mutex);
    return c.entries.try_emplace(key, std::move(p)).first->second;
}

ComplexMatrix lindblad_evolve(const ComplexMatrix &rho, double t_ns, const LindbladRates &rates) {
    if (!(t_ns >= 0.0)) {
        throw std::invalid_argument("evolution time must be non-negative");
    }
    const std::size_t n = rates.num_qubits();
    const std::size_t dim = std::size_t{1} << n;
    if (static_cast<std::size_t>(rho.rows()) != dim || static_cast<std::size_t>(rho.cols()) != dim) {
        throw std::invalid_argument("lindblad_evolve: state does not match the rate table");
    }
    ComplexMatrix out = rho;
    for (std::size_t k = 0; k < n; ++k) {
        const auto &r = rates.per_qubit[k];
        if (r.gamma_t1 == 0.0 && r.gamma_t2 == 0.0) {
            continue;
        }
        const ComplexMatrix p = qubit_propagator(r, t_ns);
        const std::size_t bit = std::size_t{1} << (n - 1 - k);
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & bit) {
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                if (j & bit) {
                    continue;
                }
                const std::size_t rows[2] = {i, i | bit};
                const std::size_t cols[2] = {j, j | bit};
                cplx v[4];
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        v[2 * a + b] = out(rows[a], cols[b]);
                    }
                }
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        cplx acc = 0.0;
                        for (int m = 0; m < 4; ++m) {
                            acc += p(2 * a + b, m) * v[m];
                        }
                        out(rows[a], cols[b]) = acc;
                    }
                }
            }
        }
    }
    return out;
}

DensityMatrix lindblad_evolve(const DensityMatrix &rho, double t_ns, const LindbladRates &rates) {
    ComplexMatrix m = lindblad_evolve(rho.matrix(), t_ns, rates);
    return DensityMatrix::from_matrix(0.5 * (m + m.adjoint()));
}

ComplexMatrix register_liouvillian(const LindbladRates &rates) {
    const std::size_t n = rates.num_qubits();
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix total = ComplexMatrix::Zero(dim * dim, dim * dim);
    for (std::size_t k = 0; k < n; ++k) {
        const auto &r = rates.per_qubit[k];
        auto embed = [&](const ComplexMatrix &op) {
            ComplexMatrix m = identity(1);
            for (std::size_t q = 0; q < n; ++q) {
                m = tensor(m, q == k ? op : identity(2));
            }
            return m;
        };
        total += r.gamma_t1 * dissipator(embed(sigma_minus())) + r.gamma_t2 * dissipator(embed(pauli_z()));
    }
    return total;
}

ComplexMatrix lindblad_evolve_rk4(const ComplexMatrix &rho, double t_ns, const LindbladRates &rates,
                                  double max_step_ns) {
    if (!(t_ns >= 0.0) || !(max_step_ns > 0.0)) {
        throw std::invalid_argument("lindblad_evolve_rk4: bad time or step");
    }
    const auto steps = static_cast<std::size_t>(std::ceil(t_ns / max_step_ns));
    if (steps == 0) {
        return rho;
    }
    const double h = t_ns / static_cast<double>(steps);
    ComplexMatrix x = rho;
    for (std::size_t s = 0; s < steps; ++s) {
        ComplexMatrix k1 = rhs(x, rates);
        ComplexMatrix k2 = rhs(x + 0.5 * h * k1, rates);
        ComplexMatrix k3 = rhs(x + 0.5 * h * k2, rates);
        ComplexMatrix k4 = rhs(x + h * k3, rates);
        x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return x;
}

}  // namespace qsteer
