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

#include "qsteer/channels/channels.h"

#include <array>
#include <cmath>
#include <string>

#include "qsteer/qmath/tolerances.h"

namespace qsteer {

namespace {

void check_visibility(double x, const char *name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
    }
}

std::size_t next_power_of_two(std::size_t n) {
    std::size_t p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

}  // namespace

PhaseConvention::PhaseConvention(double eta) : eta_(eta) {
    if (eta != 0.5 && eta != 1.0) {
        throw std::invalid_argument("phase convention eta must be 0.5 or 1, got " + std::to_string(eta));
    }
}

ComplexMatrix PhaseConvention::generator() const {
    return eta_ * pauli_z();
}

HermitianObservable PhaseConvention::hamiltonian() const {
    return HermitianObservable::from_matrix(generator());
}

ComplexMatrix phase_unitary(double theta, const PhaseConvention &conv) {
    ComplexMatrix u = ComplexMatrix::Zero(2, 2);
    u(0, 0) = std::exp(-kI * conv.eta() * theta);
    u(1, 1) = std::exp(kI * conv.eta() * theta);
    return u;
}

KrausChannel KrausChannel::from_operators(std::vector<ComplexMatrix> ops) {
    if (ops.empty()) {
        throw std::invalid_argument("Kraus channel needs at least one operator");
    }
    const auto out = ops.front().rows();
    const auto in = ops.front().cols();
    ComplexMatrix sum = ComplexMatrix::Zero(in, in);
    for (const auto &k : ops) {
        if (k.rows() != out || k.cols() != in) {
            throw std::invalid_argument("Kraus operators have inconsistent shapes");
        }
        sum += k.adjoint() * k;
    }
    if (max_abs_diff(sum, identity(in)) > tol::kCompleteness) {
        throw std::invalid_argument("Kraus operators are not complete");
    }
    return KrausChannel(static_cast<std::size_t>(in), static_cast<std::size_t>(out), std::move(ops));
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix &m) const {
    if (static_cast<std::size_t>(m.rows()) != input_dim_ || static_cast<std::size_t>(m.cols()) != input_dim_) {
        throw std::invalid_argument("Kraus channel: input dimension mismatch");
    }
    ComplexMatrix out = ComplexMatrix::Zero(output_dim_, output_dim_);
    for (const auto &k : ops_) {
        out += k * m * k.adjoint();
    }
    return out;
}

DensityMatrix KrausChannel::apply(const DensityMatrix &rho) const {
    return DensityMatrix::from_matrix(apply(rho.matrix()));
}

ComplexMatrix KrausChannel::choi() const {
    const auto n = input_dim_;
    const auto m = output_dim_;
    ComplexMatrix out = ComplexMatrix::Zero(n * m, n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ComplexMatrix eij = ComplexMatrix::Zero(n, n);
            eij(i, j) = 1.0;
            out.block(i * m, j * m, m, m) = apply(eij);
        }
    }
    return out;
}

KrausChannel unitary_channel(const ComplexMatrix &u) {
    if (!is_unitary(u, tol::kUnitary)) {
        throw std::invalid_argument("unitary_channel: matrix is not unitary");
    }
    return KrausChannel::from_operators({u});
}

KrausChannel dephased_shift(double w, double theta, const PhaseConvention &conv) {
    check_visibility(w, "dephasing visibility w");
    ComplexMatrix u = phase_unitary(theta, conv);
    return KrausChannel::from_operators({
        std::sqrt(1.0 - w / 2.0) * u,
        std::sqrt(w / 2.0) * pauli_z() * u,
    });
}

KrausChannel depolarized_shift(double v, double theta, const PhaseConvention &conv) {
    check_visibility(v, "depolarizing visibility v");
    ComplexMatrix u = phase_unitary(theta, conv);
    double s = std::sqrt(v / 4.0);
    return KrausChannel::from_operators({
        std::sqrt(1.0 - 3.0 * v / 4.0) * u,
        s * pauli_x() * u,
        s * pauli_y() * u,
        s * pauli_z() * u,
    });
}

DilationModel DilationModel::create(
    std::size_t system_dim, std::size_t env_dim, ComplexMatrix unitary, DensityMatrix env_init) {
    if (system_dim == 0 || env_dim == 0) {
        throw std::invalid_argument("dilation dimensions must be positive");
    }
    if (static_cast<std::size_t>(unitary.rows()) != system_dim * env_dim) {
        throw std::invalid_argument("dilation unitary has the wrong dimension");
    }
    if (!is_unitary(unitary, tol::kUnitary)) {
        throw std::invalid_argument("dilation matrix is not unitary");
    }
    if (env_init.dim() != env_dim) {
        throw std::invalid_argument("environment state has the wrong dimension");
    }
    return DilationModel(system_dim, env_dim, std::move(unitary), std::move(env_init));
}

ComplexMatrix DilationModel::apply(const ComplexMatrix &m) const {
    if (static_cast<std::size_t>(m.rows()) != system_dim_ || static_cast<std::size_t>(m.cols()) != system_dim_) {
        throw std::invalid_argument("dilation: input dimension mismatch");
    }
    ComplexMatrix joint = unitary_ * tensor(m, env_init_.matrix()) * unitary_.adjoint();
    std::array<std::size_t, 2> dims{system_dim_, env_dim_};
    std::array<std::size_t, 1> keep{0};
    return partial_trace(joint, dims, keep);
}

ComplexMatrix DilationModel::choi() const {
    const auto n = system_dim_;
    ComplexMatrix out = ComplexMatrix::Zero(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ComplexMatrix eij = ComplexMatrix::Zero(n, n);
            eij(i, j) = 1.0;
            out.block(i * n, j * n, n, n) = apply(eij);
        }
    }
    return out;
}

DilationModel canonical_dilation(const KrausChannel &ch) {
    if (ch.input_dim() != ch.output_dim()) {
        throw std::invalid_argument("canonical_dilation: channel must be dimension-preserving");
    }
    const std::size_t ds = ch.input_dim();
    const std::size_t de = next_power_of_two(ch.operators().size());
    const std::size_t n = ds * de;
    const auto &ops = ch.operators();

    ComplexMatrix u = ComplexMatrix::Zero(n, n);
    std::vector<bool> filled(n, false);
    for (std::size_t b = 0; b < ds; ++b) {
        const std::size_t col = b * de;
        for (std::size_t i = 0; i < ops.size(); ++i) {
            for (std::size_t r = 0; r < ds; ++r) {
                u(r * de + i, col) = ops[i](r, b);
            }
        }
        filled[col] = true;
    }

    // Orthonormal completion from standard basis candidates.
    std::size_t candidate = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (filled[col]) {
            continue;
        }
        while (true) {
            if (candidate >= n) {
                throw std::runtime_error("canonical_dilation: completion failed");
            }
            ComplexVector v = ComplexVector::Zero(n);
            v(candidate++) = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t k = 0; k < n; ++k) {
                    if (!filled[k]) {
                        continue;
                    }
                    ComplexVector q = u.col(k);
                    v -= q * q.dot(v);
                }
            }
            double norm = v.norm();
            if (norm > 1e-6) {
                u.col(col) = v / norm;
                filled[col] = true;
                break;
            }
        }
    }
    return DilationModel::create(ds, de, std::move(u), DensityMatrix::basis_state(de, 0));
}

ComplexMatrix interference_operator(const DilationModel &d) {
    if (std::abs(d.env_init().purity() - 1.0) > tol::kTrace) {
        throw std::invalid_argument("interference_operator: mixed environment states are unsupported");
    }
    ComplexMatrix joint = d.unitary() * tensor(identity(d.system_dim()), d.env_init().matrix());
    std::array<std::size_t, 2> dims{d.system_dim(), d.env_dim()};
    std::array<std::size_t, 1> keep{0};
    return partial_trace(joint, dims, keep);
}

ControlState ControlState::pure(double alpha) {
    check_visibility(alpha, "control amplitude alpha");
    return ControlState{Kind::pure_superposition, alpha};
}

ControlState ControlState::incoherent(double alpha) {
    check_visibility(alpha, "control weight alpha");
    return ControlState{Kind::incoherent_mixture, alpha};
}

double ControlState::coherence() const {
    return kind == Kind::pure_superposition ? std::sqrt(alpha * (1.0 - alpha)) : 0.0;
}

DensityMatrix ControlState::density() const {
    ComplexMatrix m(2, 2);
    double c = coherence();
    m << alpha, c, c, 1.0 - alpha;
    return DensityMatrix::from_matrix(m);
}

ComplexMatrix superposed_apply(const DilationModel &d, const ControlState &c, const ComplexMatrix &m) {
    const std::size_t ds = d.system_dim();
    const std::size_t de = d.env_dim();
    if (static_cast<std::size_t>(m.rows()) != ds || static_cast<std::size_t>(m.cols()) != ds) {
        throw std::invalid_argument("superposed_apply: input dimension mismatch");
    }
    const std::size_t block = ds * de * de;
    const ComplexMatrix &ube = d.unitary();

    // U_BE acting on (B, E1) with E2 idle, and on (B, E2) with E1 idle.
    ComplexMatrix u1 = ComplexMatrix::Zero(block, block);
    ComplexMatrix u2 = ComplexMatrix::Zero(block, block);
    auto idx = [&](std::size_t b, std::size_t e1, std::size_t e2) { return (b * de + e1) * de + e2; };
    for (std::size_t bo = 0; bo < ds; ++bo) {
        for (std::size_t bi = 0; bi < ds; ++bi) {
            for (std::size_t eo = 0; eo < de; ++eo) {
                for (std::size_t ei = 0; ei < de; ++ei) {
                    cplx val = ube(bo * de + eo, bi * de + ei);
                    if (val == cplx(0.0)) {
                        continue;
                    }
                    for (std::size_t idle = 0; idle < de; ++idle) {
                        u1(idx(bo, eo, idle), idx(bi, ei, idle)) = val;
                        u2(idx(bo, idle, eo), idx(bi, idle, ei)) = val;
                    }
                }
            }
        }
    }
    ComplexMatrix total = ComplexMatrix::Zero(2 * block, 2 * block);
    total.topLeftCorner(block, block) = u1;
    total.bottomRightCorner(block, block) = u2;

    const ComplexMatrix &env = d.env_init().matrix();
    ComplexMatrix initial = tensor(tensor(tensor(c.density().matrix(), m), env), env);
    ComplexMatrix evolved = total * initial * total.adjoint();
    std::array<std::size_t, 4> dims{2, ds, de, de};
    std::array<std::size_t, 2> keep{0, 1};
    return partial_trace(evolved, dims, keep);
}

DensityMatrix superposed_apply(const DilationModel &d, const ControlState &c, const DensityMatrix &rho) {
    return DensityMatrix::from_matrix(superposed_apply(d, c, rho.matrix()));
}

DensityMatrix superposed_apply(
    const DilationModel &noise, const ControlState &c, const DensityMatrix &rho, double theta,
    const PhaseConvention &conv) {
    if (rho.dim() != 2) {
        throw std::invalid_argument("phase shift acts on a single qubit");
    }
    ComplexMatrix u = phase_unitary(theta, conv);
    return superposed_apply(noise, c, DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint()));
}

ComplexMatrix superposed_closed_form(
    const KrausChannel &channel, const ComplexMatrix &interference, const ControlState &c, const ComplexMatrix &m) {
    const auto ds = static_cast<Eigen::Index>(channel.input_dim());
    if (m.rows() != ds || m.cols() != ds || interference.rows() != ds || interference.cols() != ds) {
        throw std::invalid_argument("superposed_closed_form: dimension mismatch");
    }
    ComplexMatrix lam = channel.apply(m);
    ComplexMatrix coh = interference * m * interference.adjoint();
    ComplexMatrix out = ComplexMatrix::Zero(2 * ds, 2 * ds);
    out.topLeftCorner(ds, ds) = c.alpha * lam;
    out.bottomRightCorner(ds, ds) = (1.0 - c.alpha) * lam;
    out.topRightCorner(ds, ds) = c.coherence() * coh;
    out.bottomLeftCorner(ds, ds) = c.coherence() * coh;
    return out;
}

ComplexMatrix project_control(const ComplexMatrix &m_cb, ControlOutcome outcome) {
    if (m_cb.rows() != m_cb.cols() || m_cb.rows() % 2 != 0) {
        throw std::invalid_argument("project_control: expected an operator on C (x) B");
    }
    const auto ds = m_cb.rows() / 2;
    double sign = outcome == ControlOutcome::plus ? 1.0 : -1.0;
    return 0.5 * (m_cb.topLeftCorner(ds, ds) + m_cb.bottomRightCorner(ds, ds) +
                  sign * (m_cb.topRightCorner(ds, ds) + m_cb.bottomLeftCorner(ds, ds)));
}

double branch_probability(const DensityMatrix &rho_cb, ControlOutcome outcome) {
    return project_control(rho_cb.matrix(), outcome).trace().real();
}

BranchResult conditioned_branch(const DensityMatrix &rho_cb, ControlOutcome outcome) {
    ComplexMatrix m = project_control(rho_cb.matrix(), outcome);
    double p = m.trace().real();
    if (p < tol::kBranchProbability) {
        throw UndefinedBranch("control outcome has zero probability");
    }
    return BranchResult{p, DensityMatrix::from_matrix(m / p)};
}

double effective_dephasing_visibility(double w) {
    check_visibility(w, "dephasing visibility w");
    return 2.0 * w / (4.0 - w);
}

}  // namespace qsteer
