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

#ifndef QSTEER_CHANNELS_CHANNELS_H
#define QSTEER_CHANNELS_CHANNELS_H

#include <stdexcept>
#include <vector>

#include "qsteer/qmath/matrix.h"

namespace qsteer {

/// Generator scale for the phase family: H = eta * sigma_z and
/// U(theta) = exp(-i H theta). Only eta = 1/2 (default) and eta = 1 are
/// supported.
class PhaseConvention {
   public:
    PhaseConvention() = default;
    explicit PhaseConvention(double eta);

    double eta() const {
        return eta_;
    }
    /// eta * sigma_z.
    ComplexMatrix generator() const;
    HermitianObservable hamiltonian() const;
    /// Angular frequency of outcome probabilities in theta, 2 * eta.
    double fringe_frequency() const {
        return 2.0 * eta_;
    }

   private:
    double eta_ = 0.5;
};

/// diag(exp(-i eta theta), exp(i eta theta)).
ComplexMatrix phase_unitary(double theta, const PhaseConvention &conv);

/// Operator-sum representation. Completeness is validated on construction.
class KrausChannel {
   public:
    static KrausChannel from_operators(std::vector<ComplexMatrix> ops);

    std::size_t input_dim() const {
        return input_dim_;
    }
    std::size_t output_dim() const {
        return output_dim_;
    }
    const std::vector<ComplexMatrix> &operators() const {
        return ops_;
    }

    /// Linear action sum_i K_i m K_i^dagger on any input-sized operator.
    ComplexMatrix apply(const ComplexMatrix &m) const;
    DensityMatrix apply(const DensityMatrix &rho) const;
    /// Unnormalized Choi matrix sum_ij |i><j| (x) channel(|i><j|).
    ComplexMatrix choi() const;

   private:
    KrausChannel(std::size_t in, std::size_t out, std::vector<ComplexMatrix> ops)
        : input_dim_(in), output_dim_(out), ops_(std::move(ops)) {
    }
    std::size_t input_dim_;
    std::size_t output_dim_;
    std::vector<ComplexMatrix> ops_;
};

KrausChannel unitary_channel(const ComplexMatrix &u);

/// Phase shift followed by pure dephasing of visibility w in [0, 1]:
/// Kraus {sqrt(1 - w/2) U, sqrt(w/2) sigma_z U}.
KrausChannel dephased_shift(double w, double theta, const PhaseConvention &conv);

/// Phase shift followed by depolarizing noise of visibility v in [0, 1]:
/// Kraus {sqrt(1 - 3v/4) U, sqrt(v/4) sigma_{x,y,z} U}.
KrausChannel depolarized_shift(double v, double theta, const PhaseConvention &conv);

/// System-environment unitary with an initial environment state. The global
/// unitary acts on system (x) environment.
class DilationModel {
   public:
    static DilationModel create(std::size_t system_dim, std::size_t env_dim, ComplexMatrix unitary, DensityMatrix env_init);

    std::size_t system_dim() const {
        return system_dim_;
    }
    std::size_t env_dim() const {
        return env_dim_;
    }
    const ComplexMatrix &unitary() const {
        return unitary_;
    }
    const DensityMatrix &env_init() const {
        return env_init_;
    }

    /// Tr_E[U (m (x) env_init) U^dagger].
    ComplexMatrix apply(const ComplexMatrix &m) const;
    ComplexMatrix choi() const;

   private:
    DilationModel(std::size_t s, std::size_t e, ComplexMatrix u, DensityMatrix env)
        : system_dim_(s), env_dim_(e), unitary_(std::move(u)), env_init_(std::move(env)) {
    }
    std::size_t system_dim_;
    std::size_t env_dim_;
    ComplexMatrix unitary_;
    DensityMatrix env_init_;
};

/// Stinespring dilation with environment |0><0|: the column for |psi>|0>_E is
/// sum_i K_i|psi> (x) |i>_E, the remaining columns are a Gram-Schmidt
/// completion over the standard basis. env_dim is the Kraus count rounded up
/// to a power of two.
DilationModel canonical_dilation(const KrausChannel &ch);

/// The environment-vacuum block T = Tr_E[U (1 (x) env_init)]. Throws
/// std::invalid_argument when env_init is mixed.
ComplexMatrix interference_operator(const DilationModel &d);

/// Control qubit preparation. A pure control is sqrt(a)|0> + sqrt(1-a)|1>; an
/// incoherent control is a|0><0| + (1-a)|1><1|.
struct ControlState {
    enum class Kind { pure_superposition, incoherent_mixture };

    Kind kind = Kind::pure_superposition;
    double alpha = 0.5;

    static ControlState pure(double alpha);
    static ControlState incoherent(double alpha);
    static ControlState plus() {
        return pure(0.5);
    }
    static ControlState maximally_mixed() {
        return incoherent(0.5);
    }

    DensityMatrix density() const;
    /// sqrt(a(1-a)) for pure controls, 0 otherwise.
    double coherence() const;
};

/// Joint control-system state after routing `rho` through two isomorphic
/// copies of `d`, one per control level. Evaluated by brute force over
/// C (x) B (x) E1 (x) E2 followed by tracing out both environments.
DensityMatrix superposed_apply(const DilationModel &d, const ControlState &c, const DensityMatrix &rho);
/// Same map, linear in `m`, for arbitrary (e.g. traceless) system operators.
ComplexMatrix superposed_apply(const DilationModel &d, const ControlState &c, const ComplexMatrix &m);
/// Convenience for a dilation of the theta-independent noise: applies U(theta)
/// to `rho` first.
DensityMatrix superposed_apply(
    const DilationModel &noise, const ControlState &c, const DensityMatrix &rho, double theta, const PhaseConvention &conv);

/// Closed-form evaluation of the same map from the channel and its
/// interference operator: rho_C[jj] Lambda(m) on the diagonal blocks and
/// rho_C[01] T m T^dagger off the diagonal.
ComplexMatrix superposed_closed_form(
    const KrausChannel &channel, const ComplexMatrix &interference, const ControlState &c, const ComplexMatrix &m);

enum class ControlOutcome { plus, minus };

/// Raised when conditioning on a control outcome of (numerically) zero probability.
class UndefinedBranch : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

struct BranchResult {
    double probability;
    DensityMatrix state;
};

/// Tr_C[(|+-><+-| (x) 1) m] for an operator on C (x) B, unnormalized.
ComplexMatrix project_control(const ComplexMatrix &m_cb, ControlOutcome outcome);
double branch_probability(const DensityMatrix &rho_cb, ControlOutcome outcome);
/// Projects the control onto |+> or |->, normalizes the system state.
BranchResult conditioned_branch(const DensityMatrix &rho_cb, ControlOutcome outcome);

/// Visibility of the dephasing seen on the "+" branch of a coherently
/// controlled pair of dephased shifts: 2w / (4 - w).
double effective_dephasing_visibility(double w);

}  // namespace qsteer

#endif
