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

#include "qsteer/metrology/assemblage.h"

#include <cmath>
#include <stdexcept>

#include "qsteer/qmath/tolerances.h"

namespace qsteer {

namespace {

ComplexMatrix commutator_derivative(const ComplexMatrix &h, const ComplexMatrix &rho) {
    return -kI * (h * rho - rho * h);
}

}  // namespace

Assemblage Assemblage::create(std::vector<AssemblageSetting> settings) {
    if (settings.empty()) {
        throw std::invalid_argument("assemblage has no settings");
    }
    const std::size_t d = settings.front().outcomes.empty() ? 0 : settings.front().outcomes.front().state.dim();
    for (const auto &s : settings) {
        if (s.outcomes.empty()) {
            throw std::invalid_argument("assemblage setting " + s.name + " has no outcomes");
        }
        double total = 0.0;
        for (const auto &e : s.outcomes) {
            if (e.probability < 0.0) {
                throw std::invalid_argument("assemblage probability is negative");
            }
            if (e.state.dim() != d) {
                throw std::invalid_argument("assemblage states have inconsistent dimensions");
            }
            total += e.probability;
        }
        if (std::abs(total - 1.0) > tol::kTrace) {
            throw std::invalid_argument("assemblage setting " + s.name + " is not normalized");
        }
    }
    Assemblage out(std::move(settings));
    ComplexMatrix ref = out.marginal(0);
    for (std::size_t k = 1; k < out.settings_.size(); ++k) {
        if (max_abs_diff(out.marginal(k), ref) > tol::kDegeneracy) {
            throw std::invalid_argument("assemblage violates no-signaling");
        }
    }
    return out;
}

std::size_t Assemblage::dim() const {
    return settings_.front().outcomes.front().state.dim();
}

ComplexMatrix Assemblage::marginal(std::size_t index) const {
    const auto &s = settings_.at(index);
    ComplexMatrix m = ComplexMatrix::Zero(dim(), dim());
    for (const auto &e : s.outcomes) {
        m += e.probability * e.state.matrix();
    }
    return m;
}

Assemblage build_table1_assemblage() {
    const double r = 1.0 / std::sqrt(2.0);
    ComplexVector plus(2), minus(2);
    plus << r, r;
    minus << r, -r;
    return Assemblage::create({
        {"sigma_x", {{0.5, DensityMatrix::pure(plus)}, {0.5, DensityMatrix::pure(minus)}}},
        {"sigma_z", {{0.5, DensityMatrix::basis_state(2, 0)}, {0.5, DensityMatrix::basis_state(2, 1)}}},
    });
}

Assemblage LhsModel::assemblage() const {
    if (weights.size() != hidden_states.size() || response.size() != setting_names.size() || weights.empty()) {
        throw std::invalid_argument("LHS model has inconsistent sizes");
    }
    const std::size_t d = hidden_states.front().dim();
    std::vector<AssemblageSetting> settings;
    for (std::size_t A = 0; A < response.size(); ++A) {
        if (response[A].size() != weights.size()) {
            throw std::invalid_argument("LHS response table has the wrong number of hidden states");
        }
        const std::size_t n_out = response[A].front().size();
        AssemblageSetting s{setting_names[A], {}};
        for (std::size_t a = 0; a < n_out; ++a) {
            double p = 0.0;
            ComplexMatrix m = ComplexMatrix::Zero(d, d);
            for (std::size_t l = 0; l < weights.size(); ++l) {
                double q = weights[l] * response[A][l].at(a);
                p += q;
                m += q * hidden_states[l].matrix();
            }
            if (p < tol::kBranchProbability) {
                s.outcomes.push_back({0.0, DensityMatrix::maximally_mixed(d)});
            } else {
                s.outcomes.push_back({p, DensityMatrix::from_matrix(m / p)});
            }
        }
        settings.push_back(std::move(s));
    }
    return Assemblage::create(std::move(settings));
}

PhaseFamily unitary_orbit(const DensityMatrix &base, const PhaseConvention &conv) {
    if (base.dim() != 2) {
        throw std::invalid_argument("phase families act on a single qubit");
    }
    ComplexMatrix b = base.matrix();
    return PhaseFamily(
        [b, conv](double theta) {
            ComplexMatrix u = phase_unitary(theta, conv);
            ComplexMatrix rt = u * b * u.adjoint();
            ComplexMatrix d = commutator_derivative(conv.generator(), rt);
            return LocalState{DensityMatrix::from_matrix(rt), d};
        },
        conv);
}

PhaseFamily channel_orbit(const KrausChannel &noise, const DensityMatrix &base, const PhaseConvention &conv) {
    if (base.dim() != 2 || noise.input_dim() != 2 || noise.output_dim() != 2) {
        throw std::invalid_argument("phase families act on a single qubit");
    }
    ComplexMatrix b = base.matrix();
    return PhaseFamily(
        [noise, b, conv](double theta) {
            ComplexMatrix u = phase_unitary(theta, conv);
            ComplexMatrix rt = u * b * u.adjoint();
            ComplexMatrix d = noise.apply(commutator_derivative(conv.generator(), rt));
            return LocalState{DensityMatrix::from_matrix(noise.apply(rt)), d};
        },
        conv);
}

ChannelMap noiseless_map(const PhaseConvention &conv) {
    return [conv](const DensityMatrix &rho) { return unitary_orbit(rho, conv); };
}

ChannelMap noisy_map(const KrausChannel &noise, const PhaseConvention &conv) {
    return [noise, conv](const DensityMatrix &rho) { return channel_orbit(noise, rho, conv); };
}

LocalAssemblage evaluate(const Assemblage &asm_, const ChannelMap &map, double theta) {
    LocalAssemblage out;
    for (const auto &s : asm_.settings()) {
        LocalSetting ls{s.name, {}};
        for (const auto &e : s.outcomes) {
            ls.outcomes.push_back({e.probability, map(e.state).at(theta)});
        }
        out.settings.push_back(std::move(ls));
    }
    return out;
}

std::vector<ControlBranch> conditioned_assemblages(
    const Assemblage &asm_, const DilationModel &noise, const ControlState &control, double theta,
    const PhaseConvention &conv) {
    if (asm_.dim() != 2 || noise.system_dim() != 2) {
        throw std::invalid_argument("conditioned_assemblages: single-qubit systems only");
    }
    ComplexMatrix u = phase_unitary(theta, conv);
    const std::size_t d = asm_.dim();

    std::vector<ControlBranch> out;
    for (ControlOutcome o : {ControlOutcome::plus, ControlOutcome::minus}) {
        ControlBranch branch{o, 0.0, {}};
        std::vector<double> setting_weight;
        for (const auto &s : asm_.settings()) {
            LocalSetting ls{s.name, {}};
            double weight = 0.0;
            for (const auto &e : s.outcomes) {
                if (e.probability < tol::kBranchProbability) {
                    ls.outcomes.push_back({0.0, {DensityMatrix::maximally_mixed(d), ComplexMatrix::Zero(d, d)}});
                    continue;
                }
                ComplexMatrix rt = u * e.state.matrix() * u.adjoint();
                ComplexMatrix drt = commutator_derivative(conv.generator(), rt);
                ComplexMatrix m = project_control(superposed_apply(noise, control, rt), o);
                ComplexMatrix dm = project_control(superposed_apply(noise, control, drt), o);
                double p = m.trace().real();
                double joint = e.probability * p;
                if (p < tol::kBranchProbability) {
                    ls.outcomes.push_back({0.0, {DensityMatrix::maximally_mixed(d), ComplexMatrix::Zero(d, d)}});
                    continue;
                }
                double dp = dm.trace().real();
                ComplexMatrix rho = m / p;
                ComplexMatrix drho = (dm - rho * dp) / p;
                ls.outcomes.push_back({joint, {DensityMatrix::from_matrix(rho), drho}});
                weight += joint;
            }
            setting_weight.push_back(weight);
            branch.assemblage.settings.push_back(std::move(ls));
        }
        // No-signaling makes the branch weight setting-independent; use the first.
        branch.probability = setting_weight.front();
        if (branch.probability < tol::kBranchProbability) {
            continue;
        }
        for (std::size_t k = 0; k < branch.assemblage.settings.size(); ++k) {
            for (auto &e : branch.assemblage.settings[k].outcomes) {
                e.probability /= setting_weight[k];
            }
        }
        out.push_back(std::move(branch));
    }
    return out;
}

}  // namespace qsteer
