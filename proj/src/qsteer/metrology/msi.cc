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

#include "qsteer/metrology/msi.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "qsteer/metrology/fisher.h"

namespace qsteer {

namespace {

void require_settings(const LocalAssemblage &asm_) {
    if (asm_.settings.empty()) {
        throw std::invalid_argument("assemblage has no settings");
    }
}

double best_qfi(const std::vector<SettingFigures> &figs) {
    double best = 0.0;
    for (const auto &f : figs) {
        best = std::max(best, f.qfi_avg);
    }
    return best;
}

double best_variance(const std::vector<SettingFigures> &figs) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto &f : figs) {
        best = std::min(best, f.variance_avg);
    }
    return best;
}

}  // namespace

std::vector<SettingFigures> setting_figures(const LocalAssemblage &asm_, const HermitianObservable &h) {
    require_settings(asm_);
    std::vector<SettingFigures> out;
    for (const auto &s : asm_.settings) {
        SettingFigures f{s.name, 0.0, 0.0};
        for (const auto &e : s.outcomes) {
            if (e.probability <= 0.0) {
                continue;
            }
            f.qfi_avg += e.probability * qfi(e.state);
            f.variance_avg += e.probability * variance(e.state.rho, h);
        }
        out.push_back(f);
    }
    return out;
}

double optimal_qfi(const LocalAssemblage &asm_) {
    require_settings(asm_);
    double best = 0.0;
    for (const auto &s : asm_.settings) {
        double acc = 0.0;
        for (const auto &e : s.outcomes) {
            if (e.probability > 0.0) {
                acc += e.probability * qfi(e.state);
            }
        }
        best = std::max(best, acc);
    }
    return best;
}

double optimal_qfi(const Assemblage &asm_, const ChannelMap &map, double theta) {
    return optimal_qfi(evaluate(asm_, map, theta));
}

double optimal_variance(const LocalAssemblage &asm_, const HermitianObservable &h) {
    require_settings(asm_);
    double best = std::numeric_limits<double>::infinity();
    for (const auto &s : asm_.settings) {
        double acc = 0.0;
        for (const auto &e : s.outcomes) {
            if (e.probability > 0.0) {
                acc += e.probability * variance(e.state.rho, h);
            }
        }
        best = std::min(best, acc);
    }
    return best;
}

double optimal_variance(const Assemblage &asm_, const ChannelMap &map, double theta, const HermitianObservable &h) {
    return optimal_variance(evaluate(asm_, map, theta), h);
}

double msi_violation(double f_opt, double four_var_opt) {
    if (f_opt < -1e-12 || four_var_opt < -1e-12) {
        throw std::invalid_argument("msi_violation: negative input");
    }
    return std::max(f_opt - four_var_opt, 0.0);
}

MsiReport msi_report(const Assemblage &asm_, const ChannelMap &map, double theta, const HermitianObservable &h) {
    MsiReport r;
    r.settings = setting_figures(evaluate(asm_, map, theta), h);
    r.f_opt = best_qfi(r.settings);
    r.four_var_opt = 4.0 * best_variance(r.settings);
    r.violation = msi_violation(r.f_opt, r.four_var_opt);
    return r;
}

MsiReport branch_averaged_msi(
    const Assemblage &asm_, const DilationModel &noise, const ControlState &control, double theta,
    const PhaseConvention &conv, const std::optional<HermitianObservable> &h) {
    const HermitianObservable ham = h ? *h : conv.hamiltonian();
    MsiReport r;
    for (const auto &branch : conditioned_assemblages(asm_, noise, control, theta, conv)) {
        BranchFigures b{branch.outcome, branch.probability, 0.0, 0.0, setting_figures(branch.assemblage, ham)};
        b.f_opt = best_qfi(b.settings);
        b.four_var_opt = 4.0 * best_variance(b.settings);
        r.f_opt += b.probability * b.f_opt;
        r.four_var_opt += b.probability * b.four_var_opt;
        r.branches.push_back(std::move(b));
    }
    r.violation = msi_violation(r.f_opt, r.four_var_opt);
    return r;
}

double optimal_classical_fi(const LocalAssemblage &asm_, const std::vector<HermitianObservable> &measurements) {
    require_settings(asm_);
    if (measurements.empty()) {
        throw std::invalid_argument("optimal_classical_fi: empty measurement set");
    }
    double best = 0.0;
    for (const auto &s : asm_.settings) {
        for (const auto &m : measurements) {
            double acc = 0.0;
            for (const auto &e : s.outcomes) {
                if (e.probability > 0.0) {
                    acc += e.probability * classical_fi(measurement_distribution(e.state, m));
                }
            }
            best = std::max(best, acc);
        }
    }
    return best;
}

double optimal_classical_fi(
    const std::vector<ControlBranch> &branches, const std::vector<HermitianObservable> &measurements) {
    double acc = 0.0;
    for (const auto &b : branches) {
        acc += b.probability * optimal_classical_fi(b.assemblage, measurements);
    }
    return acc;
}

std::vector<HermitianObservable> default_measurements() {
    return {HermitianObservable::from_matrix(pauli_y()), HermitianObservable::from_matrix(pauli_z())};
}

}  // namespace qsteer
