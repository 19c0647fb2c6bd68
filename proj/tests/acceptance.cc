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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails. Optional arguments select
// criteria by number.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qsteer/channels/channels.h"
#include "qsteer/circuits/builders.h"
#include "qsteer/devicenoise/device_params.h"
#include "qsteer/devicenoise/pipeline.h"
#include "qsteer/harness/csv.h"
#include "qsteer/harness/sweep.h"
#include "qsteer/metrology/assemblage.h"
#include "qsteer/metrology/fisher.h"
#include "qsteer/metrology/msi.h"
#include "qsteer/qmath/matrix.h"

namespace {

using namespace qsteer;

class Criterion {
   public:
    void expect(bool ok, const std::string &what) {
        ok_ = ok_ && ok;
        notes_ += (notes_.empty() ? "" : "; ") + what + (ok ? "" : " [FAILED]");
    }
    void note(const std::string &what) {
        notes_ += (notes_.empty() ? "" : "; ") + what;
    }
    bool ok() const {
        return ok_;
    }
    const std::string &notes() const {
        return notes_;
    }

   private:
    bool ok_ = true;
    std::string notes_;
};

std::string fmt(const char *f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, x);
    return buf;
}

DensityMatrix reduced_cb(const ComplexMatrix &rho, std::size_t n_qubits) {
    std::vector<std::size_t> dims(n_qubits, 2);
    const std::size_t keep[] = {0, 1};
    ComplexMatrix m = partial_trace(rho, dims, keep);
    return DensityMatrix::from_matrix(0.5 * (m + m.adjoint()));
}

DensityMatrix random_qubit(std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double x = n(rng), y = n(rng), z = n(rng);
    const double r = std::cbrt(u(rng)) / std::sqrt(x * x + y * y + z * z);
    x *= r;
    y *= r;
    z *= r;
    return DensityMatrix::from_matrix(0.5 * (identity(2) + x * pauli_x() + y * pauli_y() + z * pauli_z()));
}

ComplexMatrix random_observable(std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexMatrix m = n(rng) * identity(2) + n(rng) * pauli_x() + n(rng) * pauli_y() + n(rng) * pauli_z();
    return m;
}

void criterion1(Criterion &c) {
    auto p = analytic_point(NoiseKind::dephasing, 1.0, ControlState::plus(), 0.0, PhaseConvention(0.5));
    const double v = msi_violation(p.f_opt_avg, p.four_var_opt_avg);
    c.expect(std::abs(v - 0.33) <= 0.005, "V(w=1) = " + fmt("%.6f", v) + " vs 0.33 +- 0.005");
    c.expect(std::abs(v - 1.0 / 3.0) <= 1e-10, "equals 1/3 to 1e-10");
}

void criterion2(Criterion &c) {
    PhaseConvention conv;
    auto margin = [&](const ControlState &control) {
        return [&, control](double v) {
            return analytic_point(NoiseKind::depolarizing, v, control, 0.0, conv).margin();
        };
    };
    auto mixed = find_crossing(margin(ControlState::maximally_mixed()), 0.0, 1.0, 1e-9);
    auto pure = find_crossing(margin(ControlState::plus()), 0.0, 1.0, 1e-9);
    c.expect(mixed.has_value() && pure.has_value(), "both thresholds exist");
    if (!mixed || !pure) {
        return;
    }
    c.expect(std::abs(*mixed - (1.0 - 1.0 / std::sqrt(2.0))) <= 1e-6,
             "incoherent root " + fmt("%.6f", *mixed) + " = 1 - 1/sqrt2");
    c.expect(std::abs(std::round(*mixed * 100) / 100 - 0.29) <= 0.01 + 1e-12, "rounds within 0.01 of 0.29");
    c.expect(std::abs(*pure - 0.414) <= 0.005, "pure root " + fmt("%.6f", *pure) + " near 0.414");
    c.expect(std::abs(std::round(*pure * 100) / 100 - 0.42) <= 0.01 + 1e-12, "rounds within 0.01 of 0.42");
}

void criterion3(Criterion &c) {
    PhaseConvention conv;
    std::mt19937_64 rng(3);
    std::vector<DensityMatrix> inputs;
    for (auto p : kAllPreps) {
        inputs.push_back(prep_state(p));
    }
    for (int i = 0; i < 4; ++i) {
        inputs.push_back(random_qubit(rng));
    }
    double worst = 0.0;
    for (int k = 0; k <= 10; ++k) {
        const double w = 0.1 * k;
        const double wp = 2.0 * w / (4.0 - w);
        for (double theta : {0.0, 0.9}) {
            auto dil = canonical_dilation(dephased_shift(w, 0.0, conv));
            for (const auto &rho : inputs) {
                auto rho_cb = superposed_apply(dil, ControlState::plus(), rho, theta, conv);
                auto branch = conditioned_branch(rho_cb, ControlOutcome::plus);
                auto want = dephased_shift(wp, theta, conv).apply(rho);
                worst = std::max(worst, trace_distance(branch.state, want));
            }
        }
    }
    c.expect(worst <= 1e-10, "11 w values, max trace distance " + fmt("%.1e", worst));
}

void criterion4(Criterion &c) {
    PhaseConvention conv;
    BuildOptions opts{conv, Readout::none};
    const std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    const std::vector<double> thetas = {-1.5707963267948966, -0.3, 0.0, 0.7, 1.0471975511965976};
    double worst = 0.0, purity_gap = 0.0;
    for (bool deph : {true, false}) {
        for (double x : grid) {
            auto dil = canonical_dilation(deph ? dephased_shift(x, 0.0, conv) : depolarized_shift(x, 0.0, conv));
            for (double theta : thetas) {
                for (PrepLabel p : kAllPreps) {
                    Circuit circ = deph ? build_dephased_circuit(x, theta, p, opts)
                                        : build_depolarized_circuit(x, theta, p, opts);
                    ComplexMatrix full = final_state(circ);
                    purity_gap = std::max(purity_gap, std::abs((full * full).trace().real() - 1.0));
                    auto got = reduced_cb(full, circ.num_qubits());
                    auto want = superposed_apply(dil, opts.control, prep_state(p), theta, conv);
                    worst = std::max(worst, trace_distance(got, want));
                    for (auto o : {ControlOutcome::plus, ControlOutcome::minus}) {
                        if (branch_probability(want, o) > 1e-9) {
                            worst = std::max(worst, trace_distance(conditioned_branch(got, o).state,
                                                                   conditioned_branch(want, o).state));
                        }
                    }
                }
            }
        }
    }
    c.expect(worst <= 1e-10, "200 circuit instances, max trace distance " + fmt("%.1e", worst));
    c.expect(purity_gap <= 1e-10, "global purity within " + fmt("%.1e", purity_gap));
}

void criterion5(Criterion &c, const DeviceParams &device) {
    BuildOptions opts;
    Circuit fig3 = build_dephased_circuit(0.5, 0.0, PrepLabel::plus, opts);
    Circuit app = build_depolarized_circuit(0.5, 0.0, PrepLabel::plus, opts);
    const double g3 = accumulate_gate_error(fig3, device);
    const double ga = accumulate_gate_error(app, device);
    const double t3 = total_gate_time(fig3, device);
    const double ta = total_gate_time(app, device);
    c.expect(g3 >= 0.085 && g3 <= 0.099, "Gamma(fig3) " + fmt("%.4f", g3) + " in [0.085, 0.099]");
    c.expect(ga >= 0.943, "Gamma(appendix) " + fmt("%.4f", ga) + " >= 0.943");
    c.expect(std::abs(t3 / 3725.0 - 1.0) <= 0.05, "time(fig3) " + fmt("%.0f", t3) + " ns vs 3725 +- 5%");
    c.expect(std::abs(ta / 111945.0 - 1.0) <= 0.05,
             "time(appendix) " + fmt("%.0f", ta) + " ns vs 111945 +- 5% (" + fmt("%+.1f", 100 * (ta / 111945.0 - 1)) +
                 "%)");
    c.expect(app.expanded_cnot_count() == 328, "appendix CNOTs " + std::to_string(app.expanded_cnot_count()));
}

void criterion6(Criterion &c, const DeviceParams &device) {
    SweepConfig cfg;
    cfg.mode = SweepMode::noisy_circuit;
    cfg.noise = NoiseKind::dephasing;
    cfg.shots = 0;
    auto threshold = [&](const ControlState &control) {
        return find_crossing(
            [&](double w) {
                auto r = evaluate_point(cfg, control, w, 0, &device);
                return r.f_opt_avg - r.four_var_opt_avg;
            },
            0.0, 1.0, 1e-3);
    };
    auto mixed = threshold(ControlState::maximally_mixed());
    auto pure = threshold(ControlState::plus());
    c.expect(mixed.has_value() && pure.has_value(), "both thresholds exist");
    if (!mixed || !pure) {
        return;
    }
    c.expect(*pure > *mixed, "pure " + fmt("%.3f", *pure) + " > incoherent " + fmt("%.3f", *mixed));
    c.expect(*mixed >= 0.30 && *mixed <= 0.46, "incoherent threshold in [0.30, 0.46]");
    c.expect(*pure >= 0.60 && *pure <= 0.78, "pure threshold in [0.60, 0.78]");
}

void criterion7(Criterion &c, const DeviceParams &device) {
    SweepConfig cfg;
    cfg.mode = SweepMode::noisy_circuit;
    cfg.noise = NoiseKind::depolarizing;
    cfg.shots = 0;
    for (double v : {0.0, 0.5}) {
        auto r = evaluate_point(cfg, ControlState::plus(), v, 0, &device);
        c.expect(r.f_opt_avg < 0.01, "v=" + fmt("%.1f", v) + " F " + fmt("%.5f", r.f_opt_avg) + " < 0.01");
        c.expect(r.four_var_opt_avg > 0.99, "4Var " + fmt("%.5f", r.four_var_opt_avg) + " > 0.99");
        c.expect(r.violation == 0.0, "no violation");
    }
}

void criterion8(Criterion &c) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = -1e300;
    for (int trial = 0; trial < 1000; ++trial) {
        PhaseConvention conv(trial % 2 ? 1.0 : 0.5);
        const double x = u(rng);
        auto noise = trial % 3 ? dephased_shift(x, 0.0, conv) : depolarized_shift(x, 0.0, conv);
        auto s = channel_orbit(noise, random_qubit(rng), conv).at(2.0 * u(rng) - 1.0);
        const double f_c =
            classical_fi(measurement_distribution(s, HermitianObservable::from_matrix(random_observable(rng))));
        worst = std::max(worst, f_c - qfi(s));
    }
    c.expect(worst <= 1e-8, "1000 triples, max FI - QFI " + fmt("%.1e", worst));

    std::size_t points = 0;
    double gap = 1e300;
    for (double eta : {0.5, 1.0}) {
        PhaseConvention conv(eta);
        for (auto noise : {NoiseKind::dephasing, NoiseKind::depolarizing}) {
            for (int k = 0; k <= 20; ++k) {
                const double x = 0.05 * k;
                auto pure = analytic_point(noise, x, ControlState::plus(), 0.0, conv);
                auto mixed = analytic_point(noise, x, ControlState::maximally_mixed(), 0.0, conv);
                gap = std::min(gap, msi_violation(pure.f_opt_avg, pure.four_var_opt_avg) -
                                        msi_violation(mixed.f_opt_avg, mixed.four_var_opt_avg));
                ++points;
            }
        }
    }
    c.expect(gap >= -1e-12, std::to_string(points) + " grid points, min V(pure) - V(incoherent) " + fmt("%.1e", gap));
}

void criterion9(Criterion &c) {
    SweepConfig cfg;
    cfg.mode = SweepMode::circuit;
    cfg.noise = NoiseKind::dephasing;
    cfg.visibility = Grid{0.0, 0.0, 1.0};
    cfg.shots = 10000;
    cfg.rounds = 40;
    cfg.seed = 2024;
    auto first = run_sweep(cfg);
    c.expect(first.failures.empty() && first.records.size() == 1, "sweep ran");
    if (first.records.size() != 1) {
        return;
    }
    const auto &r = first.records[0];
    const double analytic = analytic_point(NoiseKind::dephasing, 0.0, ControlState::plus(), 0.0, cfg.conv).f_opt_avg;
    const double se = r.stderr_f / std::sqrt(static_cast<double>(cfg.rounds));
    c.expect(std::abs(r.f_opt_avg - analytic) <= 3 * se,
             "mean F " + fmt("%.5f", r.f_opt_avg) + " vs " + fmt("%.5f", analytic) + ", 3 s.e. = " + fmt("%.5f", 3 * se));
    cfg.threads = 1;
    auto again = run_sweep(cfg);
    c.expect(emit_csv(first.records) == emit_csv(again.records), "repeat run byte-identical");
}

}  // namespace

int main(int argc, char **argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        only.insert(std::atoi(argv[i]));
    }
    const DeviceParams device = load_device_params(std::string(QSTEER_DATA_DIR) + "/ibm-cairo.params");

    struct Entry {
        int id;
        double budget_s;
        std::function<void(Criterion &)> run;
    };
    const std::vector<Entry> entries = {
        {1, 1.0, criterion1},
        {2, 1.0, criterion2},
        {3, 0.0, criterion3},
        {4, 30.0, criterion4},
        {5, 0.0, [&](Criterion &c) { criterion5(c, device); }},
        {6, 300.0, [&](Criterion &c) { criterion6(c, device); }},
        {7, 600.0, [&](Criterion &c) { criterion7(c, device); }},
        {8, 60.0, criterion8},
        {9, 0.0, criterion9},
    };

    int failed = 0;
    for (const auto &e : entries) {
        if (!only.empty() && !only.count(e.id)) {
            continue;
        }
        Criterion c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            e.run(c);
        } catch (const std::exception &ex) {
            c.expect(false, std::string("exception: ") + ex.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (e.budget_s > 0.0) {
            c.expect(secs < e.budget_s, "runtime " + fmt("%.2f", secs) + " s < " + fmt("%.0f", e.budget_s) + " s");
        } else {
            c.note("runtime " + fmt("%.2f", secs) + " s");
        }
        failed += !c.ok();
        std::printf("criterion %d: %s  %s\n", e.id, c.ok() ? "PASS" : "FAIL", c.notes().c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
