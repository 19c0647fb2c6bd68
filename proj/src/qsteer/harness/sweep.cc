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

#include "qsteer/harness/sweep.h"

#include <algorithm>
#include <array>
#include <limits>
#include <atomic>
#include <charconv>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qsteer/devicenoise/pipeline.h"
#include "qsteer/harness/fit.h"
#include "qsteer/harness/sampling.h"
#include "qsteer/metrology/assemblage.h"
#include "qsteer/metrology/msi.h"

namespace qsteer {

namespace {

constexpr double kEmptyBranch = 1e-14;

double parse_real(std::string_view s, const char *what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument(std::string("bad ") + what + ": '" + std::string(s) + "'");
    }
    return v;
}

std::string shortest(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

PrepLabel prep_for(const std::string &setting, std::size_t outcome) {
    if (setting == "sigma_x") {
        return outcome == 0 ? PrepLabel::plus : PrepLabel::minus;
    }
    if (setting == "sigma_z") {
        return outcome == 0 ? PrepLabel::zero : PrepLabel::one;
    }
    throw std::invalid_argument("no circuit preparation for setting " + setting);
}

CircuitEnsemble build(NoiseKind noise, double visibility, double theta, PrepLabel prep, const BuildOptions &opts) {
    return noise == NoiseKind::dephasing ? build_dephased_ensemble(visibility, theta, prep, opts)
                                         : build_depolarized_ensemble(visibility, theta, prep, opts);
}

// Joint (c, b) probabilities, index 2c + b.
using Joint = std::array<double, 4>;

Joint observe(const MeasurementRecord &r, const SweepConfig &cfg, std::mt19937_64 *rng) {
    Joint out{};
    if (rng == nullptr) {
        for (std::size_t i = 0; i < 4; ++i) {
            out[i] = r.probability(i);
        }
        return out;
    }
    auto counts = sample_counts(r, cfg.shots, *rng);
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = static_cast<double>(counts[i]) / static_cast<double>(cfg.shots);
    }
    return out;
}

double mean(const std::vector<double> &x) {
    double s = 0.0;
    for (double v : x) {
        s += v;
    }
    return s / static_cast<double>(x.size());
}

double sample_sd(const std::vector<double> &x) {
    if (x.size() < 2) {
        return 0.0;
    }
    const double m = mean(x);
    double s = 0.0;
    for (double v : x) {
        s += (v - m) * (v - m);
    }
    return std::sqrt(s / static_cast<double>(x.size() - 1));
}

}  // namespace

NoiseKind parse_noise_kind(std::string_view s) {
    if (s == "deph" || s == "dephasing") {
        return NoiseKind::dephasing;
    }
    if (s == "depo" || s == "depolarizing") {
        return NoiseKind::depolarizing;
    }
    throw std::invalid_argument("unknown noise kind: " + std::string(s));
}

std::string_view noise_kind_name(NoiseKind k) {
    return k == NoiseKind::dephasing ? "deph" : "depo";
}

SweepMode parse_sweep_mode(std::string_view s) {
    if (s == "analytic") {
        return SweepMode::analytic;
    }
    if (s == "circuit") {
        return SweepMode::circuit;
    }
    if (s == "circuit+devicenoise") {
        return SweepMode::noisy_circuit;
    }
    throw std::invalid_argument("unknown sweep mode: " + std::string(s));
}

std::string_view sweep_mode_name(SweepMode m) {
    switch (m) {
        case SweepMode::analytic:
            return "analytic";
        case SweepMode::circuit:
            return "circuit";
        case SweepMode::noisy_circuit:
            return "circuit+devicenoise";
    }
    return "?";
}

ControlState parse_control(std::string_view s) {
    if (s == "plus") {
        return ControlState::plus();
    }
    if (s == "mixed") {
        return ControlState::maximally_mixed();
    }
    if (s.starts_with("alpha=")) {
        return ControlState::pure(parse_real(s.substr(6), "control alpha"));
    }
    if (s.starts_with("pure:")) {
        return ControlState::pure(parse_real(s.substr(5), "control alpha"));
    }
    if (s.starts_with("mixed:")) {
        return ControlState::incoherent(parse_real(s.substr(6), "control alpha"));
    }
    throw std::invalid_argument("unknown control: " + std::string(s));
}

std::string control_label(const ControlState &c) {
    const bool pure = c.kind == ControlState::Kind::pure_superposition;
    if (c.alpha == 0.5) {
        return pure ? "plus" : "mixed";
    }
    return (pure ? "pure:" : "mixed:") + shortest(c.alpha);
}

Grid Grid::parse(std::string_view s) {
    Grid g;
    const auto a = s.find(':');
    if (a == std::string_view::npos) {
        g.start = g.stop = parse_real(s, "grid");
        g.step = 1.0;
        return g;
    }
    const auto b = s.find(':', a + 1);
    if (b == std::string_view::npos) {
        throw std::invalid_argument("grid must be start:stop:step, got '" + std::string(s) + "'");
    }
    g.start = parse_real(s.substr(0, a), "grid start");
    g.stop = parse_real(s.substr(a + 1, b - a - 1), "grid stop");
    g.step = parse_real(s.substr(b + 1), "grid step");
    return g;
}

std::vector<double> Grid::values() const {
    if (!(step > 0.0)) {
        throw std::invalid_argument("grid step must be positive");
    }
    if (!(stop >= start)) {
        throw std::invalid_argument("grid stop lies below start");
    }
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::min(start + static_cast<double>(i) * step, stop);
    }
    return out;
}

void SweepConfig::validate() const {
    if (visibility.values().empty()) {
        throw std::invalid_argument("empty visibility grid");
    }
    if (controls.empty()) {
        throw std::invalid_argument("no control states requested");
    }
    if (rounds == 0) {
        throw std::invalid_argument("rounds must be at least 1");
    }
    if (fit_points < 5 || fit_points % 2 == 0) {
        throw std::invalid_argument("fit grid needs an odd number of points, at least five");
    }
    for (const auto &c : controls) {
        if (!(c.alpha >= 0.0 && c.alpha <= 1.0)) {
            throw std::invalid_argument("control alpha must lie in [0, 1]");
        }
    }
}

PointEstimate analytic_point(NoiseKind noise, double visibility, const ControlState &control, double theta,
                             const PhaseConvention &conv) {
    const KrausChannel ch = noise == NoiseKind::dephasing ? dephased_shift(visibility, 0.0, conv)
                                                          : depolarized_shift(visibility, 0.0, conv);
    const MsiReport r = branch_averaged_msi(build_table1_assemblage(), canonical_dilation(ch), control, theta, conv);
    PointEstimate out;
    out.f_opt_avg = r.f_opt;
    out.four_var_opt_avg = r.four_var_opt;
    for (const auto &b : r.branches) {
        out.branches.push_back({b.outcome, b.probability, b.f_opt, b.four_var_opt});
        if (b.outcome == ControlOutcome::plus) {
            out.p_plus = b.probability;
        }
    }
    return out;
}

CircuitExperiment simulate_experiment(NoiseKind noise, double visibility, const ControlState &control,
                                      const SweepConfig &cfg, const DeviceParams *device) {
    CircuitExperiment ex;
    ex.grid = default_theta_grid(cfg.conv, cfg.fit_points);
    for (double &t : ex.grid) {
        t += cfg.theta;
    }
    ex.centre = cfg.fit_points / 2;
    const Readout readouts[2] = {Readout::sigma_y, Readout::sigma_z};
    const Assemblage table1 = build_table1_assemblage();
    for (const auto &setting : table1.settings()) {
        CircuitExperiment::Setting s{setting.name, {}};
        for (std::size_t a = 0; a < setting.outcomes.size(); ++a) {
            CircuitExperiment::Run run{prep_for(setting.name, a), setting.outcomes[a].probability, {}};
            for (int m = 0; m < 2; ++m) {
                const BuildOptions opts{cfg.conv, readouts[m], control};
                for (double t : ex.grid) {
                    auto e = build(noise, visibility, t, run.prep, opts);
                    run.records[m].push_back(device ? noisy_pipeline(e, *device, cfg.formula) : simulate(e));
                }
            }
            s.runs.push_back(std::move(run));
        }
        ex.settings.push_back(std::move(s));
    }
    return ex;
}

PointEstimate estimate(const CircuitExperiment &ex, const SweepConfig &cfg, std::mt19937_64 *rng) {
    const std::size_t n_grid = ex.grid.size();
    const double eta = cfg.conv.eta();

    // observed[setting][run][readout][grid]
    std::vector<std::vector<std::array<std::vector<Joint>, 2>>> observed;
    for (const auto &s : ex.settings) {
        auto &runs = observed.emplace_back();
        for (const auto &r : s.runs) {
            auto &o = runs.emplace_back();
            for (int m = 0; m < 2; ++m) {
                for (const auto &rec : r.records[m]) {
                    o[m].push_back(observe(rec, cfg, rng));
                }
            }
        }
    }

    PointEstimate out;
    for (int c = 0; c < 2; ++c) {
        double f_best = 0.0;
        double v_best = std::numeric_limits<double>::infinity();
        double p_branch = 0.0;
        for (std::size_t si = 0; si < ex.settings.size(); ++si) {
            const auto &runs = ex.settings[si].runs;
            std::vector<double> pc(runs.size());
            double p_setting = 0.0;
            for (std::size_t a = 0; a < runs.size(); ++a) {
                const Joint &j = observed[si][a][0][ex.centre];
                pc[a] = j[2 * c] + j[2 * c + 1];
                p_setting += runs[a].weight * pc[a];
            }
            p_branch += p_setting / static_cast<double>(ex.settings.size());
            if (p_setting <= kEmptyBranch) {
                continue;
            }
            double f_m[2] = {0.0, 0.0};
            double four_var = 0.0;
            for (std::size_t a = 0; a < runs.size(); ++a) {
                const double q = runs[a].weight * pc[a] / p_setting;
                if (q <= 0.0) {
                    continue;
                }
                for (int m = 0; m < 2; ++m) {
                    std::vector<double> th, p;
                    for (std::size_t g = 0; g < n_grid; ++g) {
                        const Joint &j = observed[si][a][m][g];
                        const double n = j[2 * c] + j[2 * c + 1];
                        if (n > kEmptyBranch) {
                            th.push_back(ex.grid[g]);
                            p.push_back(j[2 * c] / n);
                        }
                    }
                    if (th.size() >= 5) {
                        f_m[m] += q * fi_from_fit(fit_sinusoid(th, p, cfg.conv), cfg.theta);
                    }
                }
                // No sigma_z counts in this branch: take the largest variance.
                const Joint &jz = observed[si][a][1][ex.centre];
                const double nz = jz[2 * c] + jz[2 * c + 1];
                const double z = nz > kEmptyBranch ? (jz[2 * c] - jz[2 * c + 1]) / nz : 0.0;
                four_var += q * 4.0 * eta * eta * (1.0 - z * z);
            }
            f_best = std::max({f_best, f_m[0], f_m[1]});
            v_best = std::min(v_best, four_var);
        }
        const auto outcome = c == 0 ? ControlOutcome::plus : ControlOutcome::minus;
        if (c == 0) {
            out.p_plus = p_branch;
        }
        if (p_branch <= kEmptyBranch || std::isinf(v_best)) {
            continue;
        }
        out.branches.push_back({outcome, p_branch, f_best, v_best});
        out.f_opt_avg += p_branch * f_best;
        out.four_var_opt_avg += p_branch * v_best;
    }
    return out;
}

SweepRecord evaluate_point(const SweepConfig &cfg, const ControlState &control, double visibility,
                           std::uint64_t point_index, const DeviceParams *device) {
    SweepRecord rec;
    rec.mode = cfg.mode;
    rec.noise = cfg.noise;
    rec.control = control_label(control);
    rec.visibility = visibility;

    std::vector<PointEstimate> rounds;
    if (cfg.mode == SweepMode::analytic) {
        rounds.push_back(analytic_point(cfg.noise, visibility, control, cfg.theta, cfg.conv));
    } else {
        const auto ex = simulate_experiment(cfg.noise, visibility, control, cfg,
                                            cfg.mode == SweepMode::noisy_circuit ? device : nullptr);
        if (cfg.shots == 0) {
            rounds.push_back(estimate(ex, cfg, nullptr));
        } else {
            auto rng = point_rng(cfg.seed, point_index);
            for (std::size_t r = 0; r < cfg.rounds; ++r) {
                rounds.push_back(estimate(ex, cfg, &rng));
            }
        }
    }

    std::vector<double> f, v, pp;
    for (const auto &e : rounds) {
        f.push_back(e.f_opt_avg);
        v.push_back(e.four_var_opt_avg);
        pp.push_back(e.p_plus);
    }
    rec.p_plus = mean(pp);
    rec.f_opt_avg = mean(f);
    rec.four_var_opt_avg = mean(v);
    rec.violation = msi_violation(std::max(rec.f_opt_avg, 0.0), std::max(rec.four_var_opt_avg, 0.0));
    rec.stderr_f = sample_sd(f);
    rec.stderr_var = sample_sd(v);

    for (auto outcome : {ControlOutcome::plus, ControlOutcome::minus}) {
        BranchDiagnostics acc{outcome, 0.0, 0.0, 0.0};
        std::size_t n = 0;
        for (const auto &e : rounds) {
            for (const auto &b : e.branches) {
                if (b.outcome == outcome) {
                    acc.probability += b.probability;
                    acc.f_opt += b.f_opt;
                    acc.four_var_opt += b.four_var_opt;
                    ++n;
                }
            }
        }
        if (n > 0) {
            acc.probability /= static_cast<double>(n);
            acc.f_opt /= static_cast<double>(n);
            acc.four_var_opt /= static_cast<double>(n);
            rec.branches.push_back(acc);
        }
    }
    return rec;
}

DeviceParams resolve_device(const SweepConfig &cfg) {
    return cfg.device_path.empty() ? ibm_cairo_params() : load_device_params(cfg.device_path);
}

SweepResult run_sweep(const SweepConfig &cfg) {
    cfg.validate();
    const auto vis = cfg.visibility.values();
    std::optional<DeviceParams> device;
    if (cfg.mode == SweepMode::noisy_circuit) {
        device = resolve_device(cfg);
    }

    const std::size_t n_points = cfg.controls.size() * vis.size();
    std::vector<std::optional<SweepRecord>> done(n_points);
    std::vector<std::optional<std::string>> errors(n_points);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n_points; i = next++) {
            const auto &control = cfg.controls[i / vis.size()];
            const double v = vis[i % vis.size()];
            try {
                done[i] = evaluate_point(cfg, control, v, i, device ? &*device : nullptr);
            } catch (const std::exception &e) {
                errors[i] = e.what();
            }
        }
    };
    std::size_t n_threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min(n_threads, n_points);
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }

    SweepResult out;
    for (std::size_t i = 0; i < n_points; ++i) {
        if (done[i]) {
            out.records.push_back(std::move(*done[i]));
        } else {
            out.failures.push_back(
                {control_label(cfg.controls[i / vis.size()]), vis[i % vis.size()], errors[i].value_or("unknown error")});
        }
    }
    return out;
}

std::optional<double> find_crossing(const std::function<double(double)> &f, double lo, double hi, double tol) {
    bool lo_pos = f(lo) > 0.0;
    if (lo_pos == (f(hi) > 0.0)) {
        return std::nullopt;
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if ((f(mid) > 0.0) == lo_pos) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace qsteer
