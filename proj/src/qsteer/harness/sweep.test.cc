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

#include <cmath>

#include "gtest/gtest.h"

#include "qsteer/harness/csv.h"

using namespace qsteer;

namespace {

SweepConfig small_circuit_config() {
    SweepConfig cfg;
    cfg.mode = SweepMode::circuit;
    cfg.visibility = Grid{0.0, 1.0, 0.5};
    cfg.controls = {ControlState::plus(), ControlState::maximally_mixed()};
    cfg.shots = 2000;
    cfg.rounds = 3;
    cfg.seed = 99;
    return cfg;
}

}  // namespace

TEST(sweep, grid_parsing_and_values) {
    auto g = Grid::parse("0:1:0.1");
    auto v = g.values();
    ASSERT_EQ(v.size(), 11u);
    EXPECT_EQ(v.back(), 1.0);
    EXPECT_EQ(Grid::parse("0.25").values(), std::vector<double>{0.25});
    EXPECT_THROW(Grid::parse("0:1").values(), std::invalid_argument);
    EXPECT_THROW(Grid::parse("0:1:0").values(), std::invalid_argument);
    EXPECT_THROW(Grid::parse("1:0:0.1").values(), std::invalid_argument);
    EXPECT_THROW(Grid::parse("a:1:0.1"), std::invalid_argument);
}

TEST(sweep, control_labels_round_trip) {
    for (const char *s : {"plus", "mixed", "pure:0.3", "mixed:0.7"}) {
        EXPECT_EQ(control_label(parse_control(s)), s);
    }
    auto a = parse_control("alpha=0.25");
    EXPECT_EQ(a.kind, ControlState::Kind::pure_superposition);
    EXPECT_EQ(a.alpha, 0.25);
    EXPECT_THROW(parse_control("quantum"), std::invalid_argument);
    EXPECT_THROW(parse_control("alpha=x"), std::invalid_argument);
}

TEST(sweep, names_parse) {
    EXPECT_EQ(parse_noise_kind("deph"), NoiseKind::dephasing);
    EXPECT_EQ(parse_noise_kind("depo"), NoiseKind::depolarizing);
    EXPECT_THROW(parse_noise_kind("amp"), std::invalid_argument);
    for (auto m : {SweepMode::analytic, SweepMode::circuit, SweepMode::noisy_circuit}) {
        EXPECT_EQ(parse_sweep_mode(sweep_mode_name(m)), m);
    }
}

TEST(sweep, config_validation) {
    SweepConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.rounds = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = SweepConfig{};
    cfg.fit_points = 20;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = SweepConfig{};
    cfg.controls.clear();
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(sweep, analytic_dephased_full_noise_row_is_one_third) {
    SweepConfig cfg;
    cfg.visibility = Grid{1.0, 1.0, 1.0};
    auto res = run_sweep(cfg);
    ASSERT_EQ(res.records.size(), 1u);
    EXPECT_NEAR(res.records[0].violation, 1.0 / 3.0, 1e-10);
    EXPECT_NEAR(res.records[0].p_plus, 0.75, 1e-12);
    EXPECT_NEAR(res.records[0].violation, res.records[0].f_opt_avg - res.records[0].four_var_opt_avg, 1e-12);
}

TEST(sweep, analytic_depolarized_incoherent_vanishes_at_closed_form_root) {
    auto margin = [](double v) {
        return analytic_point(NoiseKind::depolarizing, v, ControlState::maximally_mixed(), 0.0, PhaseConvention())
            .margin();
    };
    auto root = find_crossing(margin, 0.0, 1.0, 1e-9);
    ASSERT_TRUE(root.has_value());
    EXPECT_NEAR(*root, 1 - 1 / std::sqrt(2.0), 1e-8);
}

TEST(sweep, noiseless_circuit_exact_matches_analytic) {
    SweepConfig cfg;
    cfg.shots = 0;
    for (auto noise : {NoiseKind::dephasing, NoiseKind::depolarizing}) {
        for (auto control : {ControlState::plus(), ControlState::maximally_mixed(), ControlState::pure(0.3)}) {
            for (double x : {0.0, 0.35, 1.0}) {
                auto a = analytic_point(noise, x, control, 0.0, cfg.conv);
                auto c = estimate(simulate_experiment(noise, x, control, cfg, nullptr), cfg, nullptr);
                EXPECT_NEAR(c.p_plus, a.p_plus, 1e-10);
                EXPECT_NEAR(c.f_opt_avg, a.f_opt_avg, 1e-6) << x;
                EXPECT_NEAR(c.four_var_opt_avg, a.four_var_opt_avg, 1e-6) << x;
            }
        }
    }
}

TEST(sweep, exact_mode_is_seed_independent) {
    SweepConfig cfg = small_circuit_config();
    cfg.shots = 0;
    auto a = emit_csv(run_sweep(cfg).records);
    cfg.seed = 12345;
    EXPECT_EQ(a, emit_csv(run_sweep(cfg).records));
}

TEST(sweep, identical_configs_give_identical_csv_across_thread_counts) {
    SweepConfig cfg = small_circuit_config();
    cfg.threads = 1;
    auto serial = emit_csv(run_sweep(cfg).records);
    cfg.threads = 4;
    auto parallel = emit_csv(run_sweep(cfg).records);
    EXPECT_EQ(serial, parallel);
    EXPECT_EQ(parallel, emit_csv(run_sweep(cfg).records));
    cfg.seed = 100;
    EXPECT_NE(parallel, emit_csv(run_sweep(cfg).records));
}

TEST(sweep, records_follow_control_then_visibility_order) {
    auto res = run_sweep(small_circuit_config());
    ASSERT_EQ(res.records.size(), 6u);
    EXPECT_EQ(res.records[0].control, "plus");
    EXPECT_EQ(res.records[3].control, "mixed");
    EXPECT_EQ(res.records[4].visibility, 0.5);
    for (const auto &r : res.records) {
        EXPECT_NEAR(r.violation, std::max(r.f_opt_avg - r.four_var_opt_avg, 0.0), 1e-12);
        EXPECT_GT(r.stderr_f, 0.0);
    }
}

TEST(sweep, failing_points_are_reported_and_others_survive) {
    SweepConfig cfg;
    cfg.visibility = Grid{0.8, 1.2, 0.2};
    auto res = run_sweep(cfg);
    EXPECT_EQ(res.records.size(), 2u);
    ASSERT_EQ(res.failures.size(), 1u);
    EXPECT_NEAR(res.failures[0].visibility, 1.2, 1e-12);
    EXPECT_FALSE(res.failures[0].message.empty());
}

TEST(sweep, shot_noise_fi_brackets_analytic_value) {
    SweepConfig cfg;
    cfg.mode = SweepMode::circuit;
    cfg.shots = 10000;
    cfg.rounds = 40;
    cfg.seed = 3;
    auto r = evaluate_point(cfg, ControlState::plus(), 0.0, 0, nullptr);
    EXPECT_GT(r.stderr_f, 0.0);
    EXPECT_LT(std::abs(r.f_opt_avg - 1.0), 5 * r.stderr_f);
}

TEST(sweep, noisy_mode_lowers_the_violation) {
    SweepConfig cfg;
    cfg.mode = SweepMode::noisy_circuit;
    cfg.shots = 0;
    cfg.visibility = Grid{0.3, 0.3, 1.0};
    auto noisy = run_sweep(cfg).records.at(0);
    cfg.mode = SweepMode::circuit;
    auto clean = run_sweep(cfg).records.at(0);
    EXPECT_LT(noisy.violation, clean.violation);
    EXPECT_GT(noisy.four_var_opt_avg, clean.four_var_opt_avg);
}

TEST(sweep, crossing_search) {
    auto r = find_crossing([](double x) { return 0.3 - x; }, 0.0, 1.0, 1e-10);
    ASSERT_TRUE(r.has_value());
    EXPECT_NEAR(*r, 0.3, 1e-9);
    EXPECT_FALSE(find_crossing([](double) { return 1.0; }, 0.0, 1.0).has_value());
}
