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

#include "qsteer/circuits/circuit_io.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "qsteer/circuits/builders.h"

using namespace qsteer;

namespace {

void expect_same(const Circuit &a, const Circuit &b) {
    ASSERT_EQ(a.roles(), b.roles());
    ASSERT_EQ(a.measured(), b.measured());
    ASSERT_EQ(a.operations().size(), b.operations().size());
    for (std::size_t i = 0; i < a.operations().size(); ++i) {
        const auto &x = a.operations()[i];
        const auto &y = b.operations()[i];
        EXPECT_EQ(x.gate.kind, y.gate.kind);
        EXPECT_EQ(x.gate.qubits, y.gate.qubits);
        EXPECT_EQ(x.gate.angle, y.gate.angle);
        EXPECT_EQ(x.annotation.duration_ns, y.annotation.duration_ns);
        EXPECT_EQ(x.annotation.error_rate, y.annotation.error_rate);
        EXPECT_EQ(x.annotation.cnot_equivalent, y.annotation.cnot_equivalent);
    }
}

}  // namespace

TEST(circuit_io, round_trips_builder_output_bit_for_bit) {
    BuildOptions opts;
    auto d = build_dephased_circuit(0.37, 0.1 * std::numbers::pi / 3.0, PrepLabel::minus, opts);
    expect_same(d, parse_circuit(write_circuit(d)));
    auto a = build_depolarized_circuit(0.61, -1.1, PrepLabel::one, opts);
    expect_same(a, parse_circuit(write_circuit(a)));
}

TEST(circuit_io, accepts_role_names_comments_and_annotations) {
    auto c = parse_circuit(
        "# two qubits\n"
        "roles C B\n"
        "measure C B\n"
        "h C\n"
        "RZ B 0.5   # phase\n"
        "cnot C,B duration=300 error=0.01 cnots=1\n");
    ASSERT_EQ(c.operations().size(), 3u);
    EXPECT_EQ(c.operations()[1].gate.angle, 0.5);
    EXPECT_EQ(c.operations()[2].gate.qubits, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(*c.operations()[2].annotation.duration_ns, 300.0);
    EXPECT_EQ(*c.operations()[2].annotation.error_rate, 0.01);
    EXPECT_EQ(c.measured(), (std::vector<std::size_t>{0, 1}));
}

TEST(circuit_io, errors_report_line_numbers) {
    try {
        parse_circuit("roles a b\nH 0\nFOO 1\n");
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    EXPECT_THROW(parse_circuit("H 0\n"), std::invalid_argument);
    EXPECT_THROW(parse_circuit(""), std::invalid_argument);
    EXPECT_THROW(parse_circuit("roles a\nRZ 0\n"), std::invalid_argument);
    EXPECT_THROW(parse_circuit("roles a\nRZ 0 abc\n"), std::invalid_argument);
    EXPECT_THROW(parse_circuit("roles a\nH z\n"), std::invalid_argument);
    EXPECT_THROW(parse_circuit("roles a\nH 3\n"), std::invalid_argument);
    EXPECT_THROW(parse_circuit("roles a b\nCNOT 0,0\n"), std::invalid_argument);
    EXPECT_THROW(parse_circuit("roles a\nH 0 speed=3\n"), std::invalid_argument);
    EXPECT_THROW(parse_circuit("roles a\nroles b\n"), std::invalid_argument);
}
