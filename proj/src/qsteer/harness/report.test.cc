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

#include "qsteer/harness/report.h"

#include <algorithm>

#include "gtest/gtest.h"

using namespace qsteer;

namespace {

SweepRecord rec(const char *control, double v) {
    SweepRecord r;
    r.control = control;
    r.visibility = v;
    r.f_opt_avg = 1.0 - v;
    return r;
}

}  // namespace

TEST(report, gnuplot_blocks_per_series) {
    auto text = render_report({rec("plus", 0.0), rec("mixed", 0.0), rec("plus", 0.5)}, ReportFormat::gnuplot);
    EXPECT_NE(text.find("# index 0: mode=analytic noise=deph control=plus"), std::string::npos);
    EXPECT_NE(text.find("# index 1: mode=analytic noise=deph control=mixed"), std::string::npos);
    EXPECT_EQ(text.find("# index 2"), std::string::npos);
    // Both plus rows land in the first block.
    EXPECT_LT(text.find("\n0.5 0.5 "), text.find("# index 1"));
    EXPECT_NE(text.find("\n\n\n# index 1"), std::string::npos);
}

TEST(report, table_has_header_and_one_line_per_record) {
    auto text = render_report({rec("plus", 0.0), rec("plus", 0.1)}, ReportFormat::table);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
    EXPECT_EQ(text.rfind("mode", 0), 0u);
}

TEST(report, empty_input) {
    EXPECT_TRUE(render_report({}, ReportFormat::gnuplot).empty());
    const auto table = render_report({}, ReportFormat::table);
    EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 1);
}

TEST(report, format_names) {
    EXPECT_EQ(parse_report_format("gnuplot"), ReportFormat::gnuplot);
    EXPECT_EQ(parse_report_format("table"), ReportFormat::table);
    EXPECT_THROW(parse_report_format("png"), std::invalid_argument);
}
