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

#ifndef QSTEER_HARNESS_REPORT_H
#define QSTEER_HARNESS_REPORT_H

#include <string>
#include <string_view>
#include <vector>

#include "qsteer/harness/sweep.h"

namespace qsteer {

enum class ReportFormat { gnuplot, table };
ReportFormat parse_report_format(std::string_view s);

/// gnuplot: one data block per (mode, noise, control) series, blocks
/// separated by two blank lines so that `index` selects a series. Columns:
/// visibility, f_opt_avg, four_var_opt_avg, violation, stderr_f, stderr_var,
/// p_plus.
/// table: aligned plain-text table of every record.
std::string render_report(const std::vector<SweepRecord> &records, ReportFormat format);

}  // namespace qsteer

#endif
