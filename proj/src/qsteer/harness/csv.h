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

#ifndef QSTEER_HARNESS_CSV_H
#define QSTEER_HARNESS_CSV_H

#include <string>
#include <string_view>
#include <vector>

#include "qsteer/harness/sweep.h"

namespace qsteer {

inline constexpr std::string_view kCsvHeader =
    "mode,noise,control,visibility,p_plus,f_opt_avg,four_var_opt_avg,violation,stderr_f,stderr_var";

/// Header plus one row per record; reals with 17 significant digits.
std::string emit_csv(const std::vector<SweepRecord> &records);

/// Inverse of emit_csv (branch diagnostics are not serialized). Errors carry
/// line numbers.
std::vector<SweepRecord> parse_csv(std::string_view text);

}  // namespace qsteer

#endif
