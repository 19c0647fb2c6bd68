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

#ifndef QSTEER_HARNESS_CONFIG_H
#define QSTEER_HARNESS_CONFIG_H

#include <map>
#include <string>
#include <string_view>

#include "qsteer/harness/sweep.h"

namespace qsteer {

/// "key = value" lines; '#' starts a comment. Duplicate keys and lines
/// without '=' are rejected with their line number.
std::map<std::string, std::string> parse_key_values(std::string_view text);

/// Applies recognised keys to `cfg`: noise, mode, visibility (or w_grid),
/// control (comma separated), theta, fit_points, shots, rounds, seed, eta,
/// device, dephasing, threads. Unknown keys are rejected.
void apply_config(const std::map<std::string, std::string> &kv, SweepConfig &cfg);

SweepConfig load_config(const std::string &path);

/// Writes every field back in the same format.
std::string write_config(const SweepConfig &cfg);

}  // namespace qsteer

#endif
