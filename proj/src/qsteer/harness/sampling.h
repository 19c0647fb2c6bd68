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

#ifndef QSTEER_HARNESS_SAMPLING_H
#define QSTEER_HARNESS_SAMPLING_H

#include <cstdint>
#include <random>
#include <vector>

#include "qsteer/circuits/simulator.h"

namespace qsteer {

/// Independent stream for grid point `index` of a run seeded with `seed`.
/// Serial and parallel sweeps draw identical numbers per point.
std::mt19937_64 point_rng(std::uint64_t seed, std::uint64_t index);

/// Multinomial draw of `shots` outcomes, as a chain of binomial draws.
/// Throws std::invalid_argument for shots == 0 or a distribution with
/// negative entries or a total away from one by more than 1e-9.
std::vector<std::uint64_t> sample_counts(const std::vector<double> &probs, std::uint64_t shots,
                                         std::mt19937_64 &rng);
std::vector<std::uint64_t> sample_counts(const MeasurementRecord &r, std::uint64_t shots, std::mt19937_64 &rng);
std::vector<std::uint64_t> sample_counts(const MeasurementRecord &r, std::uint64_t shots, std::uint64_t seed);

}  // namespace qsteer

#endif
