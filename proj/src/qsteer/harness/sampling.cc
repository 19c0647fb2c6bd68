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

#include "qsteer/harness/sampling.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsteer {

std::mt19937_64 point_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

std::vector<std::uint64_t> sample_counts(const std::vector<double> &probs, std::uint64_t shots,
                                         std::mt19937_64 &rng) {
    if (shots == 0) {
        throw std::invalid_argument("sample_counts: shots must be at least 1");
    }
    if (probs.empty()) {
        throw std::invalid_argument("sample_counts: empty distribution");
    }
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) {
            throw std::invalid_argument("sample_counts: negative or NaN probability");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("sample_counts: probabilities do not sum to one");
    }
    std::vector<std::uint64_t> counts(probs.size(), 0);
    std::uint64_t left = shots;
    double mass = total;
    for (std::size_t i = 0; i + 1 < probs.size() && left > 0; ++i) {
        const double q = mass > 0.0 ? std::clamp(probs[i] / mass, 0.0, 1.0) : 0.0;
        std::binomial_distribution<std::uint64_t> b(left, q);
        counts[i] = q >= 1.0 ? left : b(rng);
        left -= counts[i];
        mass -= probs[i];
    }
    counts.back() += left;
    return counts;
}

std::vector<std::uint64_t> sample_counts(const MeasurementRecord &r, std::uint64_t shots, std::mt19937_64 &rng) {
    return sample_counts(r.probabilities(), shots, rng);
}

std::vector<std::uint64_t> sample_counts(const MeasurementRecord &r, std::uint64_t shots, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_counts(r, shots, rng);
}

}  // namespace qsteer
