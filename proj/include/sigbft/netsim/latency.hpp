// Copyright 2026 The sigbft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace sigbft::sim {

// One-way delay model: an n x n base-delay matrix with uniform +/-10% jitter.
struct LatencyModel {
    uint32_t n = 0;
    std::vector<uint64_t> base_us;  // row-major n x n
    double jitter_frac = 0.10;

    uint64_t base(uint32_t src, uint32_t dst) const { return base_us[src * n + dst]; }

    uint64_t sample(uint32_t src, uint32_t dst, std::mt19937_64& rng) const {
        uint64_t b = base(src, dst);
        if (b == 0 || jitter_frac <= 0.0) return b;
        double lo = 1.0 - jitter_frac, hi = 1.0 + jitter_frac;
        std::uniform_real_distribution<double> dist(lo, hi);
        return (uint64_t)((double)b * dist(rng));
    }

    static LatencyModel zero(uint32_t n);
    static LatencyModel uniform(uint32_t n, uint64_t base_us);

    // four synthetic regions with intra-region and inter-region one-way
    // delays in the 1-140 ms range; validators are assigned to regions
    // round-robin
    static LatencyModel wan4(uint32_t n);

    // "zero" | "lan" | "uniform90" | "wan4"
    static LatencyModel preset(const std::string& name, uint32_t n);
};

}  // namespace sigbft::sim
