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

#include "sigbft/netsim/latency.hpp"

#include <stdexcept>

namespace sigbft::sim {

LatencyModel LatencyModel::zero(uint32_t n) {
    LatencyModel m;
    m.n = n;
    m.base_us.assign((size_t)n * n, 0);
    m.jitter_frac = 0.0;
    return m;
}

LatencyModel LatencyModel::uniform(uint32_t n, uint64_t base_us) {
    LatencyModel m;
    m.n = n;
    m.base_us.assign((size_t)n * n, base_us);
    for (uint32_t i = 0; i < n; ++i) m.base_us[i * n + i] = 0;
    return m;
}

LatencyModel LatencyModel::wan4(uint32_t n) {
    // symmetric one-way delays between four regions, in ms
    static const uint64_t region_ms[4][4] = {
        {1, 35, 45, 100},
        {35, 1, 70, 70},
        {45, 70, 1, 140},
        {100, 70, 140, 1},
    };
    LatencyModel m;
    m.n = n;
    m.base_us.resize((size_t)n * n);
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = 0; j < n; ++j) {
            m.base_us[i * n + j] = i == j ? 0 : region_ms[i % 4][j % 4] * 1000;
        }
    }
    return m;
}

LatencyModel LatencyModel::preset(const std::string& name, uint32_t n) {
    if (name == "zero") return zero(n);
    if (name == "lan") return uniform(n, 500);
    if (name == "uniform90") return uniform(n, 90 * 1000);
    if (name == "wan4") return wan4(n);
    throw std::invalid_argument("unknown latency preset: " + name);
}

}  // namespace sigbft::sim
