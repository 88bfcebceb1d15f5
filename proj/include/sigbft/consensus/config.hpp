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

#include <stdexcept>

#include "sigbft/certify/certify.hpp"

namespace sigbft::consensus {

enum class ChainMode : uint8_t { kTwoChain = 2, kThreeChain = 3 };

struct CommitteeConfig {
    uint32_t n = 4;
    uint32_t f = 1;
    crypto::Scheme scheme = crypto::Scheme::kEddsa;
    std::vector<crypto::PublicKey> pks;  // committee order defines indices

    uint64_t block_size_limit = 500 * 1000;   // bytes
    uint64_t grace_period_us = 75 * 1000;     // wait for late votes past 2f+1
    uint64_t leader_timeout_us = 5 * 1000 * 1000;
    ChainMode chain_mode = ChainMode::kTwoChain;
    certify::BlsVerifyPath bls_path = certify::BlsVerifyPath::kCached;

    void validate() const {
        if (n != 3 * f + 1) throw std::invalid_argument("committee: n must equal 3f+1");
        if (pks.size() != n) throw std::invalid_argument("committee: key count mismatch");
        if (grace_period_us >= leader_timeout_us)
            throw std::invalid_argument("committee: grace period must be below the leader timeout");
    }
};

// Round-robin leader schedule; identical at every validator.
inline uint16_t leader_for(const CommitteeConfig& cfg, uint64_t round) {
    return (uint16_t)(round % cfg.n);
}

}  // namespace sigbft::consensus
