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

#include <map>
#include <queue>

#include "sigbft/netsim/cost_model.hpp"
#include "sigbft/netsim/latency.hpp"

namespace sigbft::sim {

// One benchmark client attached to a validator, submitting fixed-size
// transactions at a fixed rate for the whole run.
struct ClientLoad {
    uint16_t validator = 0;
    double tx_per_second = 0.0;
    uint32_t tx_size = 512;  // bytes; must hold the 16-byte tracking header
};

struct FaultPlan {
    std::vector<std::pair<uint16_t, uint64_t>> crashes;  // validator, time µs

    void validate(uint32_t f) const {
        if (crashes.size() > f)
            throw std::invalid_argument("fault plan exceeds the tolerated fault bound f");
    }
};

struct SimConfig {
    uint32_t n = 4;
    uint32_t f = 1;
    crypto::Scheme scheme = crypto::Scheme::kEddsa;
    uint64_t duration_us = 10 * 1000 * 1000;
    uint64_t seed = 1;

    uint64_t block_size_limit = 500 * 1000;
    uint32_t tx_size = 512;
    double tx_rate_per_client = 0.0;  // 0 disables client load
    uint64_t grace_period_us = 75 * 1000;
    uint64_t leader_timeout_us = 5 * 1000 * 1000;
    consensus::ChainMode chain_mode = consensus::ChainMode::kTwoChain;
    certify::BlsVerifyPath bls_path = certify::BlsVerifyPath::kCached;

    std::string latency_preset = "zero";
    double link_gbps = 5.0;  // per-validator egress; 0 disables serialization delay

    CryptoCostModel costs;  // zero unless calibrated
    FaultPlan faults;
};

struct TxRecord {
    uint64_t submit_us = 0;
    uint64_t first_commit_us = UINT64_MAX;
};

struct SimTrace {
    SimConfig config;

    struct CommitRecord {
        uint64_t at_us;
        uint16_t validator;
        uint64_t round;
        uint64_t trigger_round;
        certify::BlockDigest digest;
        uint32_t payload_bytes;
    };
    std::vector<CommitRecord> commits;

    std::vector<TxRecord> txs;  // indexed by tx id
    uint64_t messages_sent = 0;
    uint64_t bytes_sent = 0;
    uint64_t txs_submitted = 0;

    std::vector<consensus::ValidatorStats> validator_stats;

    // simulated crypto busy time per validator per op, in ns
    struct BusyTime {
        uint64_t sign = 0, verify = 0, verify_vote = 0, aggregate = 0, key_add = 0,
                 batch_item = 0;
        uint64_t total() const {
            return sign + verify + verify_vote + aggregate + key_add + batch_item;
        }
    };
    std::vector<BusyTime> busy;

    // per-certificate-verification group additions observed (BLS)
    uint64_t key_additions = 0;
    uint64_t certificates_verified = 0;

    uint64_t total_view_changes() const {
        uint64_t c = 0;
        for (const auto& s : validator_stats) c += s.view_changes;
        return c;
    }

    uint64_t committed_tx_count(uint64_t from_us, uint64_t to_us) const {
        uint64_t c = 0;
        for (const auto& t : txs)
            if (t.first_commit_us >= from_us && t.first_commit_us < to_us) ++c;
        return c;
    }

    // line-delimited record export: "<event-type> <timestamp-us> <validator> <detail>"
    std::string export_lines() const;
};

// Deterministic discrete-event simulation of one committee run. Identical
// (config, seed) pairs produce identical traces.
SimTrace run_simulation(const SimConfig& config);

}  // namespace sigbft::sim
