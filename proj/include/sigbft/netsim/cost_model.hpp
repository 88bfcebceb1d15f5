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

#include <string>

#include "sigbft/consensus/validator.hpp"

namespace sigbft::sim {

// Per-operation crypto costs charged to validator event loops in simulated
// time. Calibrated once per host by the micro-benchmarks; a zero model turns
// the simulation into a pure network-delay study.
struct CryptoCostModel {
    struct PerScheme {
        uint64_t sign_ns = 0;
        uint64_t verify_ns = 0;            // single signature / pairing check
        uint64_t aggregate_share_ns = 0;   // per signature folded in
        uint64_t key_addition_ns = 0;      // per aggregate-key group addition
        uint64_t batch_item_ns = 0;        // per EdDSA batch item
    };

    PerScheme eddsa;
    PerScheme bls;

    static CryptoCostModel zero() { return {}; }

    uint64_t cost_ns(crypto::Scheme scheme, consensus::CryptoOp op, uint64_t count) const {
        const PerScheme& s = scheme == crypto::Scheme::kBls ? bls : eddsa;
        switch (op) {
            case consensus::CryptoOp::kSign:
                return s.sign_ns * count;
            case consensus::CryptoOp::kVerify:
            case consensus::CryptoOp::kVerifyVote:
                return s.verify_ns * count;
            case consensus::CryptoOp::kAggregateShare:
                return s.aggregate_share_ns * count;
            case consensus::CryptoOp::kKeyAddition:
                return s.key_addition_ns * count;
            case consensus::CryptoOp::kBatchVerifyItem:
                return s.batch_item_ns * count;
        }
        return 0;
    }

    // key = value serialization so calibrations can be pinned and reused
    void save(const std::string& path) const;
    static CryptoCostModel load(const std::string& path);
};

}  // namespace sigbft::sim
