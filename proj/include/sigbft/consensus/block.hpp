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

#include "sigbft/certify/certify.hpp"

namespace sigbft::consensus {

using certify::BlockDigest;

// The digest every chain starts from; it refers to no block.
BlockDigest genesis_digest();

struct Block {
    uint64_t round = 0;
    Bytes payload;             // opaque transaction bytes
    BlockDigest parent{};      // digest of the highest certified ancestor
    uint16_t leader = 0;
    crypto::SignatureValue leader_sig;

    // canonical serialization, signed as a unit:
    // [8 B round][4 B payload length][payload][32 B parent digest][2 B leader index]
    Bytes canonical_bytes() const;
    size_t canonical_size() const { return 8 + 4 + payload.size() + 32 + 2; }
    BlockDigest digest() const;
};

Block make_block(uint64_t round, Bytes payload, const BlockDigest& parent, uint16_t leader,
                 const crypto::SecretKey& leader_sk);

// leader signature over the canonical serialization
bool verify_block_signature(const Block& b, const crypto::PublicKey& leader_pk);

}  // namespace sigbft::consensus
