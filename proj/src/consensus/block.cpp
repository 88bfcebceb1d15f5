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

#include "sigbft/consensus/block.hpp"

#include "sigbft/crypto/sha.hpp"

namespace sigbft::consensus {

BlockDigest genesis_digest() {
    static const BlockDigest d = crypto::sha256(to_bytes("sigbft.genesis.v1"));
    return d;
}

Bytes Block::canonical_bytes() const {
    Bytes out;
    out.reserve(canonical_size());
    put_u64_be(out, round);
    put_u32_be(out, (uint32_t)payload.size());
    out.insert(out.end(), payload.begin(), payload.end());
    out.insert(out.end(), parent.begin(), parent.end());
    put_u16_be(out, leader);
    return out;
}

BlockDigest Block::digest() const { return crypto::sha256(canonical_bytes()); }

Block make_block(uint64_t round, Bytes payload, const BlockDigest& parent, uint16_t leader,
                 const crypto::SecretKey& leader_sk) {
    Block b;
    b.round = round;
    b.payload = std::move(payload);
    b.parent = parent;
    b.leader = leader;
    b.leader_sig = crypto::sign(leader_sk, b.canonical_bytes());
    return b;
}

bool verify_block_signature(const Block& b, const crypto::PublicKey& leader_pk) {
    if (b.leader_sig.scheme != leader_pk.scheme) return false;
    return crypto::verify(leader_pk, b.leader_sig, b.canonical_bytes());
}

}  // namespace sigbft::consensus
