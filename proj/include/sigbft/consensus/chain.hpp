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
#include <memory>
#include <unordered_map>

#include "sigbft/consensus/block.hpp"
#include "sigbft/consensus/config.hpp"

namespace sigbft::consensus {

struct CommitEvent {
    std::shared_ptr<const Block> block;
    uint64_t round = 0;
    uint64_t trigger_round = 0;  // round of the certificate that caused the commit
};

struct DigestHash {
    size_t operator()(const BlockDigest& d) const {
        size_t h;
        std::memcpy(&h, d.data(), sizeof(h));
        return h;
    }
};

// Block and certificate store plus the commit rule. Blocks are chained by
// parent digest; a block commits once the configured number of consecutive
// certified rounds stacks on top of it.
class ChainState {
  public:
    struct Entry {
        std::shared_ptr<const Block> block;  // null for the genesis entry
        std::shared_ptr<const certify::Certificate> cert;
        int64_t round = -1;
        bool committed = false;
    };

    ChainState();

    bool has_block(const BlockDigest& d) const { return entries_.count(d) != 0; }
    const Entry* find(const BlockDigest& d) const;

    // inserting the same block twice is a no-op
    void insert_block(std::shared_ptr<const Block> block);

    // The block referenced by the certificate must already be stored.
    // Returns the blocks committed by this certificate, oldest first.
    std::vector<CommitEvent> add_certificate(std::shared_ptr<const certify::Certificate> cert,
                                             ChainMode mode);

    bool is_certified(const BlockDigest& d) const;

    int64_t highest_certified_round() const { return highest_certified_round_; }
    const BlockDigest& highest_certified_digest() const { return highest_certified_digest_; }
    int64_t last_committed_round() const { return last_committed_round_; }

    // per-round vote lock ("vote for at most one proposal per round")
    int64_t last_voted_round() const { return last_voted_round_; }
    void record_vote(uint64_t round) { last_voted_round_ = (int64_t)round; }

  private:
    std::vector<CommitEvent> try_commit_at(const BlockDigest& anchor, ChainMode mode,
                                           uint64_t trigger_round);
    std::vector<CommitEvent> commit_chain(const BlockDigest& tip, uint64_t trigger_round);

    std::unordered_map<BlockDigest, Entry, DigestHash> entries_;
    std::unordered_map<BlockDigest, std::vector<BlockDigest>, DigestHash> children_;
    int64_t highest_certified_round_ = -1;
    BlockDigest highest_certified_digest_;
    int64_t last_committed_round_ = -1;
    int64_t last_voted_round_ = -1;
};

}  // namespace sigbft::consensus
