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

#include "sigbft/consensus/chain.hpp"

#include <algorithm>

namespace sigbft::consensus {

ChainState::ChainState() {
    Entry genesis;
    genesis.round = -1;
    genesis.committed = true;
    highest_certified_digest_ = genesis_digest();
    entries_.emplace(genesis_digest(), std::move(genesis));
}

const ChainState::Entry* ChainState::find(const BlockDigest& d) const {
    auto it = entries_.find(d);
    return it == entries_.end() ? nullptr : &it->second;
}

void ChainState::insert_block(std::shared_ptr<const Block> block) {
    BlockDigest d = block->digest();
    if (entries_.count(d)) return;
    Entry e;
    e.round = (int64_t)block->round;
    e.block = block;
    children_[block->parent].push_back(d);
    entries_.emplace(d, std::move(e));
}

bool ChainState::is_certified(const BlockDigest& d) const {
    auto it = entries_.find(d);
    if (it == entries_.end()) return false;
    return it->second.round == -1 || it->second.cert != nullptr;  // genesis counts as certified
}

std::vector<CommitEvent> ChainState::add_certificate(
    std::shared_ptr<const certify::Certificate> cert, ChainMode mode) {
    auto it = entries_.find(cert->digest);
    if (it == entries_.end() || !it->second.block)
        throw std::logic_error("add_certificate: block not stored");
    if (it->second.cert) return {};  // duplicate certificate
    it->second.cert = cert;
    if (it->second.round > highest_certified_round_) {
        highest_certified_round_ = it->second.round;
        highest_certified_digest_ = cert->digest;
    }

    // the new certificate may complete a consecutive-round stack anchored at
    // this block or at one of its certified descendants
    uint64_t trigger = cert->round;
    std::vector<CommitEvent> commits = try_commit_at(cert->digest, mode, trigger);
    std::vector<BlockDigest> frontier{cert->digest};
    for (int depth = 0; depth < (int)mode - 1; ++depth) {
        std::vector<BlockDigest> next;
        for (const auto& d : frontier) {
            auto cit = children_.find(d);
            if (cit == children_.end()) continue;
            for (const auto& child : cit->second) {
                if (!is_certified(child)) continue;
                auto more = try_commit_at(child, mode, trigger);
                commits.insert(commits.end(), more.begin(), more.end());
                next.push_back(child);
            }
        }
        frontier = std::move(next);
    }
    return commits;
}

std::vector<CommitEvent> ChainState::try_commit_at(const BlockDigest& anchor, ChainMode mode,
                                                   uint64_t trigger_round) {
    const Entry* top = find(anchor);
    if (!top || !top->block || !top->cert) return {};

    // walk down (mode - 1) consecutive certified rounds below the anchor
    const Entry* cur = top;
    for (int step = 0; step < (int)mode - 1; ++step) {
        const Entry* parent = find(cur->block->parent);
        if (!parent || !parent->block) return {};  // genesis or unknown: nothing to commit
        if (parent->round != cur->round - 1) return {};
        if (!parent->cert) return {};
        cur = parent;
    }
    if (cur->committed) return {};
    // find the digest of cur (= the block that commits)
    return commit_chain(cur->block->digest(), trigger_round);
}

std::vector<CommitEvent> ChainState::commit_chain(const BlockDigest& tip, uint64_t trigger_round) {
    std::vector<CommitEvent> out;
    BlockDigest d = tip;
    while (true) {
        auto it = entries_.find(d);
        if (it == entries_.end() || it->second.committed || !it->second.block) break;
        out.push_back({it->second.block, (uint64_t)it->second.round, trigger_round});
        it->second.committed = true;
        d = it->second.block->parent;
    }
    std::reverse(out.begin(), out.end());
    if (!out.empty())
        last_committed_round_ = std::max(last_committed_round_, (int64_t)out.back().round);
    return out;
}

}  // namespace sigbft::consensus
