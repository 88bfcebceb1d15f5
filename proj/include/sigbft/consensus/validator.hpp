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

#include <deque>
#include <functional>
#include <set>

#include "sigbft/consensus/chain.hpp"
#include "sigbft/consensus/messages.hpp"

namespace sigbft::consensus {

// Crypto operations whose execution time is charged to the hosting event
// loop (the network simulator injects measured costs here).
enum class CryptoOp : uint8_t {
    kSign,
    kVerify,            // single signature or pairing-equation check
    kVerifyVote,        // vote verification at the leader (same unit cost as
                        // kVerify, tracked separately for leader accounting)
    kAggregateShare,    // per signature folded into an aggregate
    kKeyAddition,       // per group addition on aggregate public keys
    kBatchVerifyItem,   // per item of an EdDSA batch verification
};

struct CostMeter {
    virtual ~CostMeter() = default;
    virtual void charge(CryptoOp op, uint64_t count) = 0;
};

enum class TimerKind : uint8_t { kLeaderTimeout = 1, kGrace = 2 };

struct TimerRequest {
    TimerKind kind;
    uint64_t round;
    uint64_t delay_us;
};

enum class DropReason : uint8_t {
    kBadLeaderSignature,
    kWrongLeader,
    kAlreadyVoted,
    kStaleRound,
    kOversizedPayload,
    kUnknownParent,       // triggers a sync request, proposal parked
    kParentNotCertified,
    kInvalidVote,
    kInvalidCertificate,
    kDuplicate,
};

// Effects produced by one state-machine step; the host (simulator or test)
// performs them.
struct Output {
    static constexpr uint16_t kBroadcast = 0xffff;

    struct Send {
        uint16_t dst;  // kBroadcast sends to every other validator
        Message msg;
    };

    std::vector<Send> sends;
    std::vector<TimerRequest> timers;
    std::vector<CommitEvent> commits;
    std::vector<std::pair<DropReason, uint64_t>> drops;  // reason, round
};

struct ValidatorStats {
    uint64_t proposals_made = 0;
    uint64_t votes_sent = 0;
    uint64_t certificates_formed = 0;
    uint64_t certificates_accepted = 0;
    uint64_t view_changes = 0;  // own leader-timeout firings
    uint64_t timeout_notices_seen = 0;
    uint64_t sync_requests_sent = 0;
    uint64_t blocks_committed = 0;
};

// One validator of the committee: a single-threaded state machine consuming
// network messages and timer events, producing sends, timers and commits.
class Validator {
  public:
    Validator(uint16_t index, CommitteeConfig config, certify::KeyCache cache,
              crypto::SecretKey sk, CostMeter* meter = nullptr);

    // enters round 0 (proposing if leader)
    void start(Output& out);

    void on_message(uint16_t src, const Message& msg, Output& out);
    void on_timer(TimerKind kind, uint64_t round, Output& out);

    // transaction intake (opaque bytes)
    void submit_transaction(Bytes tx);
    size_t mempool_size() const { return mempool_.size(); }

    uint64_t current_round() const { return round_; }
    int64_t last_committed_round() const { return chain_.last_committed_round(); }
    const ChainState& chain() const { return chain_; }
    const ValidatorStats& stats() const { return stats_; }
    uint16_t index() const { return index_; }

  private:
    bool is_leader(uint64_t round) const { return leader_for(config_, round) == index_; }
    void advance_round(uint64_t round, Output& out);
    void propose(Output& out);
    void handle_proposal(uint16_t src, std::shared_ptr<const Block> block, Output& out);
    void handle_vote(const certify::Vote& vote, Output& out);
    void handle_certificate(std::shared_ptr<const certify::Certificate> cert, Output& out);
    void handle_sync_request(uint16_t src, const BlockDigest& want, Output& out);
    void handle_sync_response(uint16_t src, const Message& msg, Output& out);
    void assemble_and_broadcast(Output& out);
    void accept_certificate(std::shared_ptr<const certify::Certificate> cert, Output& out);
    void record_vote_for(const Block& block, Output& out);

    uint16_t index_;
    CommitteeConfig config_;
    certify::KeyCache cache_;
    crypto::SecretKey sk_;
    CostMeter* meter_;

    ChainState chain_;
    uint64_t round_ = 0;
    std::deque<Bytes> mempool_;
    size_t mempool_bytes_ = 0;

    // leader-side vote collection for the current proposal
    struct RoundState {
        uint64_t round = 0;
        BlockDigest proposal_digest{};
        bool proposed = false;
        bool cert_built = false;
        bool grace_started = false;
        std::vector<certify::Vote> votes;
        std::set<uint16_t> voters;
    } round_state_;

    // messages parked until their parent block arrives
    std::unordered_map<BlockDigest, std::vector<Message>, DigestHash> pending_on_;

    ValidatorStats stats_;
};

}  // namespace sigbft::consensus
