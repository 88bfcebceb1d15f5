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

#include "sigbft/consensus/validator.hpp"

namespace sigbft::consensus {

namespace {

void meter_charge(CostMeter* m, CryptoOp op, uint64_t count = 1) {
    if (m && count) m->charge(op, count);
}

}  // namespace

Validator::Validator(uint16_t index, CommitteeConfig config, certify::KeyCache cache,
                     crypto::SecretKey sk, CostMeter* meter)
    : index_(index),
      config_(std::move(config)),
      cache_(std::move(cache)),
      sk_(std::move(sk)),
      meter_(meter) {
    config_.validate();
}

void Validator::start(Output& out) { advance_round(0, out); }

void Validator::submit_transaction(Bytes tx) {
    mempool_bytes_ += tx.size();
    mempool_.push_back(std::move(tx));
}

void Validator::advance_round(uint64_t round, Output& out) {
    round_ = round;
    round_state_ = RoundState{};
    round_state_.round = round;
    out.timers.push_back({TimerKind::kLeaderTimeout, round, config_.leader_timeout_us});
    if (is_leader(round)) propose(out);
}

void Validator::propose(Output& out) {
    Bytes payload;
    while (!mempool_.empty() && payload.size() + mempool_.front().size() <= config_.block_size_limit) {
        payload.insert(payload.end(), mempool_.front().begin(), mempool_.front().end());
        mempool_bytes_ -= mempool_.front().size();
        mempool_.pop_front();
    }

    meter_charge(meter_, CryptoOp::kSign);  // block signature
    auto block = std::make_shared<Block>(make_block(
        round_, std::move(payload), chain_.highest_certified_digest(), index_, sk_));
    chain_.insert_block(block);
    ++stats_.proposals_made;

    round_state_.proposed = true;
    round_state_.proposal_digest = block->digest();

    out.sends.push_back({Output::kBroadcast, proposal_message(block)});

    // the leader counter-signs its own proposal
    record_vote_for(*block, out);
}

void Validator::record_vote_for(const Block& block, Output& out) {
    meter_charge(meter_, CryptoOp::kSign);
    certify::Vote vote = certify::make_vote(sk_, index_, block.round, block.digest());
    chain_.record_vote(block.round);
    ++stats_.votes_sent;
    if (block.leader == index_) {
        handle_vote(vote, out);  // leader loops its own vote back
    } else {
        out.sends.push_back({block.leader, vote_message(vote)});
    }
}

void Validator::on_message(uint16_t src, const Message& msg, Output& out) {
    switch (msg.type) {
        case MsgType::kProposal:
            handle_proposal(src, msg.block, out);
            break;
        case MsgType::kVote:
            handle_vote(msg.vote, out);
            break;
        case MsgType::kCertificate:
            handle_certificate(msg.cert, out);
            break;
        case MsgType::kTimeout:
            ++stats_.timeout_notices_seen;
            break;
        case MsgType::kSyncRequest:
            handle_sync_request(src, msg.want, out);
            break;
        case MsgType::kSyncResponse:
            handle_sync_response(src, msg, out);
            break;
    }
}

void Validator::handle_proposal(uint16_t src, std::shared_ptr<const Block> block, Output& out) {
    if (!block) return;
    const uint64_t r = block->round;

    if (block->leader != leader_for(config_, r)) {
        out.drops.push_back({DropReason::kWrongLeader, r});
        return;
    }
    if ((int64_t)r <= chain_.last_voted_round()) {
        out.drops.push_back({DropReason::kAlreadyVoted, r});
        return;
    }
    if (r < round_) {
        out.drops.push_back({DropReason::kStaleRound, r});
        return;
    }
    if (block->payload.size() > config_.block_size_limit) {
        out.drops.push_back({DropReason::kOversizedPayload, r});
        return;
    }

    const ChainState::Entry* parent = chain_.find(block->parent);
    if (!parent) {
        // park the proposal and pull the missing ancestor from the sender
        out.drops.push_back({DropReason::kUnknownParent, r});
        pending_on_[block->parent].push_back(proposal_message(block));
        out.sends.push_back({src, sync_request_message(block->parent)});
        ++stats_.sync_requests_sent;
        return;
    }
    if (parent->round >= (int64_t)r) {
        out.drops.push_back({DropReason::kStaleRound, r});
        return;
    }
    if (!chain_.is_certified(block->parent)) {
        out.drops.push_back({DropReason::kParentNotCertified, r});
        return;
    }

    meter_charge(meter_, CryptoOp::kVerify);
    if (!verify_block_signature(*block, cache_.pks[block->leader])) {
        out.drops.push_back({DropReason::kBadLeaderSignature, r});
        return;
    }

    chain_.insert_block(block);
    if (r > round_) advance_round(r, out);  // proposals carry round synchronization
    record_vote_for(*block, out);

    // a certificate may have been parked waiting for this block
    auto pit = pending_on_.find(block->digest());
    if (pit != pending_on_.end()) {
        auto parked = std::move(pit->second);
        pending_on_.erase(pit);
        for (const auto& m : parked) on_message(src, m, out);
    }
}

void Validator::handle_vote(const certify::Vote& vote, Output& out) {
    if (!round_state_.proposed || round_state_.cert_built || vote.round != round_state_.round) {
        out.drops.push_back({DropReason::kStaleRound, vote.round});
        return;
    }
    if (round_state_.voters.count(vote.voter)) {
        out.drops.push_back({DropReason::kDuplicate, vote.round});
        return;
    }
    meter_charge(meter_, CryptoOp::kVerifyVote);
    if (!certify::verify_vote(cache_, vote, round_state_.proposal_digest)) {
        out.drops.push_back({DropReason::kInvalidVote, vote.round});
        return;
    }
    round_state_.voters.insert(vote.voter);
    round_state_.votes.push_back(vote);

    const uint32_t quorum = cache_.quorum();
    if (round_state_.votes.size() == cache_.n) {
        // everyone voted: no need to wait out the grace period
        assemble_and_broadcast(out);
    } else if (round_state_.votes.size() == quorum && !round_state_.grace_started) {
        round_state_.grace_started = true;
        out.timers.push_back({TimerKind::kGrace, round_state_.round, config_.grace_period_us});
    }
}

void Validator::assemble_and_broadcast(Output& out) {
    round_state_.cert_built = true;
    meter_charge(meter_, CryptoOp::kAggregateShare, round_state_.votes.size());
    auto cert = std::make_shared<certify::Certificate>(
        certify::assemble_certificate(cache_, round_state_.votes));
    ++stats_.certificates_formed;
    out.sends.push_back({Output::kBroadcast, certificate_message(cert)});
    handle_certificate(cert, out);
}

void Validator::handle_certificate(std::shared_ptr<const certify::Certificate> cert, Output& out) {
    if (!cert) return;
    if (chain_.is_certified(cert->digest)) {
        out.drops.push_back({DropReason::kDuplicate, cert->round});
        return;
    }

    // verification cost: dis-aggregation (or re-aggregation) plus one
    // aggregate-signature check for BLS, a batch verification for EdDSA
    if (cache_.scheme == crypto::Scheme::kBls) {
        uint64_t additions =
            config_.bls_path == certify::BlsVerifyPath::kCached
                ? cert->non_signers.popcount()
                : (cert->contributors() > 0 ? cert->contributors() - 1 : 0);
        meter_charge(meter_, CryptoOp::kKeyAddition, additions);
        meter_charge(meter_, CryptoOp::kVerify);
    } else {
        meter_charge(meter_, CryptoOp::kBatchVerifyItem, cert->votes.size());
    }
    if (!certify::verify_certificate(cache_, *cert, config_.bls_path)) {
        out.drops.push_back({DropReason::kInvalidCertificate, cert->round});
        return;
    }

    if (!chain_.has_block(cert->digest)) {
        // valid certificate for a block we have not seen: park it and fetch
        out.drops.push_back({DropReason::kUnknownParent, cert->round});
        pending_on_[cert->digest].push_back(certificate_message(cert));
        uint16_t from = leader_for(config_, cert->round);
        if (from == index_) from = (uint16_t)((index_ + 1) % config_.n);
        out.sends.push_back({from, sync_request_message(cert->digest)});
        ++stats_.sync_requests_sent;
        return;
    }
    accept_certificate(std::move(cert), out);
}

void Validator::accept_certificate(std::shared_ptr<const certify::Certificate> cert, Output& out) {
    ++stats_.certificates_accepted;
    uint64_t r = cert->round;
    auto commits = chain_.add_certificate(std::move(cert), config_.chain_mode);
    stats_.blocks_committed += commits.size();
    out.commits.insert(out.commits.end(), commits.begin(), commits.end());
    if (r >= round_) advance_round(r + 1, out);
}

void Validator::handle_sync_request(uint16_t src, const BlockDigest& want, Output& out) {
    const ChainState::Entry* e = chain_.find(want);
    if (!e || !e->block) return;
    out.sends.push_back({src, sync_response_message(e->block, e->cert)});
}

void Validator::handle_sync_response(uint16_t src, const Message& msg, Output& out) {
    if (!msg.block) return;
    const Block& b = *msg.block;
    if (b.leader != leader_for(config_, b.round)) return;
    meter_charge(meter_, CryptoOp::kVerify);
    if (!verify_block_signature(b, cache_.pks[b.leader])) return;
    chain_.insert_block(msg.block);
    BlockDigest d = b.digest();

    if (msg.cert && !chain_.is_certified(d)) handle_certificate(msg.cert, out);

    auto pit = pending_on_.find(d);
    if (pit != pending_on_.end()) {
        auto parked = std::move(pit->second);
        pending_on_.erase(pit);
        for (const auto& m : parked) on_message(src, m, out);
    }
}

void Validator::on_timer(TimerKind kind, uint64_t round, Output& out) {
    switch (kind) {
        case TimerKind::kGrace:
            // assemble with whatever quorum is on hand, unless the
            // certificate already went out or the round moved on
            if (round_state_.round == round && round_state_.proposed &&
                !round_state_.cert_built && round_state_.votes.size() >= cache_.quorum()) {
                assemble_and_broadcast(out);
            }
            break;
        case TimerKind::kLeaderTimeout:
            if (round_ == round) {
                // no certificate for this round in time: advance and notify
                ++stats_.view_changes;
                out.sends.push_back({Output::kBroadcast, timeout_message(round)});
                advance_round(round + 1, out);
            }
            break;
    }
}

}  // namespace sigbft::consensus
