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

#include "sigbft/netsim/sim.hpp"

#include <algorithm>
#include <sstream>

namespace sigbft::sim {

namespace {

using consensus::CryptoOp;
using consensus::Message;
using consensus::Output;
using consensus::TimerKind;
using consensus::Validator;

struct Event {
    uint64_t at_us;
    uint64_t seq;  // insertion order breaks timestamp ties deterministically
    enum Kind : uint8_t { kMessage, kTimer, kClientSubmit } kind;
    uint16_t dst = 0;
    uint16_t src = 0;
    std::shared_ptr<const Message> msg;
    TimerKind timer_kind = TimerKind::kLeaderTimeout;
    uint64_t timer_round = 0;
    uint16_t client = 0;

    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            return std::tie(a.at_us, a.seq) > std::tie(b.at_us, b.seq);
        }
    };
};

class Engine : public consensus::CostMeter {
  public:
    explicit Engine(const SimConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
        if (cfg_.n != 3 * cfg_.f + 1) throw std::invalid_argument("sim: n must equal 3f+1");
        if (cfg_.tx_size < 16) throw std::invalid_argument("sim: tx_size below tracking header");
        cfg_.faults.validate(cfg_.f);
        latency_ = LatencyModel::preset(cfg_.latency_preset, cfg_.n);

        // deterministic committee keys derived from the seed
        std::vector<std::pair<crypto::PublicKey, crypto::ProofOfPossession>> admission;
        std::vector<crypto::PublicKey> pks;
        std::vector<crypto::SecretKey> sks;
        for (uint32_t i = 0; i < cfg_.n; ++i) {
            Bytes seed = to_bytes("sim-validator");
            put_u64_be(seed, cfg_.seed);
            put_u16_be(seed, (uint16_t)i);
            auto kp = crypto::keygen(cfg_.scheme, seed);
            admission.emplace_back(kp.pk, crypto::prove_possession(kp.sk, kp.pk));
            pks.push_back(kp.pk);
            sks.push_back(kp.sk);
        }
        certify::KeyCache cache = certify::build_key_cache(admission, cfg_.f);

        consensus::CommitteeConfig committee;
        committee.n = cfg_.n;
        committee.f = cfg_.f;
        committee.scheme = cfg_.scheme;
        committee.pks = pks;
        committee.block_size_limit = cfg_.block_size_limit;
        committee.grace_period_us = cfg_.grace_period_us;
        committee.leader_timeout_us = cfg_.leader_timeout_us;
        committee.chain_mode = cfg_.chain_mode;
        committee.bls_path = cfg_.bls_path;

        validators_.reserve(cfg_.n);
        for (uint32_t i = 0; i < cfg_.n; ++i)
            validators_.push_back(
                std::make_unique<Validator>((uint16_t)i, committee, cache, sks[i], this));

        crash_at_.assign(cfg_.n, UINT64_MAX);
        for (auto [v, t] : cfg_.faults.crashes) crash_at_[v] = t;
        busy_until_.assign(cfg_.n, 0);
        link_free_.assign(cfg_.n, 0);
        last_delivery_.assign((size_t)cfg_.n * cfg_.n, 0);

        trace_.config = cfg_;
        trace_.busy.resize(cfg_.n);
    }

    SimTrace run() {
        // schedule client submissions over the whole run
        if (cfg_.tx_rate_per_client > 0.0) {
            for (uint32_t c = 0; c < cfg_.n; ++c) {
                double gap_us = 1e6 / cfg_.tx_rate_per_client;
                uint64_t k = 0;
                for (double t = 0.0; t < (double)cfg_.duration_us; t += gap_us, ++k) {
                    Event e;
                    e.at_us = (uint64_t)t;
                    e.seq = next_seq_++;
                    e.kind = Event::kClientSubmit;
                    e.dst = (uint16_t)c;
                    e.client = (uint16_t)c;
                    queue_.push(std::move(e));
                }
            }
        }

        // boot every validator at t = 0
        for (uint32_t i = 0; i < cfg_.n; ++i) {
            Output out;
            if (!crashed(i, 0)) {
                charge_ns_ = 0;
                validators_[i]->start(out);
                apply_output(i, 0 + consume_charge_us(), out);
            }
        }

        while (!queue_.empty()) {
            Event e = queue_.top();
            queue_.pop();
            if (e.at_us > cfg_.duration_us) break;
            dispatch(e);
        }

        for (uint32_t i = 0; i < cfg_.n; ++i)
            trace_.validator_stats.push_back(validators_[i]->stats());
        std::sort(trace_.commits.begin(), trace_.commits.end(),
                  [](const auto& a, const auto& b) {
                      return std::tie(a.at_us, a.validator, a.round) <
                             std::tie(b.at_us, b.validator, b.round);
                  });
        return std::move(trace_);
    }

    // CostMeter: accumulate simulated crypto time for the validator whose
    // handler is currently executing
    void charge(CryptoOp op, uint64_t count) override {
        uint64_t ns = cfg_.costs.cost_ns(cfg_.scheme, op, count);
        charge_ns_ += ns;
        auto& b = trace_.busy[current_];
        switch (op) {
            case CryptoOp::kSign: b.sign += ns; break;
            case CryptoOp::kVerify: b.verify += ns; break;
            case CryptoOp::kVerifyVote: b.verify_vote += ns; break;
            case CryptoOp::kAggregateShare: b.aggregate += ns; break;
            case CryptoOp::kKeyAddition:
                b.key_add += ns;
                trace_.key_additions += count;
                break;
            case CryptoOp::kBatchVerifyItem: b.batch_item += ns; break;
        }
        if (op == CryptoOp::kKeyAddition || op == CryptoOp::kBatchVerifyItem) {
            // one certificate verification charges these exactly once
        }
    }

  private:
    bool crashed(uint32_t v, uint64_t now) const { return now >= crash_at_[v]; }

    uint64_t consume_charge_us() {
        uint64_t us = (charge_ns_ + 999) / 1000;
        charge_ns_ = 0;
        return us;
    }

    void dispatch(const Event& e) {
        uint16_t v = e.dst;
        // handlers start when both the event has arrived and the loop is free
        uint64_t start = std::max(e.at_us, busy_until_[v]);
        if (crashed(v, start)) return;

        if (e.kind == Event::kClientSubmit) {
            Bytes tx(cfg_.tx_size, 0);
            uint64_t id = trace_.txs.size();
            Bytes header;
            put_u64_be(header, e.at_us);
            put_u64_be(header, id);
            std::copy(header.begin(), header.end(), tx.begin());
            validators_[v]->submit_transaction(std::move(tx));
            trace_.txs.push_back({e.at_us, UINT64_MAX});
            ++trace_.txs_submitted;
            return;  // mempool intake is not charged
        }

        current_ = v;
        charge_ns_ = 0;
        Output out;
        if (e.kind == Event::kMessage) {
            validators_[v]->on_message(e.src, *e.msg, out);
        } else {
            validators_[v]->on_timer(e.timer_kind, e.timer_round, out);
        }
        uint64_t done = start + consume_charge_us();
        busy_until_[v] = done;
        apply_output(v, done, out);
    }

    void apply_output(uint16_t src, uint64_t now, const Output& out) {
        for (const auto& send : out.sends) {
            if (send.dst == Output::kBroadcast) {
                for (uint16_t d = 0; d < cfg_.n; ++d)
                    if (d != src) enqueue_send(src, d, send.msg, now);
            } else {
                enqueue_send(src, send.dst, send.msg, now);
            }
        }
        for (const auto& t : out.timers) {
            Event e;
            e.at_us = now + t.delay_us;
            e.seq = next_seq_++;
            e.kind = Event::kTimer;
            e.dst = src;
            e.timer_kind = t.kind;
            e.timer_round = t.round;
            queue_.push(std::move(e));
        }
        for (const auto& c : out.commits) record_commit(src, now, c);
    }

    void enqueue_send(uint16_t src, uint16_t dst, const Message& msg, uint64_t now) {
        // per-message serialization delay on the sender's egress link
        size_t bytes = msg.encoded_size();
        uint64_t ser_us = 0;
        if (cfg_.link_gbps > 0)
            ser_us = (uint64_t)((double)bytes * 8.0 / (cfg_.link_gbps * 1000.0));
        uint64_t departure = std::max(now, link_free_[src]) + ser_us;
        link_free_[src] = departure;

        uint64_t delivery = departure + latency_.sample(src, dst, rng_);
        // reliable FIFO channels: delivery order per (src, dst) never inverts
        uint64_t& last = last_delivery_[(size_t)src * cfg_.n + dst];
        delivery = std::max(delivery, last);
        last = delivery;

        ++trace_.messages_sent;
        trace_.bytes_sent += bytes;

        Event e;
        e.at_us = delivery;
        e.seq = next_seq_++;
        e.kind = Event::kMessage;
        e.dst = dst;
        e.src = src;
        e.msg = std::make_shared<Message>(msg);
        queue_.push(std::move(e));
    }

    void record_commit(uint16_t v, uint64_t now, const consensus::CommitEvent& c) {
        trace_.commits.push_back(
            {now, v, c.round, c.trigger_round, c.block->digest(), (uint32_t)c.block->payload.size()});
        // first committer resolves each transaction's latency
        const Bytes& payload = c.block->payload;
        for (size_t off = 0; off + cfg_.tx_size <= payload.size(); off += cfg_.tx_size) {
            uint64_t id = 0;
            for (int i = 0; i < 8; ++i) id = id << 8 | payload[off + 8 + i];
            if (id < trace_.txs.size() && trace_.txs[id].first_commit_us > now)
                trace_.txs[id].first_commit_us = now;
        }
        ++commit_events_;
    }

    SimConfig cfg_;
    std::mt19937_64 rng_;
    LatencyModel latency_;
    std::vector<std::unique_ptr<Validator>> validators_;
    std::vector<uint64_t> crash_at_;
    std::vector<uint64_t> busy_until_;
    std::vector<uint64_t> link_free_;
    std::vector<uint64_t> last_delivery_;
    std::priority_queue<Event, std::vector<Event>, Event::Later> queue_;
    uint64_t next_seq_ = 0;
    uint16_t current_ = 0;
    uint64_t charge_ns_ = 0;
    uint64_t commit_events_ = 0;
    SimTrace trace_;
};

}  // namespace

SimTrace run_simulation(const SimConfig& config) { return Engine(config).run(); }

std::string SimTrace::export_lines() const {
    std::ostringstream os;
    os << "run 0 - n=" << config.n << " f=" << config.f
       << " scheme=" << crypto::scheme_name(config.scheme) << " seed=" << config.seed
       << " duration_us=" << config.duration_us << "\n";
    for (const auto& c : commits) {
        os << "commit " << c.at_us << " " << c.validator << " round=" << c.round
           << " trigger=" << c.trigger_round << " digest=" << to_hex(c.digest).substr(0, 16)
           << " bytes=" << c.payload_bytes << "\n";
    }
    for (size_t v = 0; v < validator_stats.size(); ++v) {
        const auto& s = validator_stats[v];
        os << "validator " << config.duration_us << " " << v
           << " proposals=" << s.proposals_made << " votes=" << s.votes_sent
           << " certs_formed=" << s.certificates_formed
           << " certs_accepted=" << s.certificates_accepted
           << " view_changes=" << s.view_changes << " committed=" << s.blocks_committed
           << " busy_ns=" << busy[v].total() << "\n";
    }
    uint64_t committed = 0;
    for (const auto& t : txs)
        if (t.first_commit_us != UINT64_MAX) ++committed;
    os << "summary " << config.duration_us << " - msgs=" << messages_sent
       << " bytes=" << bytes_sent << " txs_submitted=" << txs_submitted
       << " txs_committed=" << committed << " view_changes=" << total_view_changes() << "\n";
    return os.str();
}

}  // namespace sigbft::sim
