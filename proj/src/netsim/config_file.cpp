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

#include "sigbft/netsim/config_file.hpp"

#include <fstream>
#include <sstream>

namespace sigbft::sim {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

}  // namespace

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (trim(line).empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

SimConfig parse_sim_config(const std::string& text) {
    auto kv = parse_key_values(text);
    SimConfig cfg;

    auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    if (auto v = take("n")) cfg.n = (uint32_t)std::stoul(*v);
    if (cfg.n < 4 || (cfg.n - 1) % 3 != 0)
        throw std::invalid_argument("config: n must be 3f+1 for integer f >= 1");
    cfg.f = (cfg.n - 1) / 3;
    if (auto v = take("f")) {
        if ((uint32_t)std::stoul(*v) != cfg.f)
            throw std::invalid_argument("config: f inconsistent with n = 3f+1");
    }
    if (auto v = take("scheme")) cfg.scheme = crypto::scheme_from_name(*v);
    if (auto v = take("block_size")) cfg.block_size_limit = std::stoull(*v);
    if (auto v = take("tx_size")) cfg.tx_size = (uint32_t)std::stoul(*v);
    if (auto v = take("tx_rate")) cfg.tx_rate_per_client = std::stod(*v);
    if (auto v = take("duration_s")) cfg.duration_us = (uint64_t)(std::stod(*v) * 1e6);
    if (auto v = take("timeout_ms")) cfg.leader_timeout_us = std::stoull(*v) * 1000;
    if (auto v = take("grace_ms")) cfg.grace_period_us = std::stoull(*v) * 1000;
    if (auto v = take("chain")) {
        if (*v == "2")
            cfg.chain_mode = consensus::ChainMode::kTwoChain;
        else if (*v == "3")
            cfg.chain_mode = consensus::ChainMode::kThreeChain;
        else
            throw std::invalid_argument("config: chain must be 2 or 3");
    }
    if (auto v = take("bls_path")) {
        if (*v == "cached")
            cfg.bls_path = certify::BlsVerifyPath::kCached;
        else if (*v == "naive")
            cfg.bls_path = certify::BlsVerifyPath::kNaive;
        else
            throw std::invalid_argument("config: bls_path must be cached or naive");
    }
    if (auto v = take("latency")) cfg.latency_preset = *v;
    if (auto v = take("link_gbps")) cfg.link_gbps = std::stod(*v);
    if (auto v = take("seed")) cfg.seed = std::stoull(*v);
    if (auto v = take("faults"); v && !v->empty()) {
        std::istringstream fs(*v);
        std::string item;
        while (std::getline(fs, item, ',')) {
            auto at = item.find('@');
            if (at == std::string::npos)
                throw std::invalid_argument("config: faults entries are validator@crash_ms");
            uint16_t val = (uint16_t)std::stoul(trim(item.substr(0, at)));
            uint64_t ms = std::stoull(trim(item.substr(at + 1)));
            if (val >= cfg.n) throw std::invalid_argument("config: fault validator out of range");
            cfg.faults.crashes.emplace_back(val, ms * 1000);
        }
        cfg.faults.validate(cfg.f);
    }

    if (!kv.empty()) throw std::invalid_argument("config: unknown key '" + kv.begin()->first + "'");

    // validate the derived committee shape early
    if (cfg.grace_period_us >= cfg.leader_timeout_us)
        throw std::invalid_argument("config: grace period must be below the leader timeout");
    return cfg;
}

SimConfig load_sim_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_sim_config(ss.str());
}

}  // namespace sigbft::sim
