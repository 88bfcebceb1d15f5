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

#include "sigbft/netsim/sim.hpp"

namespace sigbft::sim {

// Key = value configuration format ('#' starts a comment):
//
//   n = 4                  committee size (3f+1)
//   scheme = bls           bls | eddsa
//   block_size = 500000    bytes
//   tx_size = 512          bytes
//   tx_rate = 100          transactions per second per client
//   duration_s = 10        simulated seconds
//   timeout_ms = 5000      leader timeout
//   grace_ms = 75          leader grace period
//   chain = 2              2 | 3 (commit rule)
//   bls_path = cached      cached | naive
//   latency = wan4         zero | lan | uniform90 | wan4
//   link_gbps = 5
//   faults = 1@2000,3@5000 validator@crash_ms, at most f entries
//   seed = 42

std::map<std::string, std::string> parse_key_values(const std::string& text);

SimConfig parse_sim_config(const std::string& text);
SimConfig load_sim_config(const std::string& path);

}  // namespace sigbft::sim
