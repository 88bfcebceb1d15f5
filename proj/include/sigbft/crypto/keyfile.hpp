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

#include "sigbft/crypto/scheme.hpp"

namespace sigbft::crypto {

// Keypair files hold length-prefixed binary records:
//   [u32 BE record length][1 B scheme tag][secret key material][public key material]
// BLS: 32-byte big-endian scalar + 96-byte compressed G2 key.
// EdDSA: 32-byte seed + 32-byte public key.

Bytes encode_keypair(const Keypair& kp);
Keypair decode_keypair(BytesView record);  // throws on malformed input

void save_keypairs(const std::string& path, std::span<const Keypair> kps);
std::vector<Keypair> load_keypairs(const std::string& path);

}  // namespace sigbft::crypto
