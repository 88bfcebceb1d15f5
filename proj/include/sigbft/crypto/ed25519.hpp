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

#include <array>
#include <vector>

#include "sigbft/bytes.hpp"

namespace sigbft::crypto::ed25519 {

inline constexpr size_t kPublicKeySize = 32;
inline constexpr size_t kSecretKeySize = 64;  // libsodium layout: seed || pk
inline constexpr size_t kSeedSize = 32;
inline constexpr size_t kSignatureSize = 64;

using PublicKeyBytes = std::array<uint8_t, kPublicKeySize>;
using SecretKeyBytes = std::array<uint8_t, kSecretKeySize>;
using SignatureBytes = std::array<uint8_t, kSignatureSize>;

struct Keypair {
    PublicKeyBytes pk;
    SecretKeyBytes sk;
};

Keypair keygen(const std::array<uint8_t, kSeedSize>& seed);
SignatureBytes sign(const SecretKeyBytes& sk, BytesView msg);
bool verify(const PublicKeyBytes& pk, const SignatureBytes& sig, BytesView msg);

struct BatchItem {
    PublicKeyBytes pk;
    SignatureBytes sig;
    Bytes msg;
};

// Randomized batch verification. The fast path checks one multi-scalar
// equation covering every item; on failure (or on inputs the fast path will
// not vouch for, e.g. undecodable or small-order points) it falls back to
// verifying each item individually, so the per-item results always agree
// with verify().
std::vector<bool> batch_verify(const std::vector<BatchItem>& items);

}  // namespace sigbft::crypto::ed25519
