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

#include "sigbft/crypto/sha.hpp"

#include <sodium.h>

static_assert(sizeof(crypto_hash_sha256_state) <= 104, "state buffer too small");

namespace sigbft::crypto {

Digest32 sha256(BytesView data) {
    Digest32 out;
    crypto_hash_sha256(out.data(), data.data(), data.size());
    return out;
}

Digest64 sha512(BytesView data) {
    Digest64 out;
    crypto_hash_sha512(out.data(), data.data(), data.size());
    return out;
}

Sha256::Sha256() {
    crypto_hash_sha256_init(reinterpret_cast<crypto_hash_sha256_state*>(state_.data()));
}

Sha256& Sha256::update(BytesView data) {
    crypto_hash_sha256_update(reinterpret_cast<crypto_hash_sha256_state*>(state_.data()),
                              data.data(), data.size());
    return *this;
}

Sha256& Sha256::update(uint8_t byte) {
    crypto_hash_sha256_update(reinterpret_cast<crypto_hash_sha256_state*>(state_.data()), &byte, 1);
    return *this;
}

Digest32 Sha256::finish() {
    Digest32 out;
    crypto_hash_sha256_final(reinterpret_cast<crypto_hash_sha256_state*>(state_.data()), out.data());
    return out;
}

}  // namespace sigbft::crypto
