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

#include "sigbft/bytes.hpp"

namespace sigbft::crypto {

using Digest32 = std::array<uint8_t, 32>;
using Digest64 = std::array<uint8_t, 64>;

Digest32 sha256(BytesView data);
Digest64 sha512(BytesView data);

// Incremental SHA-256, used by hash-to-field message expansion.
class Sha256 {
  public:
    Sha256();
    Sha256& update(BytesView data);
    Sha256& update(uint8_t byte);
    Digest32 finish();

  private:
    std::array<uint8_t, 104> state_;  // sized for crypto_hash_sha256_state
};

}  // namespace sigbft::crypto
