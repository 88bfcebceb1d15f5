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
#include <cstdint>

#include "sigbft/bytes.hpp"

namespace sigbft::bls {

// Scalar in Z_r where r is the prime order of the BLS12-381 pairing groups.
// Canonical little-endian limbs, always fully reduced.
struct Scalar {
    static constexpr std::array<uint64_t, 4> kOrder = {
        0xffffffff00000001ull, 0x53bda402fffe5bfeull,
        0x3339d80809a1d805ull, 0x73eda753299d7d48ull,
    };

    std::array<uint64_t, 4> limb{};

    static Scalar zero() { return {}; }
    static Scalar from_u64(uint64_t v) { return Scalar{{v, 0, 0, 0}}; }

    bool is_zero() const { return (limb[0] | limb[1] | limb[2] | limb[3]) == 0; }
    bool operator==(const Scalar& o) const { return limb == o.limb; }

    int bit_length() const {
        for (int i = 3; i >= 0; --i) {
            if (limb[i]) {
                int b = 63;
                while (!(limb[i] >> b & 1)) --b;
                return i * 64 + b + 1;
            }
        }
        return 0;
    }

    bool bit(int i) const { return (limb[i / 64] >> (i % 64)) & 1; }

    // reduce an arbitrary-length big-endian byte string mod r
    static Scalar from_bytes_be_reduce(BytesView bytes);

    std::array<uint8_t, 32> to_bytes_be() const {
        std::array<uint8_t, 32> out{};
        for (int i = 0; i < 4; ++i) {
            uint64_t w = limb[3 - i];
            for (int b = 0; b < 8; ++b) out[i * 8 + b] = (uint8_t)(w >> (56 - 8 * b));
        }
        return out;
    }

    // strict parse of a canonical 32-byte big-endian scalar (must be < r)
    static bool from_bytes_be(BytesView bytes, Scalar& out);
};

}  // namespace sigbft::bls
