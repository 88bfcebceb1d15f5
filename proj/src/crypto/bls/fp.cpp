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

#include "sigbft/crypto/bls/fp.hpp"

namespace sigbft::bls {

Fp Fp::from_bytes_be_wide(const uint8_t in[64]) {
    // split into hi (first 32 bytes) and lo (last 32 bytes):
    // value = hi * 2^256 + lo, both halves < 2^256 < p
    Limbs hi{}, lo{};
    for (int i = 0; i < 4; ++i) {
        uint64_t w = 0;
        for (int b = 0; b < 8; ++b) w = w << 8 | in[i * 8 + b];
        hi[3 - i] = w;
    }
    for (int i = 0; i < 4; ++i) {
        uint64_t w = 0;
        for (int b = 0; b < 8; ++b) w = w << 8 | in[32 + i * 8 + b];
        lo[3 - i] = w;
    }
    Fp hi_f = from_canonical(hi);
    Fp lo_f = from_canonical(lo);
    Fp shift = from_canonical(kTwo256);
    return add(mul(hi_f, shift), lo_f);
}

}  // namespace sigbft::bls
