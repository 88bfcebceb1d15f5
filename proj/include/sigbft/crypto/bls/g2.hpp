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

#include "sigbft/crypto/bls/fp2.hpp"
#include "sigbft/crypto/bls/point.hpp"

namespace sigbft::bls {

struct G2Traits {
    static const Fp2& b();   // 4(1 + u)
    static const Fp2& b3();  // 12(1 + u)
};

using G2 = Projective<Fp2, G2Traits>;

inline constexpr size_t kG2CompressedSize = 96;

const G2& g2_generator();

std::array<uint8_t, kG2CompressedSize> g2_compress(const G2& p);
bool g2_decompress(BytesView bytes, G2& out);

// Counter for elliptic curve additions performed through the aggregate-key
// manipulation API (key aggregation and dis-aggregation). Scalar
// multiplication and pairing internals do not touch it.
uint64_t g2_key_additions();
void g2_reset_key_additions();
G2 g2_counted_add(const G2& a, const G2& b);

}  // namespace sigbft::bls
