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

#include "sigbft/crypto/bls/fp.hpp"
#include "sigbft/crypto/bls/point.hpp"

namespace sigbft::bls {

struct G1Traits {
    static const Fp& b();   // 4
    static const Fp& b3();  // 12
};

using G1 = Projective<Fp, G1Traits>;

inline constexpr size_t kG1CompressedSize = 48;

const G1& g1_generator();

// zkcrypto-compatible compressed encoding: big-endian x with flag bits
// (compressed | infinity | y-sign) in the three MSBs of byte 0.
std::array<uint8_t, kG1CompressedSize> g1_compress(const G1& p);

// Full validation: canonical field element, on curve, prime-order subgroup.
bool g1_decompress(BytesView bytes, G1& out);

}  // namespace sigbft::bls
