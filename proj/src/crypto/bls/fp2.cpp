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

#include "sigbft/crypto/bls/fp2.hpp"

namespace sigbft::bls {

namespace {

// (p - 3) / 4, little-endian limbs
constexpr Fp::Limbs compute_p_minus_3_over_4() {
    Fp::Limbs e = Fp::kModulus;
    e[0] -= 3;
    for (int i = 0; i < Fp::kLimbs; ++i) {
        uint64_t next = (i + 1 < Fp::kLimbs) ? e[i + 1] : 0;
        e[i] = (e[i] >> 2) | (next << 62);
    }
    return e;
}

// (p - 1) / 2
constexpr Fp::Limbs compute_p_minus_1_over_2() {
    Fp::Limbs e = Fp::kModulus;
    e[0] -= 1;
    for (int i = 0; i < Fp::kLimbs; ++i) {
        uint64_t next = (i + 1 < Fp::kLimbs) ? e[i + 1] : 0;
        e[i] = (e[i] >> 1) | (next << 63);
    }
    return e;
}

constexpr Fp::Limbs kPm3o4 = compute_p_minus_3_over_4();
constexpr Fp::Limbs kPm1o2 = compute_p_minus_1_over_2();

}  // namespace

bool Fp2::sqrt(Fp2& out) const {
    if (is_zero()) {
        out = zero();
        return true;
    }
    // Adj & Rodriguez-Henriquez square root for q = p^2, p ≡ 3 (mod 4)
    Fp2 a1 = pow(std::span<const uint64_t>(kPm3o4.data(), kPm3o4.size()));
    Fp2 x0 = mul(a1, *this);          // a^((p+1)/4)
    Fp2 alpha = mul(a1, x0);          // a^((p-1)/2)

    Fp2 cand;
    if (alpha == Fp2{Fp::one().neg(), Fp::zero()}) {
        // multiply by u (a square root of -1)
        cand = Fp2{x0.c1.neg(), x0.c0};
    } else {
        Fp2 b = add(alpha, one()).pow(std::span<const uint64_t>(kPm1o2.data(), kPm1o2.size()));
        cand = mul(b, x0);
    }
    if (cand.square() == *this) {
        out = cand;
        return true;
    }
    return false;
}

}  // namespace sigbft::bls
