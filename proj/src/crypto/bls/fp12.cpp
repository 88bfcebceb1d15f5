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

#include "sigbft/crypto/bls/fp12.hpp"

namespace sigbft::bls {

namespace {

// (p - 1) / 6, little-endian limbs; p ≡ 1 (mod 6)
constexpr Fp::Limbs compute_p_minus_1_over_6() {
    Fp::Limbs n = Fp::kModulus;
    n[0] -= 1;
    Fp::Limbs q{};
    unsigned __int128 rem = 0;
    for (int i = Fp::kLimbs - 1; i >= 0; --i) {
        unsigned __int128 cur = (rem << 64) | n[i];
        q[i] = (uint64_t)(cur / 6);
        rem = cur % 6;
    }
    return q;
}

struct FrobeniusConstants {
    // gamma[k] = xi^(k (p-1)/6) for k = 0..5, xi = 1 + u
    Fp2 gamma[6];

    FrobeniusConstants() {
        constexpr Fp::Limbs e = compute_p_minus_1_over_6();
        Fp2 xi{Fp::one(), Fp::one()};
        gamma[0] = Fp2::one();
        gamma[1] = xi.pow(std::span<const uint64_t>(e.data(), e.size()));
        for (int k = 2; k < 6; ++k) gamma[k] = Fp2::mul(gamma[k - 1], gamma[1]);
    }
};

const FrobeniusConstants& frob() {
    static const FrobeniusConstants c;
    return c;
}

}  // namespace

Fp12 Fp12::frobenius() const {
    const auto& g = frob();
    // (v^j)^p = gamma[2j] v^j and w^p = gamma[1] w for conjugated coefficients
    return {
        Fp6{c0.c0.conjugate(), c0.c1.conjugate() * g.gamma[2], c0.c2.conjugate() * g.gamma[4]},
        Fp6{c1.c0.conjugate() * g.gamma[1], c1.c1.conjugate() * g.gamma[3],
            c1.c2.conjugate() * g.gamma[5]},
    };
}

}  // namespace sigbft::bls
