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

#include <vector>

#include "sigbft/crypto/bls/fp12.hpp"
#include "sigbft/crypto/bls/g1.hpp"
#include "sigbft/crypto/bls/g2.hpp"

namespace sigbft::bls {

// Optimal ate pairing e: G1 x G2 -> GT for BLS12-381.

// Product of Miller loops over all pairs (shared squaring), no final
// exponentiation. Pairs containing the identity contribute the unit.
Fp12 miller_loop(const std::vector<std::pair<G1, G2>>& pairs);

Fp12 final_exponentiation(const Fp12& f);

inline Fp12 pairing(const G1& p, const G2& q) {
    return final_exponentiation(miller_loop({{p, q}}));
}

// true iff the product of pairings over all pairs equals the GT identity
inline bool pairing_product_is_one(const std::vector<std::pair<G1, G2>>& pairs) {
    return final_exponentiation(miller_loop(pairs)).is_one();
}

}  // namespace sigbft::bls
