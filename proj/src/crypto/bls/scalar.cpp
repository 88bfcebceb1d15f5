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

#include "sigbft/crypto/bls/scalar.hpp"

#include <algorithm>

namespace sigbft::bls {

namespace {

// multi-limb helpers over little-endian u64 vectors
bool geq(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = n; i-- > 0;) {
        uint64_t ai = i < a.size() ? a[i] : 0;
        uint64_t bi = i < b.size() ? b[i] : 0;
        if (ai != bi) return ai > bi;
    }
    return true;
}

void sub_inplace(std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    uint64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t bi = i < b.size() ? b[i] : 0;
        unsigned __int128 d = (unsigned __int128)a[i] - bi - borrow;
        a[i] = (uint64_t)d;
        borrow = (uint64_t)(d >> 64) ? 1 : 0;
    }
}

}  // namespace

Scalar Scalar::from_bytes_be_reduce(BytesView bytes) {
    // schoolbook binary reduction: obviously correct, used off the hot path
    std::vector<uint64_t> val((bytes.size() + 7) / 8, 0);
    for (size_t i = 0; i < bytes.size(); ++i) {
        size_t bit = (bytes.size() - 1 - i) * 8;
        val[bit / 64] |= (uint64_t)bytes[i] << (bit % 64);
    }
    std::vector<uint64_t> r(kOrder.begin(), kOrder.end());

    int val_bits = 0;
    for (size_t i = val.size(); i-- > 0;) {
        if (val[i]) {
            int b = 63;
            while (!(val[i] >> b & 1)) --b;
            val_bits = (int)i * 64 + b + 1;
            break;
        }
    }
    const int r_bits = 255;
    for (int shift = val_bits - r_bits; shift >= 0; --shift) {
        // rs = r << shift
        std::vector<uint64_t> rs(val.size(), 0);
        int limb_shift = shift / 64, bit_shift = shift % 64;
        for (size_t i = 0; i < r.size(); ++i) {
            size_t j = i + limb_shift;
            if (j < rs.size()) rs[j] |= r[i] << bit_shift;
            if (bit_shift && j + 1 < rs.size()) rs[j + 1] |= r[i] >> (64 - bit_shift);
        }
        if (geq(val, rs)) sub_inplace(val, rs);
    }
    Scalar out;
    for (int i = 0; i < 4; ++i) out.limb[i] = i < (int)val.size() ? val[i] : 0;
    return out;
}

bool Scalar::from_bytes_be(BytesView bytes, Scalar& out) {
    if (bytes.size() != 32) return false;
    Scalar s;
    for (int i = 0; i < 4; ++i) {
        uint64_t w = 0;
        for (int b = 0; b < 8; ++b) w = w << 8 | bytes[i * 8 + b];
        s.limb[3 - i] = w;
    }
    for (int i = 3; i >= 0; --i) {
        if (s.limb[i] != kOrder[i]) {
            if (s.limb[i] > kOrder[i]) return false;
            break;
        }
        if (i == 0) return false;  // equal to r
    }
    out = s;
    return true;
}

}  // namespace sigbft::bls
