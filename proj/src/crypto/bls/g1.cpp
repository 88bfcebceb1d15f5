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

#include "sigbft/crypto/bls/g1.hpp"

namespace sigbft::bls {

namespace {

Fp fp_from_hex(const char* hex) {
    Bytes raw = from_hex(hex);
    Fp out;
    if (raw.size() != 48 || !Fp::from_bytes_be(raw.data(), out))
        throw std::logic_error("bad Fp constant");
    return out;
}

}  // namespace

const Fp& G1Traits::b() {
    static const Fp v = Fp::from_u64(4);
    return v;
}

const Fp& G1Traits::b3() {
    static const Fp v = Fp::from_u64(12);
    return v;
}

const G1& g1_generator() {
    static const G1 gen = [] {
        Fp x = fp_from_hex(
            "17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac58"
            "6c55e83ff97a1aeffb3af00adb22c6bb");
        Fp y = fp_from_hex(
            "08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2c04b3ed"
            "d03cc744a2888ae40caa232946c5e7e1");
        G1 g = G1::from_affine(x, y);
        if (!g.on_curve()) throw std::logic_error("G1 generator not on curve");
        return g;
    }();
    return gen;
}

std::array<uint8_t, kG1CompressedSize> g1_compress(const G1& p) {
    std::array<uint8_t, kG1CompressedSize> out{};
    if (p.is_identity()) {
        out[0] = 0x80 | 0x40;
        return out;
    }
    Fp ax, ay;
    p.to_affine(ax, ay);
    ax.to_bytes_be(out.data());
    out[0] |= 0x80;
    if (ay.is_lexicographically_largest()) out[0] |= 0x20;
    return out;
}

bool g1_decompress(BytesView bytes, G1& out) {
    if (bytes.size() != kG1CompressedSize) return false;
    uint8_t flags = bytes[0];
    if (!(flags & 0x80)) return false;  // only compressed form supported
    bool infinity = flags & 0x40;
    bool sign = flags & 0x20;

    std::array<uint8_t, kG1CompressedSize> data;
    std::copy(bytes.begin(), bytes.end(), data.begin());
    data[0] &= 0x1f;

    if (infinity) {
        if (sign) return false;
        for (uint8_t b : data)
            if (b) return false;
        out = G1::identity();
        return true;
    }

    Fp x;
    if (!Fp::from_bytes_be(data.data(), x)) return false;
    Fp rhs = x * x * x + G1Traits::b();
    Fp y;
    if (!rhs.sqrt(y)) return false;
    if (y.is_lexicographically_largest() != sign) y = y.neg();
    G1 p = G1::from_affine(x, y);
    if (!p.in_prime_order_subgroup()) return false;
    out = p;
    return true;
}

}  // namespace sigbft::bls
