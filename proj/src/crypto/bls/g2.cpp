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

#include "sigbft/crypto/bls/g2.hpp"

namespace sigbft::bls {

namespace {

Fp fp_from_hex(const char* hex) {
    Bytes raw = from_hex(hex);
    Fp out;
    if (raw.size() != 48 || !Fp::from_bytes_be(raw.data(), out))
        throw std::logic_error("bad Fp constant");
    return out;
}

thread_local uint64_t t_key_additions = 0;

}  // namespace

const Fp2& G2Traits::b() {
    static const Fp2 v = {Fp::from_u64(4), Fp::from_u64(4)};
    return v;
}

const Fp2& G2Traits::b3() {
    static const Fp2 v = {Fp::from_u64(12), Fp::from_u64(12)};
    return v;
}

const G2& g2_generator() {
    static const G2 gen = [] {
        Fp2 x = {
            fp_from_hex("024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d177"
                        "0bac0326a805bbefd48056c8c121bdb8"),
            fp_from_hex("13e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049"
                        "334cf11213945d57e5ac7d055d042b7e"),
        };
        Fp2 y = {
            fp_from_hex("0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a76d429a695160d12c"
                        "923ac9cc3baca289e193548608b82801"),
            fp_from_hex("0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af267492ab572e99ab"
                        "3f370d275cec1da1aaa9075ff05f79be"),
        };
        G2 g = G2::from_affine(x, y);
        if (!g.on_curve()) throw std::logic_error("G2 generator not on curve");
        return g;
    }();
    return gen;
}

std::array<uint8_t, kG2CompressedSize> g2_compress(const G2& p) {
    std::array<uint8_t, kG2CompressedSize> out{};
    if (p.is_identity()) {
        out[0] = 0x80 | 0x40;
        return out;
    }
    Fp2 ax, ay;
    p.to_affine(ax, ay);
    ax.c1.to_bytes_be(out.data());
    ax.c0.to_bytes_be(out.data() + 48);
    out[0] |= 0x80;
    bool largest = ay.c1.is_lexicographically_largest() ||
                   (ay.c1.is_zero() && ay.c0.is_lexicographically_largest());
    if (largest) out[0] |= 0x20;
    return out;
}

bool g2_decompress(BytesView bytes, G2& out) {
    if (bytes.size() != kG2CompressedSize) return false;
    uint8_t flags = bytes[0];
    if (!(flags & 0x80)) return false;
    bool infinity = flags & 0x40;
    bool sign = flags & 0x20;

    std::array<uint8_t, kG2CompressedSize> data;
    std::copy(bytes.begin(), bytes.end(), data.begin());
    data[0] &= 0x1f;

    if (infinity) {
        if (sign) return false;
        for (uint8_t b : data)
            if (b) return false;
        out = G2::identity();
        return true;
    }

    Fp2 x;
    if (!Fp::from_bytes_be(data.data(), x.c1)) return false;
    if (!Fp::from_bytes_be(data.data() + 48, x.c0)) return false;
    Fp2 rhs = x * x * x + G2Traits::b();
    Fp2 y;
    if (!rhs.sqrt(y)) return false;
    bool largest = y.c1.is_lexicographically_largest() ||
                   (y.c1.is_zero() && y.c0.is_lexicographically_largest());
    if (largest != sign) y = y.neg();
    G2 p = G2::from_affine(x, y);
    if (!p.in_prime_order_subgroup()) return false;
    out = p;
    return true;
}

uint64_t g2_key_additions() { return t_key_additions; }
void g2_reset_key_additions() { t_key_additions = 0; }

G2 g2_counted_add(const G2& a, const G2& b) {
    ++t_key_additions;
    return G2::add(a, b);
}

}  // namespace sigbft::bls
