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

#include "sigbft/crypto/bls/hash_to_g1.hpp"

#include <stdexcept>

#include "sigbft/crypto/sha.hpp"

namespace sigbft::bls {

namespace {

#include "g1_isogeny.inc"

// SSWU target curve E': y^2 = x^3 + A'x + B' (RFC 9380 8.8.1), 11-isogenous
// to the BLS12-381 G1 curve.
struct SswuConstants {
    Fp a, b, z;
    Fp xnum[12], xden[11], ynum[16], yden[16];

    SswuConstants() {
        auto fp = [](const uint64_t limbs[6]) {
            return Fp::from_canonical({limbs[0], limbs[1], limbs[2], limbs[3], limbs[4], limbs[5]});
        };
        // A' and B' from the suite definition
        Bytes ab = from_hex(
            "00144698a3b8e9433d693a02c96d4982b0ea985383ee66a8d8e8981aefd881ac"
            "98936f8da0e0f97f5cf428082d584c1d");
        Bytes bb = from_hex(
            "12e2908d11688030018b12e8753eee3b2016c1f0f24f4070a0b9c14fcef35ef5"
            "5a23215a316ceaa5d1cc48e98e172be0");
        if (!Fp::from_bytes_be(ab.data(), a) || !Fp::from_bytes_be(bb.data(), b))
            throw std::logic_error("bad SSWU constants");
        z = Fp::from_u64(11);
        for (int i = 0; i < 12; ++i) xnum[i] = fp(kIsoXNum[i]);
        for (int i = 0; i < 11; ++i) xden[i] = fp(kIsoXDen[i]);
        for (int i = 0; i < 16; ++i) ynum[i] = fp(kIsoYNum[i]);
        for (int i = 0; i < 16; ++i) yden[i] = fp(kIsoYDen[i]);
    }
};

const SswuConstants& sswu() {
    static const SswuConstants c;
    return c;
}

Fp horner(const Fp* coeffs, int n, const Fp& x) {
    Fp acc = coeffs[n - 1];
    for (int i = n - 2; i >= 0; --i) acc = acc * x + coeffs[i];
    return acc;
}

// simplified SWU map onto E', then the 11-isogeny onto the G1 curve
G1 map_to_curve(const Fp& u) {
    const auto& c = sswu();

    // RFC 9380 F.2 straight-line SSWU
    Fp u2 = u.square();
    Fp tv1 = c.z * u2;           // Z u^2
    Fp tv2 = tv1.square() + tv1; // Z^2 u^4 + Z u^2
    Fp x1;
    if (tv2.is_zero()) {
        x1 = c.b * (c.z * c.a).inverse();  // B / (Z A)
    } else {
        x1 = (tv2 + Fp::one()) * c.b * (c.a * tv2).inverse().neg();
        // x1 = (-B/A)(1 + 1/tv2) = -B(tv2+1) / (A tv2)
    }
    Fp gx1 = (x1.square() + c.a) * x1 + c.b;
    Fp x, y;
    Fp y1;
    if (gx1.sqrt(y1)) {
        x = x1;
        y = y1;
    } else {
        Fp x2 = tv1 * x1;  // Z u^2 x1
        Fp gx2 = (x2.square() + c.a) * x2 + c.b;
        Fp y2;
        if (!gx2.sqrt(y2)) throw std::logic_error("SSWU: gx2 must be square");
        x = x2;
        y = y2;
    }
    if (u.sgn0() != y.sgn0()) y = y.neg();

    // 11-isogeny evaluated with Horner polynomials
    Fp xn = horner(c.xnum, 12, x);
    Fp xd = horner(c.xden, 11, x);
    Fp yn = horner(c.ynum, 16, x);
    Fp yd = horner(c.yden, 16, x);
    Fp xd_inv = xd.inverse();
    Fp out_x = xn * xd_inv;
    Fp out_y = y * yn * yd.inverse();
    return G1::from_affine(out_x, out_y);
}

}  // namespace

Bytes expand_message_xmd(BytesView msg, BytesView dst, size_t len) {
    if (dst.size() > 255) throw std::invalid_argument("DST too long");
    if (len > 255 * 32) throw std::invalid_argument("expand_message_xmd: output too long");
    const size_t ell = (len + 31) / 32;

    crypto::Sha256 h0;
    std::array<uint8_t, 64> z_pad{};
    h0.update(BytesView(z_pad.data(), z_pad.size()));
    h0.update(msg);
    h0.update((uint8_t)(len >> 8));
    h0.update((uint8_t)(len & 0xff));
    h0.update((uint8_t)0);
    h0.update(dst);
    h0.update((uint8_t)dst.size());
    crypto::Digest32 b0 = h0.finish();

    Bytes out;
    out.reserve(ell * 32);
    crypto::Digest32 bi{};
    for (size_t i = 1; i <= ell; ++i) {
        crypto::Sha256 h;
        if (i == 1) {
            h.update(BytesView(b0.data(), b0.size()));
        } else {
            std::array<uint8_t, 32> x;
            for (int j = 0; j < 32; ++j) x[j] = b0[j] ^ bi[j];
            h.update(BytesView(x.data(), x.size()));
        }
        h.update((uint8_t)i);
        h.update(dst);
        h.update((uint8_t)dst.size());
        bi = h.finish();
        out.insert(out.end(), bi.begin(), bi.end());
    }
    out.resize(len);
    return out;
}

G1 hash_to_g1(BytesView msg, BytesView dst) {
    Bytes uniform = expand_message_xmd(msg, dst, 128);
    Fp u0 = Fp::from_bytes_be_wide(uniform.data());
    Fp u1 = Fp::from_bytes_be_wide(uniform.data() + 64);
    G1 q = G1::add(map_to_curve(u0), map_to_curve(u1));
    // clear the cofactor via the effective cofactor 1 - x
    return q.mul_u64(0xd201000000010001ull);
}

}  // namespace sigbft::bls
