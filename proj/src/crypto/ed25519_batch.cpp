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

// Batch verification core: curve25519 field/point arithmetic plus an
// interleaved windowed multi-scalar multiplication. The single batched
// equation
//
//     8 [ sum_i z_i R_i + sum_i (z_i h_i) A_i - (sum_i z_i s_i) B ] == O
//
// shares one doubling chain across all points, which is what makes batch
// verification cheaper per item than individual verification.

#include <cstring>

#include <sodium.h>

#include "sigbft/crypto/ed25519.hpp"

namespace sigbft::crypto::ed25519 {

namespace {

// ---- field arithmetic mod 2^255 - 19, radix 2^51 ----

struct Fe {
    uint64_t v[5];
};

constexpr uint64_t kMask51 = (1ull << 51) - 1;

Fe fe_zero() { return {{0, 0, 0, 0, 0}}; }
Fe fe_one() { return {{1, 0, 0, 0, 0}}; }

Fe fe_add(const Fe& a, const Fe& b) {
    Fe r;
    for (int i = 0; i < 5; ++i) r.v[i] = a.v[i] + b.v[i];
    return r;
}

// a - b with a 4p bias so moderately grown (uncarried) subtrahends stay safe
Fe fe_sub(const Fe& a, const Fe& b) {
    Fe r;
    r.v[0] = a.v[0] + 0x1fffffffffffb4ull - b.v[0];
    r.v[1] = a.v[1] + 0x1ffffffffffffcull - b.v[1];
    r.v[2] = a.v[2] + 0x1ffffffffffffcull - b.v[2];
    r.v[3] = a.v[3] + 0x1ffffffffffffcull - b.v[3];
    r.v[4] = a.v[4] + 0x1ffffffffffffcull - b.v[4];
    return r;
}

void fe_carry(Fe& a) {
    uint64_t c;
    for (int i = 0; i < 4; ++i) {
        c = a.v[i] >> 51;
        a.v[i] &= kMask51;
        a.v[i + 1] += c;
    }
    c = a.v[4] >> 51;
    a.v[4] &= kMask51;
    a.v[0] += c * 19;
    c = a.v[0] >> 51;
    a.v[0] &= kMask51;
    a.v[1] += c;
}

Fe fe_mul(const Fe& a, const Fe& b) {
    using u128 = unsigned __int128;
    u128 r0 = (u128)a.v[0] * b.v[0] +
              (u128)19 * ((u128)a.v[1] * b.v[4] + (u128)a.v[2] * b.v[3] + (u128)a.v[3] * b.v[2] +
                          (u128)a.v[4] * b.v[1]);
    u128 r1 = (u128)a.v[0] * b.v[1] + (u128)a.v[1] * b.v[0] +
              (u128)19 * ((u128)a.v[2] * b.v[4] + (u128)a.v[3] * b.v[3] + (u128)a.v[4] * b.v[2]);
    u128 r2 = (u128)a.v[0] * b.v[2] + (u128)a.v[1] * b.v[1] + (u128)a.v[2] * b.v[0] +
              (u128)19 * ((u128)a.v[3] * b.v[4] + (u128)a.v[4] * b.v[3]);
    u128 r3 = (u128)a.v[0] * b.v[3] + (u128)a.v[1] * b.v[2] + (u128)a.v[2] * b.v[1] +
              (u128)a.v[3] * b.v[0] + (u128)19 * ((u128)a.v[4] * b.v[4]);
    u128 r4 = (u128)a.v[0] * b.v[4] + (u128)a.v[1] * b.v[3] + (u128)a.v[2] * b.v[2] +
              (u128)a.v[3] * b.v[1] + (u128)a.v[4] * b.v[0];

    Fe out;
    uint64_t c;
    out.v[0] = (uint64_t)r0 & kMask51;
    c = (uint64_t)(r0 >> 51);
    r1 += c;
    out.v[1] = (uint64_t)r1 & kMask51;
    c = (uint64_t)(r1 >> 51);
    r2 += c;
    out.v[2] = (uint64_t)r2 & kMask51;
    c = (uint64_t)(r2 >> 51);
    r3 += c;
    out.v[3] = (uint64_t)r3 & kMask51;
    c = (uint64_t)(r3 >> 51);
    r4 += c;
    out.v[4] = (uint64_t)r4 & kMask51;
    c = (uint64_t)(r4 >> 51);
    out.v[0] += c * 19;
    c = out.v[0] >> 51;
    out.v[0] &= kMask51;
    out.v[1] += c;
    return out;
}

Fe fe_sq(const Fe& a) { return fe_mul(a, a); }

void fe_tobytes(uint8_t out[32], const Fe& a) {
    Fe t = a;
    fe_carry(t);
    // canonical reduction: add 19, carry, subtract 2^255 - 19 via bit games
    uint64_t q = (t.v[0] + 19) >> 51;
    q = (t.v[1] + q) >> 51;
    q = (t.v[2] + q) >> 51;
    q = (t.v[3] + q) >> 51;
    q = (t.v[4] + q) >> 51;
    t.v[0] += 19 * q;
    uint64_t c = t.v[0] >> 51;
    t.v[0] &= kMask51;
    t.v[1] += c;
    c = t.v[1] >> 51;
    t.v[1] &= kMask51;
    t.v[2] += c;
    c = t.v[2] >> 51;
    t.v[2] &= kMask51;
    t.v[3] += c;
    c = t.v[3] >> 51;
    t.v[3] &= kMask51;
    t.v[4] += c;
    t.v[4] &= kMask51;

    uint64_t w0 = t.v[0] | (t.v[1] << 51);
    uint64_t w1 = (t.v[1] >> 13) | (t.v[2] << 38);
    uint64_t w2 = (t.v[2] >> 26) | (t.v[3] << 25);
    uint64_t w3 = (t.v[3] >> 39) | (t.v[4] << 12);
    std::memcpy(out, &w0, 8);
    std::memcpy(out + 8, &w1, 8);
    std::memcpy(out + 16, &w2, 8);
    std::memcpy(out + 24, &w3, 8);
}

void fe_frombytes(Fe& out, const uint8_t in[32]) {
    uint64_t w0, w1, w2, w3;
    std::memcpy(&w0, in, 8);
    std::memcpy(&w1, in + 8, 8);
    std::memcpy(&w2, in + 16, 8);
    std::memcpy(&w3, in + 24, 8);
    out.v[0] = w0 & kMask51;
    out.v[1] = (w0 >> 51 | w1 << 13) & kMask51;
    out.v[2] = (w1 >> 38 | w2 << 26) & kMask51;
    out.v[3] = (w2 >> 25 | w3 << 39) & kMask51;
    out.v[4] = (w3 >> 12) & kMask51;  // drops the sign bit
}

bool fe_is_zero(const Fe& a) {
    uint8_t b[32];
    fe_tobytes(b, a);
    uint8_t acc = 0;
    for (int i = 0; i < 32; ++i) acc |= b[i];
    return acc == 0;
}

bool fe_eq(const Fe& a, const Fe& b) {
    uint8_t ba[32], bb[32];
    fe_tobytes(ba, a);
    fe_tobytes(bb, b);
    return std::memcmp(ba, bb, 32) == 0;
}

bool fe_is_negative(const Fe& a) {
    uint8_t b[32];
    fe_tobytes(b, a);
    return b[0] & 1;
}

Fe fe_neg(const Fe& a) { return fe_sub(fe_zero(), a); }

// z^(2^250 - 1) building block shared by invert and pow22523
Fe fe_pow_250_1(const Fe& z, Fe& z11_out) {
    Fe z2 = fe_sq(z);
    Fe z8 = fe_sq(fe_sq(z2));
    Fe z9 = fe_mul(z, z8);
    Fe z11 = fe_mul(z2, z9);
    z11_out = z11;
    Fe z22 = fe_sq(z11);
    Fe z_5_0 = fe_mul(z9, z22);
    Fe t = fe_sq(z_5_0);
    for (int i = 0; i < 4; ++i) t = fe_sq(t);
    Fe z_10_0 = fe_mul(t, z_5_0);
    t = fe_sq(z_10_0);
    for (int i = 0; i < 9; ++i) t = fe_sq(t);
    Fe z_20_0 = fe_mul(t, z_10_0);
    t = fe_sq(z_20_0);
    for (int i = 0; i < 19; ++i) t = fe_sq(t);
    Fe z_40_0 = fe_mul(t, z_20_0);
    t = fe_sq(z_40_0);
    for (int i = 0; i < 9; ++i) t = fe_sq(t);
    Fe z_50_0 = fe_mul(t, z_10_0);
    t = fe_sq(z_50_0);
    for (int i = 0; i < 49; ++i) t = fe_sq(t);
    Fe z_100_0 = fe_mul(t, z_50_0);
    t = fe_sq(z_100_0);
    for (int i = 0; i < 99; ++i) t = fe_sq(t);
    Fe z_200_0 = fe_mul(t, z_100_0);
    t = fe_sq(z_200_0);
    for (int i = 0; i < 49; ++i) t = fe_sq(t);
    return fe_mul(t, z_50_0);  // z^(2^250 - 1)
}

Fe fe_invert(const Fe& z) {
    Fe z11;
    Fe z_250_0 = fe_pow_250_1(z, z11);
    Fe t = z_250_0;
    for (int i = 0; i < 5; ++i) t = fe_sq(t);
    return fe_mul(t, z11);  // z^(2^255 - 21) = z^(p - 2)
}

Fe fe_pow22523(const Fe& z) {
    Fe z11;
    Fe z_250_0 = fe_pow_250_1(z, z11);
    Fe t = fe_sq(fe_sq(z_250_0));
    return fe_mul(t, z);  // z^(2^252 - 3)
}

// curve constants, derived at startup rather than transcribed
struct CurveConstants {
    Fe d, d2, sqrtm1;

    CurveConstants() {
        Fe num = fe_neg(Fe{{121665, 0, 0, 0, 0}});
        Fe den = Fe{{121666, 0, 0, 0, 0}};
        d = fe_mul(num, fe_invert(den));
        d2 = fe_add(d, d);
        fe_carry(d2);
        // sqrt(-1) = 2^((p-1)/4); 2 is a non-residue since p ≡ 5 (mod 8)
        Fe two = Fe{{2, 0, 0, 0, 0}};
        // (p-1)/4 = 2^253 - 5: compute 2^(2^253) / 2^5 as pow chain
        // simpler route: sqrtm1 = 2 * (2^((p-5)/8))^2 ... use the identity
        // sqrt(-1) = 2^((p-1)/4) = (2^((p-5)/8))^2 * 2
        Fe t = fe_pow22523(two);  // 2^((p-5)/8)
        sqrtm1 = fe_mul(fe_sq(t), two);
    }
};

const CurveConstants& cc() {
    static const CurveConstants c;
    return c;
}

// ---- point arithmetic, extended coordinates (X:Y:Z:T), x y = T/Z ----

struct GeP3 {
    Fe x, y, z, t;
};

struct GeCached {
    Fe y_plus_x, y_minus_x, z, t2d;
};

GeP3 ge_identity() { return {fe_zero(), fe_one(), fe_one(), fe_zero()}; }

GeCached ge_to_cached(const GeP3& p) {
    GeCached c;
    c.y_plus_x = fe_add(p.y, p.x);
    c.y_minus_x = fe_sub(p.y, p.x);
    c.z = p.z;
    c.t2d = fe_mul(p.t, cc().d2);
    fe_carry(c.y_plus_x);
    return c;
}

GeP3 ge_add(const GeP3& p, const GeCached& q) {
    Fe a = fe_mul(fe_sub(p.y, p.x), q.y_minus_x);
    Fe b = fe_mul(fe_add(p.y, p.x), q.y_plus_x);
    Fe c = fe_mul(q.t2d, p.t);
    Fe zz = fe_mul(p.z, q.z);
    Fe d = fe_add(zz, zz);
    Fe x3 = fe_sub(b, a);
    Fe y3 = fe_add(b, a);
    Fe z3 = fe_add(d, c);
    Fe t3 = fe_sub(d, c);
    fe_carry(x3);
    fe_carry(y3);
    fe_carry(z3);
    fe_carry(t3);
    return {fe_mul(x3, t3), fe_mul(y3, z3), fe_mul(z3, t3), fe_mul(x3, y3)};
}

GeP3 ge_sub(const GeP3& p, const GeCached& q) {
    GeCached negq;
    negq.y_plus_x = q.y_minus_x;
    negq.y_minus_x = q.y_plus_x;
    negq.z = q.z;
    negq.t2d = fe_neg(q.t2d);
    return ge_add(p, negq);
}

GeP3 ge_dbl(const GeP3& p) {
    // dbl-2008-hwcd for a = -1
    Fe a = fe_sq(p.x);
    Fe b = fe_sq(p.y);
    Fe zz = fe_sq(p.z);
    Fe c = fe_add(zz, zz);
    Fe d = fe_neg(a);
    Fe xy = fe_add(p.x, p.y);
    fe_carry(xy);
    Fe e = fe_sub(fe_sq(xy), fe_add(a, b));
    Fe g = fe_add(d, b);
    Fe f = fe_sub(g, c);
    Fe h = fe_sub(d, b);
    fe_carry(e);
    fe_carry(g);
    fe_carry(f);
    fe_carry(h);
    return {fe_mul(e, f), fe_mul(g, h), fe_mul(f, g), fe_mul(e, h)};
}

bool ge_is_identity(const GeP3& p) {
    // identity is (0 : Z : Z : 0)
    return fe_is_zero(p.x) && fe_eq(p.y, p.z);
}

// RFC 8032 point decoding with canonical-encoding checks
bool ge_frombytes(GeP3& out, const uint8_t in[32]) {
    // reject non-canonical y
    uint8_t ycopy[32];
    std::memcpy(ycopy, in, 32);
    ycopy[31] &= 0x7f;
    Fe y;
    fe_frombytes(y, ycopy);
    uint8_t canon[32];
    fe_tobytes(canon, y);
    if (std::memcmp(canon, ycopy, 32) != 0) return false;

    bool sign = in[31] >> 7;
    Fe yy = fe_sq(y);
    Fe u = fe_sub(yy, fe_one());
    Fe v = fe_add(fe_mul(yy, cc().d), fe_one());
    fe_carry(u);
    fe_carry(v);

    Fe v3 = fe_mul(fe_sq(v), v);
    Fe v7 = fe_mul(fe_sq(v3), v);
    Fe x = fe_mul(fe_mul(u, v3), fe_pow22523(fe_mul(u, v7)));

    Fe vxx = fe_mul(v, fe_sq(x));
    if (!fe_eq(vxx, u)) {
        Fe neg_u = fe_neg(u);
        if (!fe_eq(vxx, neg_u)) return false;
        x = fe_mul(x, cc().sqrtm1);
    }
    if (fe_is_zero(x) && sign) return false;
    if (fe_is_negative(x) != sign) x = fe_neg(x);
    fe_carry(x);

    out.x = x;
    out.y = y;
    out.z = fe_one();
    out.t = fe_mul(x, y);
    return true;
}

bool ge_has_small_order(const GeP3& p) {
    GeP3 q = ge_dbl(ge_dbl(ge_dbl(p)));
    return ge_is_identity(q);
}

// base point B
const GeP3& ge_base() {
    static const GeP3 b = [] {
        // y = 4/5, sign(x) = 0
        Fe four = Fe{{4, 0, 0, 0, 0}};
        Fe five = Fe{{5, 0, 0, 0, 0}};
        Fe y = fe_mul(four, fe_invert(five));
        uint8_t enc[32];
        fe_tobytes(enc, y);
        GeP3 p;
        if (!ge_frombytes(p, enc)) std::abort();
        return p;
    }();
    return b;
}

// ---- interleaved windowed MSM (Straus, 4-bit windows) ----

struct MsmEntry {
    GeCached table[15];  // 1P .. 15P
    const uint8_t* scalar;  // 32 bytes little-endian
    int top_window;         // highest window index with a nonzero digit
};

unsigned window_digit(const uint8_t* scalar, int w) {
    // 4-bit window w (0 = least significant)
    uint8_t byte = scalar[w / 2];
    return (w & 1) ? (byte >> 4) : (byte & 0x0f);
}

GeP3 msm(std::vector<MsmEntry>& entries) {
    GeP3 acc = ge_identity();
    int top = 0;
    for (auto& e : entries) {
        e.top_window = 0;
        for (int w = 63; w >= 0; --w) {
            if (window_digit(e.scalar, w)) {
                e.top_window = w;
                break;
            }
        }
        top = std::max(top, e.top_window);
    }
    for (int w = top; w >= 0; --w) {
        if (w != top) {
            acc = ge_dbl(ge_dbl(ge_dbl(ge_dbl(acc))));
        }
        for (const auto& e : entries) {
            if (w > e.top_window) continue;
            unsigned d = window_digit(e.scalar, w);
            if (d) acc = ge_add(acc, e.table[d - 1]);
        }
    }
    return acc;
}

void build_table(MsmEntry& e, const GeP3& p) {
    GeP3 cur = p;
    e.table[0] = ge_to_cached(cur);
    for (int i = 1; i < 15; ++i) {
        cur = ge_add(cur, e.table[0]);
        e.table[i] = ge_to_cached(cur);
    }
}

}  // namespace

std::vector<bool> batch_verify(const std::vector<BatchItem>& items) {
    if (items.empty()) throw std::invalid_argument("batch_verify: empty batch");

    const size_t m = items.size();
    auto fallback = [&] {
        std::vector<bool> out(m);
        for (size_t i = 0; i < m; ++i)
            out[i] = verify(items[i].pk, items[i].sig, items[i].msg);
        return out;
    };

    // decode points; anything the fast path cannot vouch for goes through
    // the per-item fallback so results always match verify()
    std::vector<GeP3> rs(m), as(m);
    std::vector<std::array<uint8_t, 32>> hs(m);
    for (size_t i = 0; i < m; ++i) {
        const auto& it = items[i];
        // s < L check (sodium enforces the same bound): reducing mod L must
        // be the identity on a canonical scalar
        {
            uint8_t wide[64] = {0};
            std::memcpy(wide, it.sig.data() + 32, 32);
            uint8_t reduced[32];
            crypto_core_ed25519_scalar_reduce(reduced, wide);
            if (std::memcmp(reduced, it.sig.data() + 32, 32) != 0) return fallback();
        }
        if (!ge_frombytes(rs[i], it.sig.data())) return fallback();
        if (!ge_frombytes(as[i], it.pk.data())) return fallback();
        if (ge_has_small_order(rs[i]) || ge_has_small_order(as[i])) return fallback();

        // h = SHA512(R || A || M) mod L
        crypto_hash_sha512_state st;
        crypto_hash_sha512_init(&st);
        crypto_hash_sha512_update(&st, it.sig.data(), 32);
        crypto_hash_sha512_update(&st, it.pk.data(), 32);
        crypto_hash_sha512_update(&st, it.msg.data(), it.msg.size());
        uint8_t h64[64];
        crypto_hash_sha512_final(&st, h64);
        crypto_core_ed25519_scalar_reduce(hs[i].data(), h64);
    }

    // deterministic 128-bit blinding scalars derived from the whole batch
    crypto_hash_sha512_state st;
    crypto_hash_sha512_init(&st);
    const char* tag = "sigbft.ed25519.batch.v1";
    crypto_hash_sha512_update(&st, (const uint8_t*)tag, std::strlen(tag));
    for (const auto& it : items) {
        crypto_hash_sha512_update(&st, it.sig.data(), 64);
        crypto_hash_sha512_update(&st, it.pk.data(), 32);
        uint8_t len[8];
        uint64_t n = it.msg.size();
        std::memcpy(len, &n, 8);
        crypto_hash_sha512_update(&st, len, 8);
        crypto_hash_sha512_update(&st, it.msg.data(), it.msg.size());
    }
    uint8_t seed[64];
    crypto_hash_sha512_final(&st, seed);

    std::vector<std::array<uint8_t, 32>> zs(m), zhs(m);
    std::array<uint8_t, 32> s_total{};
    for (size_t i = 0; i < m; ++i) {
        crypto_hash_sha512_state zst;
        crypto_hash_sha512_init(&zst);
        crypto_hash_sha512_update(&zst, seed, 64);
        uint8_t idx[8];
        uint64_t ii = i;
        std::memcpy(idx, &ii, 8);
        crypto_hash_sha512_update(&zst, idx, 8);
        uint8_t z64[64];
        crypto_hash_sha512_final(&zst, z64);
        zs[i].fill(0);
        std::memcpy(zs[i].data(), z64, 16);  // 128-bit blinder

        // zh = z * h mod L, accumulated s_total += z * s mod L
        crypto_core_ed25519_scalar_mul(zhs[i].data(), zs[i].data(), hs[i].data());
        std::array<uint8_t, 32> zsig;
        crypto_core_ed25519_scalar_mul(zsig.data(), zs[i].data(), items[i].sig.data() + 32);
        crypto_core_ed25519_scalar_add(s_total.data(), s_total.data(), zsig.data());
    }

    // MSM over {R_i} with z_i, {A_i} with z_i h_i, and -B with sum z_i s_i
    std::vector<MsmEntry> entries(2 * m + 1);
    for (size_t i = 0; i < m; ++i) {
        build_table(entries[i], rs[i]);
        entries[i].scalar = zs[i].data();
        build_table(entries[m + i], as[i]);
        entries[m + i].scalar = zhs[i].data();
    }
    GeP3 neg_b = ge_sub(ge_identity(), ge_to_cached(ge_base()));
    build_table(entries[2 * m], neg_b);
    entries[2 * m].scalar = s_total.data();

    GeP3 sum = msm(entries);
    sum = ge_dbl(ge_dbl(ge_dbl(sum)));  // clear the cofactor
    if (ge_is_identity(sum)) return std::vector<bool>(m, true);
    return fallback();
}

}  // namespace sigbft::crypto::ed25519
