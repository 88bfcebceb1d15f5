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

#include <array>
#include <cstdint>

#include "sigbft/bytes.hpp"

namespace sigbft::bls {

namespace fp_detail {

using Limbs = std::array<uint64_t, 6>;

// p = 0x1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf
//     6730d2a0f6b0f6241eabfffeb153ffffb9feffffffffaaab
inline constexpr Limbs kModulus = {
    0xb9feffffffffaaabull, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull,
    0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull,
};

constexpr bool geq(const Limbs& a, const Limbs& b) {
    for (int i = 5; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return true;
}

constexpr Limbs raw_sub(const Limbs& a, const Limbs& b) {
    Limbs r{};
    uint64_t borrow = 0;
    for (int i = 0; i < 6; ++i) {
        unsigned __int128 d = (unsigned __int128)a[i] - b[i] - borrow;
        r[i] = (uint64_t)d;
        borrow = (uint64_t)(d >> 64) ? 1 : 0;
    }
    return r;
}

constexpr Limbs raw_double_mod(const Limbs& a) {
    Limbs r{};
    uint64_t carry = 0;
    for (int i = 0; i < 6; ++i) {
        uint64_t hi = a[i] >> 63;
        r[i] = (a[i] << 1) | carry;
        carry = hi;
    }
    if (carry || geq(r, kModulus)) r = raw_sub(r, kModulus);
    return r;
}

constexpr Limbs pow2_mod(int bits) {
    Limbs r{1, 0, 0, 0, 0, 0};
    for (int i = 0; i < bits; ++i) r = raw_double_mod(r);
    return r;
}

constexpr uint64_t inv64() {
    // -p^{-1} mod 2^64, Newton iteration
    uint64_t inv = 1;
    for (int i = 0; i < 63; ++i) inv *= 2 - kModulus[0] * inv;
    return ~inv + 1;
}

constexpr Limbs half() {
    // (p - 1) / 2
    Limbs h = kModulus;
    h[0] -= 1;
    for (int i = 0; i < 6; ++i) {
        uint64_t next = (i + 1 < 6) ? h[i + 1] : 0;
        h[i] = (h[i] >> 1) | (next << 63);
    }
    return h;
}

}  // namespace fp_detail

// Base field of BLS12-381, elements kept in Montgomery form (R = 2^384).
// Limbs are little-endian 64-bit words; values are always fully reduced.
struct Fp {
    static constexpr int kLimbs = 6;
    using Limbs = fp_detail::Limbs;

    static constexpr Limbs kModulus = fp_detail::kModulus;
    static constexpr Limbs kR = fp_detail::pow2_mod(384);       // 2^384 mod p (= one)
    static constexpr Limbs kR2 = fp_detail::pow2_mod(768);      // 2^768 mod p
    static constexpr Limbs kTwo256 = fp_detail::pow2_mod(256);  // 2^256 mod p
    static constexpr Limbs kHalf = fp_detail::half();           // (p-1)/2
    static constexpr uint64_t kInv = fp_detail::inv64();

    Limbs limb;

    static constexpr bool geq(const Limbs& a, const Limbs& b) { return fp_detail::geq(a, b); }
    static constexpr Limbs raw_sub(const Limbs& a, const Limbs& b) {
        return fp_detail::raw_sub(a, b);
    }

    // ---- core arithmetic ----

    static constexpr Fp zero() { return Fp{{0, 0, 0, 0, 0, 0}}; }
    static constexpr Fp one() { return Fp{kR}; }

    constexpr bool is_zero() const {
        return (limb[0] | limb[1] | limb[2] | limb[3] | limb[4] | limb[5]) == 0;
    }

    constexpr bool operator==(const Fp& o) const { return limb == o.limb; }

    static constexpr Fp add(const Fp& a, const Fp& b) {
        Limbs r{};
        uint64_t carry = 0;
        for (int i = 0; i < kLimbs; ++i) {
            unsigned __int128 s = (unsigned __int128)a.limb[i] + b.limb[i] + carry;
            r[i] = (uint64_t)s;
            carry = (uint64_t)(s >> 64);
        }
        if (carry || geq(r, kModulus)) r = raw_sub(r, kModulus);
        return Fp{r};
    }

    static constexpr Fp sub(const Fp& a, const Fp& b) {
        Limbs r{};
        uint64_t borrow = 0;
        for (int i = 0; i < kLimbs; ++i) {
            unsigned __int128 d = (unsigned __int128)a.limb[i] - b.limb[i] - borrow;
            r[i] = (uint64_t)d;
            borrow = (uint64_t)(d >> 64) ? 1 : 0;
        }
        if (borrow) {
            uint64_t carry = 0;
            for (int i = 0; i < kLimbs; ++i) {
                unsigned __int128 s = (unsigned __int128)r[i] + kModulus[i] + carry;
                r[i] = (uint64_t)s;
                carry = (uint64_t)(s >> 64);
            }
        }
        return Fp{r};
    }

    constexpr Fp neg() const {
        if (is_zero()) return *this;
        return Fp{raw_sub(kModulus, limb)};
    }

    // Montgomery multiplication (CIOS)
    static constexpr Fp mul(const Fp& a, const Fp& b) {
        uint64_t t[kLimbs + 1] = {};
        for (int i = 0; i < kLimbs; ++i) {
            uint64_t carry = 0;
            for (int j = 0; j < kLimbs; ++j) {
                unsigned __int128 acc = (unsigned __int128)a.limb[i] * b.limb[j] + t[j] + carry;
                t[j] = (uint64_t)acc;
                carry = (uint64_t)(acc >> 64);
            }
            uint64_t t_extra = carry;

            uint64_t m = t[0] * kInv;
            unsigned __int128 acc = (unsigned __int128)m * kModulus[0] + t[0];
            carry = (uint64_t)(acc >> 64);
            for (int j = 1; j < kLimbs; ++j) {
                acc = (unsigned __int128)m * kModulus[j] + t[j] + carry;
                t[j - 1] = (uint64_t)acc;
                carry = (uint64_t)(acc >> 64);
            }
            acc = (unsigned __int128)t_extra + carry;
            t[kLimbs - 1] = (uint64_t)acc;
            t[kLimbs] = (uint64_t)(acc >> 64);
        }
        Limbs r{t[0], t[1], t[2], t[3], t[4], t[5]};
        if (t[kLimbs] || geq(r, kModulus)) r = raw_sub(r, kModulus);
        return Fp{r};
    }

    constexpr Fp square() const { return mul(*this, *this); }
    constexpr Fp dbl() const { return add(*this, *this); }

    Fp operator+(const Fp& o) const { return add(*this, o); }
    Fp operator-(const Fp& o) const { return sub(*this, o); }
    Fp operator*(const Fp& o) const { return mul(*this, o); }
    Fp operator-() const { return neg(); }

    // exponent given as canonical little-endian limbs, arbitrary length
    Fp pow(std::span<const uint64_t> exp) const {
        Fp result = one();
        bool started = false;
        for (int i = (int)exp.size() - 1; i >= 0; --i) {
            for (int b = 63; b >= 0; --b) {
                if (started) result = result.square();
                if ((exp[i] >> b) & 1) {
                    result = mul(result, *this);
                    started = true;
                }
            }
        }
        return result;
    }

    Fp inverse() const {
        Limbs e = kModulus;
        e[0] -= 2;  // p - 2; p is odd, no borrow
        return pow(std::span<const uint64_t>(e.data(), e.size()));
    }

    // sqrt via a^((p+1)/4), valid since p ≡ 3 (mod 4); returns false for
    // non-residues (checked by squaring back)
    bool sqrt(Fp& out) const {
        Limbs e{};  // (p+1)/4
        uint64_t carry = 1;
        for (int i = 0; i < kLimbs; ++i) {
            unsigned __int128 s = (unsigned __int128)kModulus[i] + (i == 0 ? carry : 0);
            e[i] = (uint64_t)s;
            if (i == 0) carry = (uint64_t)(s >> 64);
        }
        for (int i = 0; i < kLimbs; ++i) {
            uint64_t next = (i + 1 < kLimbs) ? e[i + 1] : 0;
            e[i] = (e[i] >> 2) | (next << 62);
        }
        Fp cand = pow(std::span<const uint64_t>(e.data(), e.size()));
        if (cand.square() == *this) {
            out = cand;
            return true;
        }
        return false;
    }

    // canonical (non-Montgomery) conversions
    static constexpr Fp from_canonical(const Limbs& c) { return mul(Fp{c}, Fp{kR2}); }

    constexpr Limbs to_canonical() const {
        Fp r = mul(*this, Fp{{1, 0, 0, 0, 0, 0}});
        return r.limb;
    }

    static Fp from_u64(uint64_t v) { return from_canonical({v, 0, 0, 0, 0, 0}); }

    // true if the canonical value is odd (RFC 9380 sgn0 for m = 1)
    bool sgn0() const { return to_canonical()[0] & 1; }

    // lexicographic "largest" flag used by point compression:
    // true iff canonical value > (p - 1) / 2
    bool is_lexicographically_largest() const {
        Limbs c = to_canonical();
        return geq(c, kHalf) && c != kHalf;
    }

    // 48-byte big-endian serialization of the canonical value
    void to_bytes_be(uint8_t out[48]) const {
        Limbs c = to_canonical();
        for (int i = 0; i < kLimbs; ++i) {
            uint64_t w = c[kLimbs - 1 - i];
            for (int b = 0; b < 8; ++b) out[i * 8 + b] = (uint8_t)(w >> (56 - 8 * b));
        }
    }

    // returns false if the encoding is not a reduced field element
    static bool from_bytes_be(const uint8_t in[48], Fp& out) {
        Limbs c{};
        for (int i = 0; i < kLimbs; ++i) {
            uint64_t w = 0;
            for (int b = 0; b < 8; ++b) w = w << 8 | in[i * 8 + b];
            c[kLimbs - 1 - i] = w;
        }
        if (geq(c, kModulus)) return false;
        out = from_canonical(c);
        return true;
    }

    // reduce a 512-bit big-endian byte string mod p (hash-to-field)
    static Fp from_bytes_be_wide(const uint8_t in[64]);
};

static_assert(Fp::kInv * Fp::kModulus[0] == ~0ull, "montgomery inverse sanity");

}  // namespace sigbft::bls
