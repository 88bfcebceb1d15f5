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

namespace sigbft::bls {

// Fp2 = Fp[u] / (u^2 + 1)
struct Fp2 {
    Fp c0, c1;

    static constexpr Fp2 zero() { return {Fp::zero(), Fp::zero()}; }
    static constexpr Fp2 one() { return {Fp::one(), Fp::zero()}; }

    constexpr bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    constexpr bool operator==(const Fp2& o) const { return c0 == o.c0 && c1 == o.c1; }

    static Fp2 add(const Fp2& a, const Fp2& b) { return {Fp::add(a.c0, b.c0), Fp::add(a.c1, b.c1)}; }
    static Fp2 sub(const Fp2& a, const Fp2& b) { return {Fp::sub(a.c0, b.c0), Fp::sub(a.c1, b.c1)}; }

    Fp2 neg() const { return {c0.neg(), c1.neg()}; }
    Fp2 conjugate() const { return {c0, c1.neg()}; }

    static Fp2 mul(const Fp2& a, const Fp2& b) {
        // Karatsuba: (a0 + a1 u)(b0 + b1 u) = (a0 b0 - a1 b1) + ((a0+a1)(b0+b1) - a0 b0 - a1 b1) u
        Fp v0 = Fp::mul(a.c0, b.c0);
        Fp v1 = Fp::mul(a.c1, b.c1);
        Fp s = Fp::mul(Fp::add(a.c0, a.c1), Fp::add(b.c0, b.c1));
        return {Fp::sub(v0, v1), Fp::sub(Fp::sub(s, v0), v1)};
    }

    Fp2 square() const {
        // (a + bu)^2 = (a+b)(a-b) + 2ab u
        Fp t0 = Fp::add(c0, c1);
        Fp t1 = Fp::sub(c0, c1);
        Fp t2 = Fp::add(c0, c0);
        return {Fp::mul(t0, t1), Fp::mul(t2, c1)};
    }

    Fp2 scale(const Fp& k) const { return {Fp::mul(c0, k), Fp::mul(c1, k)}; }

    // multiply by the Fp6 non-residue xi = 1 + u
    Fp2 mul_by_nonresidue() const { return {Fp::sub(c0, c1), Fp::add(c0, c1)}; }

    Fp2 dbl() const { return add(*this, *this); }

    Fp2 inverse() const {
        // 1/(a + bu) = (a - bu) / (a^2 + b^2)
        Fp norm = Fp::add(c0.square(), c1.square());
        Fp inv = norm.inverse();
        return {Fp::mul(c0, inv), Fp::mul(c1, inv).neg()};
    }

    Fp2 operator+(const Fp2& o) const { return add(*this, o); }
    Fp2 operator-(const Fp2& o) const { return sub(*this, o); }
    Fp2 operator*(const Fp2& o) const { return mul(*this, o); }
    Fp2 operator-() const { return neg(); }

    Fp2 pow(std::span<const uint64_t> exp) const {
        Fp2 result = one();
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

    // Frobenius: x -> x^p, which is conjugation in Fp2
    Fp2 frobenius() const { return conjugate(); }

    // sqrt for p ≡ 3 (mod 4); returns false when no square root exists.
    bool sqrt(Fp2& out) const;

    // sgn0 per RFC 9380 for m = 2: sign of c0, tie broken by c1
    bool sgn0() const {
        bool s0 = c0.sgn0();
        bool z0 = c0.is_zero();
        bool s1 = c1.sgn0();
        return s0 || (z0 && s1);
    }
};

}  // namespace sigbft::bls
