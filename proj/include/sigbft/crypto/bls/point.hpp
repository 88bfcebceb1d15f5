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

#include "sigbft/crypto/bls/scalar.hpp"

namespace sigbft::bls {

// Short Weierstrass points y^2 = x^3 + b in homogeneous projective
// coordinates, using the complete addition formulas of Renes, Costello and
// Batina for a = 0 curves. Complete formulas have no identity/doubling edge
// cases, which keeps the group law uniform across all call sites.
template <typename F, typename Traits>
struct Projective {
    F x, y, z;

    static Projective identity() { return {F::zero(), F::one(), F::zero()}; }

    bool is_identity() const { return z.is_zero(); }

    bool equals(const Projective& o) const {
        // (x1 z2 == x2 z1) && (y1 z2 == y2 z1), with identity handled by z = 0
        if (is_identity() || o.is_identity()) return is_identity() == o.is_identity();
        return (x * o.z == o.x * z) && (y * o.z == o.y * z);
    }

    Projective neg() const { return {x, y.neg(), z}; }

    static Projective add(const Projective& p, const Projective& q) {
        const F b3 = Traits::b3();
        F t0 = p.x * q.x;
        F t1 = p.y * q.y;
        F t2 = p.z * q.z;
        F t3 = (p.x + p.y) * (q.x + q.y) - t0 - t1;
        F t4 = (p.y + p.z) * (q.y + q.z) - t1 - t2;
        F x3 = (p.x + p.z) * (q.x + q.z);
        F y3 = t0 + t2;
        y3 = x3 - y3;
        x3 = t0 + t0;
        t0 = x3 + t0;
        t2 = b3 * t2;
        F z3 = t1 + t2;
        t1 = t1 - t2;
        y3 = b3 * y3;
        x3 = t4 * y3;
        t2 = t3 * t1;
        x3 = t2 - x3;
        y3 = y3 * t0;
        t1 = t1 * z3;
        y3 = t1 + y3;
        t0 = t0 * t3;
        z3 = z3 * t4;
        z3 = z3 + t0;
        return {x3, y3, z3};
    }

    Projective dbl() const {
        const F b3 = Traits::b3();
        F t0 = y * y;
        F z3 = t0 + t0;
        z3 = z3 + z3;
        z3 = z3 + z3;
        F t1 = y * z;
        F t2 = z * z;
        t2 = b3 * t2;
        F x3 = t2 * z3;
        F y3 = t0 + t2;
        z3 = t1 * z3;
        t1 = t2 + t2;
        t2 = t1 + t2;
        t0 = t0 - t2;
        y3 = t0 * y3;
        y3 = x3 + y3;
        t1 = x * y;
        x3 = t0 * t1;
        x3 = x3 + x3;
        return {x3, y3, z3};
    }

    Projective operator+(const Projective& o) const { return add(*this, o); }
    Projective operator-(const Projective& o) const { return add(*this, o.neg()); }

    // variable-time 4-bit windowed scalar multiplication
    Projective mul(const Scalar& k) const {
        if (k.is_zero() || is_identity()) return identity();
        Projective table[16];
        table[0] = identity();
        table[1] = *this;
        for (int i = 2; i < 16; ++i) table[i] = add(table[i - 1], *this);
        Projective acc = identity();
        int bits = k.bit_length();
        int top_window = (bits + 3) / 4 - 1;
        for (int w = top_window; w >= 0; --w) {
            if (w != top_window) {
                acc = acc.dbl().dbl().dbl().dbl();
            }
            unsigned digit = 0;
            for (int b = 3; b >= 0; --b) {
                int bit_index = w * 4 + b;
                digit = digit << 1 | (bit_index < bits && k.bit(bit_index) ? 1u : 0u);
            }
            if (digit) acc = add(acc, table[digit]);
        }
        return acc;
    }

    Projective mul_u64(uint64_t k) const { return mul(Scalar::from_u64(k)); }

    bool in_prime_order_subgroup() const {
        return mul(Scalar{{Scalar::kOrder[0], Scalar::kOrder[1], Scalar::kOrder[2],
                           Scalar::kOrder[3]}})
            .is_identity();
    }

    // affine coordinates; caller must exclude the identity
    void to_affine(F& ax, F& ay) const {
        F zinv = z.inverse();
        ax = x * zinv;
        ay = y * zinv;
    }

    static Projective from_affine(const F& ax, const F& ay) { return {ax, ay, F::one()}; }

    // curve membership of the underlying (possibly projective) point
    bool on_curve() const {
        if (is_identity()) return true;
        // y^2 z = x^3 + b z^3
        F lhs = y * y * z;
        F rhs = x * x * x + Traits::b() * z * z * z;
        return lhs == rhs;
    }
};

}  // namespace sigbft::bls
