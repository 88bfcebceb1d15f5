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

#include "sigbft/crypto/bls/fp6.hpp"

namespace sigbft::bls {

// Fp12 = Fp6[w] / (w^2 - v)
struct Fp12 {
    Fp6 c0, c1;

    static Fp12 zero() { return {Fp6::zero(), Fp6::zero()}; }
    static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool is_one() const { return *this == one(); }
    bool operator==(const Fp12& o) const { return c0 == o.c0 && c1 == o.c1; }

    static Fp12 add(const Fp12& a, const Fp12& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
    static Fp12 sub(const Fp12& a, const Fp12& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }

    static Fp12 mul(const Fp12& a, const Fp12& b) {
        Fp6 aa = a.c0 * b.c0;
        Fp6 bb = a.c1 * b.c1;
        Fp6 t = (a.c0 + a.c1) * (b.c0 + b.c1);
        return {aa + bb.mul_by_v(), t - aa - bb};
    }

    Fp12 square() const {
        // complex squaring: c0' = (c0 + c1)(c0 + v c1) - ab - v ab, c1' = 2ab
        Fp6 ab = c0 * c1;
        Fp6 t = (c0 + c1) * (c0 + c1.mul_by_v());
        return {t - ab - ab.mul_by_v(), ab + ab};
    }

    // conjugation over Fp6 (the p^6 Frobenius); inverts elements of the
    // cyclotomic subgroup
    Fp12 conjugate() const { return {c0, c1.neg()}; }

    Fp12 inverse() const {
        Fp6 t = (c0.square() - c1.square().mul_by_v()).inverse();
        return {c0 * t, (c1 * t).neg()};
    }

    // sparse multiplication by l0 + l1 v + l4 v w (pairing line shape)
    Fp12 mul_by_014(const Fp2& l0, const Fp2& l1, const Fp2& l4) const {
        Fp6 aa = c0.mul_by_01(l0, l1);
        Fp6 bb = c1.mul_by_1(l4);
        Fp2 o = l1 + l4;
        Fp6 t1 = (c1 + c0).mul_by_01(l0, o) - aa - bb;
        Fp6 t0 = bb.mul_by_v() + aa;
        return {t0, t1};
    }

    Fp12 frobenius() const;  // x -> x^p

    Fp12 operator+(const Fp12& o) const { return add(*this, o); }
    Fp12 operator-(const Fp12& o) const { return sub(*this, o); }
    Fp12 operator*(const Fp12& o) const { return mul(*this, o); }

    Fp12 pow(std::span<const uint64_t> exp) const {
        Fp12 result = one();
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
};

}  // namespace sigbft::bls
