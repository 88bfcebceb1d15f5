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

#include "sigbft/crypto/bls/fp2.hpp"

namespace sigbft::bls {

// Fp6 = Fp2[v] / (v^3 - xi) with xi = 1 + u
struct Fp6 {
    Fp2 c0, c1, c2;

    static Fp6 zero() { return {Fp2::zero(), Fp2::zero(), Fp2::zero()}; }
    static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
    bool operator==(const Fp6& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }

    static Fp6 add(const Fp6& a, const Fp6& b) {
        return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
    }
    static Fp6 sub(const Fp6& a, const Fp6& b) {
        return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
    }
    Fp6 neg() const { return {c0.neg(), c1.neg(), c2.neg()}; }

    static Fp6 mul(const Fp6& a, const Fp6& b) {
        Fp2 aa = a.c0 * b.c0;
        Fp2 bb = a.c1 * b.c1;
        Fp2 cc = a.c2 * b.c2;

        Fp2 t1 = (a.c1 + a.c2) * (b.c1 + b.c2) - bb - cc;
        Fp2 t2 = (a.c0 + a.c1) * (b.c0 + b.c1) - aa - bb;
        Fp2 t3 = (a.c0 + a.c2) * (b.c0 + b.c2) - aa - cc;

        return {aa + t1.mul_by_nonresidue(), t2 + cc.mul_by_nonresidue(), t3 + bb};
    }

    Fp6 square() const { return mul(*this, *this); }

    // multiply by v: (c0 + c1 v + c2 v^2) v = xi c2 + c0 v + c1 v^2
    Fp6 mul_by_v() const { return {c2.mul_by_nonresidue(), c0, c1}; }

    // sparse multiplications used by pairing line evaluation
    Fp6 mul_by_01(const Fp2& b0, const Fp2& b1) const {
        Fp2 aa = c0 * b0;
        Fp2 bb = c1 * b1;
        Fp2 t1 = ((c1 + c2) * b1 - bb).mul_by_nonresidue() + aa;
        Fp2 t2 = (b0 + b1) * (c0 + c1) - aa - bb;
        Fp2 t3 = (c0 + c2) * b0 - aa + bb;
        return {t1, t2, t3};
    }

    Fp6 mul_by_1(const Fp2& b1) const {
        // (c0 + c1 v + c2 v^2)(b1 v) = xi c2 b1 + c0 b1 v + c1 b1 v^2
        return {(c2 * b1).mul_by_nonresidue(), c0 * b1, c1 * b1};
    }

    Fp6 inverse() const {
        Fp2 t0 = c0.square() - (c1 * c2).mul_by_nonresidue();
        Fp2 t1 = c2.square().mul_by_nonresidue() - c0 * c1;
        Fp2 t2 = c1.square() - c0 * c2;
        Fp2 norm = c0 * t0 + (c2 * t1).mul_by_nonresidue() + (c1 * t2).mul_by_nonresidue();
        Fp2 inv = norm.inverse();
        return {t0 * inv, t1 * inv, t2 * inv};
    }

    Fp6 operator+(const Fp6& o) const { return add(*this, o); }
    Fp6 operator-(const Fp6& o) const { return sub(*this, o); }
    Fp6 operator*(const Fp6& o) const { return mul(*this, o); }
};

}  // namespace sigbft::bls
