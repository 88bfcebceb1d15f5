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

#include "sigbft/crypto/bls/pairing.hpp"

namespace sigbft::bls {

namespace {

// |x| for the BLS parameter x = -0xd201000000010000
constexpr uint64_t kBlsX = 0xd201000000010000ull;

// G2 point in Jacobian coordinates for the Miller loop line computations
struct JacobianG2 {
    Fp2 x, y, z;
};

struct LineCoeffs {
    Fp2 c0, c1, c2;  // c0 scales with y_P, c1 with x_P, c2 is constant
};

// Doubling step with line coefficients (Costello-Lange-Naehrig style,
// as in eprint 2010/354 Alg. 26).
LineCoeffs doubling_step(JacobianG2& r) {
    Fp2 tmp0 = r.x.square();
    Fp2 tmp1 = r.y.square();
    Fp2 tmp2 = tmp1.square();
    Fp2 tmp3 = (tmp1 + r.x).square() - tmp0 - tmp2;
    tmp3 = tmp3.dbl();
    Fp2 tmp4 = tmp0.dbl() + tmp0;
    Fp2 tmp6 = r.x + tmp4;
    Fp2 tmp5 = tmp4.square();
    Fp2 zsq = r.z.square();
    r.x = tmp5 - tmp3.dbl();
    r.z = (r.z + r.y).square() - tmp1 - zsq;
    r.y = (tmp3 - r.x) * tmp4 - tmp2.dbl().dbl().dbl();
    tmp3 = (tmp4 * zsq).dbl().neg();
    tmp6 = tmp6.square() - tmp0 - tmp5 - tmp1.dbl().dbl();
    tmp0 = (r.z * zsq).dbl();
    return {tmp0, tmp3, tmp6};
}

// Mixed addition step with line coefficients (eprint 2010/354 Alg. 27).
LineCoeffs addition_step(JacobianG2& r, const Fp2& qx, const Fp2& qy) {
    Fp2 zsq = r.z.square();
    Fp2 ysq = qy.square();
    Fp2 t0 = zsq * qx;
    Fp2 t1 = ((qy + r.z).square() - ysq - zsq) * zsq;
    Fp2 t2 = t0 - r.x;
    Fp2 t3 = t2.square();
    Fp2 t4 = t3.dbl().dbl();
    Fp2 t5 = t4 * t2;
    Fp2 t6 = t1 - r.y.dbl();
    Fp2 t9 = t6 * qx;
    Fp2 t7 = t4 * r.x;
    r.x = t6.square() - t5 - t7.dbl();
    r.z = (r.z + t2).square() - zsq - t3;
    Fp2 t10 = qy + r.z;
    Fp2 t8 = (t7 - r.x) * t6;
    t0 = (r.y * t5).dbl();
    r.y = t8 - t0;
    t10 = t10.square() - ysq - r.z.square();
    t9 = t9.dbl() - t10;
    t10 = r.z.dbl();
    t6 = t6.neg();
    t1 = t6.dbl();
    return {t10, t1, t9};
}

Fp12 eval_line(const Fp12& f, const LineCoeffs& l, const Fp& px, const Fp& py) {
    Fp2 c0 = l.c0.scale(py);
    Fp2 c1 = l.c1.scale(px);
    return f.mul_by_014(l.c2, c1, c0);
}

// Granger-Scott squaring in the cyclotomic subgroup
void fp4_square(const Fp2& a, const Fp2& b, Fp2& c0, Fp2& c1) {
    Fp2 t0 = a.square();
    Fp2 t1 = b.square();
    Fp2 t2 = t1.mul_by_nonresidue();
    c0 = t2 + t0;
    t2 = (a + b).square() - t0 - t1;
    c1 = t2;
}

Fp12 cyclotomic_square(const Fp12& f) {
    Fp2 z0 = f.c0.c0, z4 = f.c0.c1, z3 = f.c0.c2;
    Fp2 z2 = f.c1.c0, z1 = f.c1.c1, z5 = f.c1.c2;
    Fp2 t0, t1, t2, t3;

    fp4_square(z0, z1, t0, t1);
    z0 = t0 - z0;
    z0 = z0.dbl() + t0;
    z1 = t1 + z1;
    z1 = z1.dbl() + t1;

    fp4_square(z2, z3, t0, t1);
    fp4_square(z4, z5, t2, t3);

    z4 = t0 - z4;
    z4 = z4.dbl() + t0;
    z5 = t1 + z5;
    z5 = z5.dbl() + t1;

    t0 = t3.mul_by_nonresidue();
    z2 = t0 + z2;
    z2 = z2.dbl() + t0;
    z3 = t2 - z3;
    z3 = z3.dbl() + t2;

    return {Fp6{z0, z4, z3}, Fp6{z2, z1, z5}};
}

// f^x (x is the negative BLS parameter); input must lie in the cyclotomic
// subgroup so that conjugation inverts
Fp12 cyclotomic_exp_by_x(const Fp12& f) {
    Fp12 acc = Fp12::one();
    bool started = false;
    for (int b = 63; b >= 0; --b) {
        if (started) acc = cyclotomic_square(acc);
        if ((kBlsX >> b) & 1) {
            acc = acc * f;
            started = true;
        }
    }
    return acc.conjugate();
}

}  // namespace

Fp12 miller_loop(const std::vector<std::pair<G1, G2>>& pairs) {
    struct Prepared {
        Fp px, py;
        Fp2 qx, qy;
        JacobianG2 r;
    };
    std::vector<Prepared> work;
    work.reserve(pairs.size());
    for (const auto& [p, q] : pairs) {
        if (p.is_identity() || q.is_identity()) continue;
        Prepared w;
        p.to_affine(w.px, w.py);
        q.to_affine(w.qx, w.qy);
        w.r = {w.qx, w.qy, Fp2::one()};
        work.push_back(w);
    }

    Fp12 f = Fp12::one();
    if (work.empty()) return f;

    for (int i = 62; i >= 0; --i) {
        f = f.square();
        for (auto& w : work) {
            LineCoeffs l = doubling_step(w.r);
            f = eval_line(f, l, w.px, w.py);
        }
        if ((kBlsX >> i) & 1) {
            for (auto& w : work) {
                LineCoeffs l = addition_step(w.r, w.qx, w.qy);
                f = eval_line(f, l, w.px, w.py);
            }
        }
    }
    // x < 0: conjugate the accumulated value
    return f.conjugate();
}

Fp12 final_exponentiation(const Fp12& f) {
    // easy part: f^((p^6 - 1)(p^2 + 1))
    Fp12 t0 = f.conjugate();
    Fp12 t1 = f.inverse();
    Fp12 t2 = t0 * t1;
    t1 = t2;
    t2 = t2.frobenius().frobenius();
    t2 = t2 * t1;

    // hard part, addition chain over powers of x
    t1 = cyclotomic_square(t2).conjugate();
    Fp12 t3 = cyclotomic_exp_by_x(t2);
    Fp12 t4 = cyclotomic_square(t3);
    Fp12 t5 = t1 * t3;
    t1 = cyclotomic_exp_by_x(t5);
    t0 = cyclotomic_exp_by_x(t1);
    Fp12 t6 = cyclotomic_exp_by_x(t0);
    t6 = t6 * t4;
    t4 = cyclotomic_exp_by_x(t6);
    t5 = t5.conjugate();
    t4 = t4 * t5 * t2;
    t5 = t2.conjugate();
    t1 = t1 * t2;
    t1 = t1.frobenius().frobenius().frobenius();
    t6 = t6 * t5;
    t6 = t6.frobenius();
    t3 = t3 * t0;
    t3 = t3.frobenius().frobenius();
    t3 = t3 * t1;
    t3 = t3 * t6;
    return t3 * t4;
}

}  // namespace sigbft::bls
