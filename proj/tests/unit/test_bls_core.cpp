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

#include <doctest.h>

#include <random>

#include "sigbft/crypto/bls/fp12.hpp"
#include "sigbft/crypto/bls/hash_to_g1.hpp"
#include "sigbft/crypto/bls/pairing.hpp"
#include "vectors/bls_kat.hpp"

using namespace sigbft;
using namespace sigbft::bls;

namespace {

Fp fp_from_hex96(const std::string& hex) {
    Bytes raw = from_hex(hex);
    REQUIRE(raw.size() == 48);
    Fp out;
    REQUIRE(Fp::from_bytes_be(raw.data(), out));
    return out;
}

std::string fp_to_hex96(const Fp& x) {
    uint8_t buf[48];
    x.to_bytes_be(buf);
    return to_hex(BytesView(buf, 48));
}

Fp random_fp(std::mt19937_64& rng) {
    Fp::Limbs l{};
    for (auto& w : l) w = rng();
    l[5] &= 0x0fffffffffffffffull;  // keep below p
    return Fp::from_canonical(l);
}

// exponent 3 (p^12 - 1) / r, little-endian limbs. The production chain
// computes the standard third-power variant of the reduced pairing (as do
// the widely deployed implementations, which all interoperate); the generic
// square-and-multiply below is the independent route used to cross-check it.
const uint64_t kFullExponent[] = {
    0x42362d2019e05f30ull, 0x71ec9292b3a3f16eull, 0xcc14f35af381dd9bull, 0xaa8e8db57364b4e0ull,
    0xbbd8542f1f4e813cull, 0x67448d0357e60280ull, 0x37e374d545d9b34bull, 0x0dbe98538990b886ull,
    0x4f37addccc764259ull, 0xb126a5693d0c1648ull, 0xe2fab93c0cbe7336ull, 0x5be26fa7d750500cull,
    0x0fd55b32bc26877full, 0x2789939db85ffd7eull, 0x8a8dbc483bf8b74cull, 0xee57b6df108eff59ull,
    0x44dc2a7f86c253a4ull, 0x1ab9a096b98465d0ull, 0xa19abe6ea2accb45ull, 0xd458de749460d4a2ull,
    0xefda3b46ebf86211ull, 0xbf503bd6ec0a0679ull, 0xee452496f5166c25ull, 0x533883a3513435f3ull,
    0x0c49ebcd2352765full, 0xdd3ed254fdeda030ull, 0xf337b31c79222145ull, 0xdc89d154af91ad54ull,
    0x48986b14d9098746ull, 0xb600e6c98003bf85ull, 0xe543c4bc40bcd4c0ull, 0x1e5f07600ce6b407ull,
    0x5017931d6740bda7ull, 0x99edd44084bd2372ull, 0xb20f28c19e4105abull, 0x56cfa8c3574363efull,
    0x376e521070d29c9dull, 0x24ed5e515911037bull, 0xa9f5aa7994cec31bull, 0xc2f98fcdd0dd36caull,
    0xc2cb543d69430c37ull, 0xd4c1f3ac25e3167eull, 0x6f3496b2dd38e722ull, 0x0c4347bb5a7e405dull,
    0x312d8a7d76233637ull, 0x167ff1323d6e99acull, 0x4dde0523678105d9ull, 0x4e2513d6e4a5d3bbull,
    0x9f28efa0d355b022ull, 0x773528bbae870697ull, 0x7ab1cd294a502304ull, 0x4b9783d9c6aa8129ull,
    0x133bdc3ca9412b98ull, 0x16e296a72928cfeeull, 0xfb77b732ba5f9948ull, 0xa9d6ff3a07dbd34eull,
    0x54207282314fc0deull, 0x5958cb8bfdae2d2dull, 0x15eacb2cf3218a16ull, 0x42009fe1bd6fcbceull,
    0x913caba6579c08fdull, 0x7315a664019fbd84ull, 0x468d8f473094aecbull, 0x5a2b2fe3bea73dfbull,
    0x7dc671be77cf1771ull, 0xdc3e541f9dca04bbull, 0x96587127a538fd40ull, 0x0000000008ca5921ull,
};

}  // namespace

TEST_CASE("fp arithmetic against independently computed values") {
    Fp a = fp_from_hex96(
        "12a6330b5d9dc9f81818e811892f902bd23f0824128b2f330c5c7fd0a6a3a450"
        "6513270e269e0d37f2a74de452e6b438");
    Fp b = fp_from_hex96(
        "11a22dd91738f7d93d9c172411e20b8f6b0d549b6f03675a1600a35a099950d8"
        "36f675cc81e74ef5e8e25d940ed90475");
    CHECK(fp_to_hex96(a * b) ==
          "1229ac982fdabd48aaa2c2cb34f3f790a4b2cc15f848b4f10d53ac08ec21fee3"
          "490e01851d72dc7f8297caf6b800823e");
    CHECK(fp_to_hex96(a.inverse()) ==
          "196a2e3cc249a8bfce4273abf34407477acd8a7903bee5e84d8382613d38f4b5"
          "caad121ae501dcd1840e47af7ac87bee");

    uint8_t wide[64];
    std::fill(wide, wide + 64, 0xab);
    CHECK(fp_to_hex96(Fp::from_bytes_be_wide(wide)) ==
          "03674ea173deb129c7a70bd3cded85d617a1e1c0ff9a28693c43a86a079dbcaf"
          "bdc261f4669f840d87f389f83f3e3ac7");
}

TEST_CASE("fp algebraic properties") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        Fp a = random_fp(rng), b = random_fp(rng), c = random_fp(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK(a + a.neg() == Fp::zero());
        if (!a.is_zero()) CHECK(a * a.inverse() == Fp::one());
        Fp sq = a.square();
        Fp root;
        REQUIRE(sq.sqrt(root));
        CHECK((root == a || root == a.neg()));
    }
}

TEST_CASE("scalar wide reduction") {
    Bytes wide(64, 0xab);
    Scalar s = Scalar::from_bytes_be_reduce(wide);
    CHECK(to_hex(s.to_bytes_be()) ==
          "1ab4edd1c705aa8870efc7090935d0c4661b6d0488168b570eb8878b2e212fac");
}

TEST_CASE("generators on curve and in subgroup") {
    CHECK(g1_generator().on_curve());
    CHECK(g2_generator().on_curve());
    CHECK(g1_generator().in_prime_order_subgroup());
    CHECK(g2_generator().in_prime_order_subgroup());
    CHECK(to_hex(g1_compress(g1_generator())) == kat::kScalarMul[0].g1);
    CHECK(to_hex(g2_compress(g2_generator())) == kat::kScalarMul[0].g2);
}

TEST_CASE("scalar multiplication matches reference vectors") {
    for (const auto& vec : kat::kScalarMul) {
        Bytes kbytes = from_hex(std::string(vec.k).size() % 2 ? "0" + std::string(vec.k)
                                                              : std::string(vec.k));
        Scalar k = Scalar::from_bytes_be_reduce(kbytes);
        CHECK(to_hex(g1_compress(g1_generator().mul(k))) == vec.g1);
        CHECK(to_hex(g2_compress(g2_generator().mul(k))) == vec.g2);
    }
}

TEST_CASE("scalar multiplication agrees with binary double-and-add oracle") {
    // independent route: plain MSB-first double-and-add over the same scalar
    auto naive_mul = [](const G1& p, const Scalar& k) {
        G1 acc = G1::identity();
        for (int i = k.bit_length() - 1; i >= 0; --i) {
            acc = acc.dbl();
            if (k.bit(i)) acc = G1::add(acc, p);
        }
        return acc;
    };
    std::mt19937_64 rng(99);
    for (int i = 0; i < 16; ++i) {
        std::array<uint8_t, 32> buf;
        for (auto& x : buf) x = (uint8_t)rng();
        Scalar k = Scalar::from_bytes_be_reduce(buf);
        G1 a = g1_generator().mul(k);
        G1 b = naive_mul(g1_generator(), k);
        CHECK(a.equals(b));
    }
}

TEST_CASE("compressed encoding roundtrips and validates") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 8; ++i) {
        std::array<uint8_t, 32> buf;
        for (auto& x : buf) x = (uint8_t)rng();
        Scalar k = Scalar::from_bytes_be_reduce(buf);

        G1 p1 = g1_generator().mul(k);
        auto enc1 = g1_compress(p1);
        G1 back1;
        REQUIRE(g1_decompress(BytesView(enc1.data(), enc1.size()), back1));
        CHECK(back1.equals(p1));

        G2 p2 = g2_generator().mul(k);
        auto enc2 = g2_compress(p2);
        G2 back2;
        REQUIRE(g2_decompress(BytesView(enc2.data(), enc2.size()), back2));
        CHECK(back2.equals(p2));
    }

    // identity encodings
    G1 id1;
    REQUIRE(g1_decompress(from_hex(kat::kG1IdentityCompressed), id1));
    CHECK(id1.is_identity());
    G2 id2;
    REQUIRE(g2_decompress(from_hex(kat::kG2IdentityCompressed), id2));
    CHECK(id2.is_identity());

    // invalid: uncompressed flag, garbage bytes
    Bytes bad(48, 0x11);
    G1 out;
    CHECK_FALSE(g1_decompress(bad, out));
}

TEST_CASE("G2 decompression recovers reference affine coordinates") {
    for (const auto& v : kat::kG2Points) {
        G2 p;
        REQUIRE(g2_decompress(from_hex(v.comp), p));
        Fp2 x, y;
        p.to_affine(x, y);
        CHECK(fp_to_hex96(x.c0) == v.xc0);
        CHECK(fp_to_hex96(x.c1) == v.xc1);
        CHECK(fp_to_hex96(y.c0) == v.yc0);
        CHECK(fp_to_hex96(y.c1) == v.yc1);
    }
}

TEST_CASE("pairing of the generators matches the reference implementation") {
    Fp12 e = pairing(g1_generator(), g2_generator());
    const Fp* coords[12] = {
        &e.c0.c0.c0, &e.c0.c0.c1, &e.c0.c1.c0, &e.c0.c1.c1, &e.c0.c2.c0, &e.c0.c2.c1,
        &e.c1.c0.c0, &e.c1.c0.c1, &e.c1.c1.c0, &e.c1.c1.c1, &e.c1.c2.c0, &e.c1.c2.c1,
    };
    for (int i = 0; i < 12; ++i) CHECK(fp_to_hex96(*coords[i]) == kat::kPairingG1G2[i]);
    CHECK_FALSE(e.is_one());  // non-degeneracy
}

TEST_CASE("pairing bilinearity") {
    G1 p3 = g1_generator().mul(Scalar::from_u64(3));
    G2 q5 = g2_generator().mul(Scalar::from_u64(5));
    Fp12 lhs = pairing(p3, q5);

    const Fp* coords[12] = {
        &lhs.c0.c0.c0, &lhs.c0.c0.c1, &lhs.c0.c1.c0, &lhs.c0.c1.c1, &lhs.c0.c2.c0, &lhs.c0.c2.c1,
        &lhs.c1.c0.c0, &lhs.c1.c0.c1, &lhs.c1.c1.c0, &lhs.c1.c1.c1, &lhs.c1.c2.c0, &lhs.c1.c2.c1,
    };
    for (int i = 0; i < 12; ++i) CHECK(fp_to_hex96(*coords[i]) == kat::kPairing3G1_5G2[i]);

    // e(3P, 5Q) == e(P, Q)^15
    uint64_t fifteen[1] = {15};
    Fp12 rhs = pairing(g1_generator(), g2_generator()).pow(fifteen);
    CHECK(lhs == rhs);

    // product identity: e(P, Q) * e(-P, Q) == 1
    CHECK(pairing_product_is_one({{g1_generator(), g2_generator()},
                                  {g1_generator().neg(), g2_generator()}}));
}

TEST_CASE("fast final exponentiation agrees with generic exponentiation") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 3; ++i) {
        // random invertible Fp12
        Fp12 f;
        f.c0 = Fp6{Fp2{random_fp(rng), random_fp(rng)}, Fp2{random_fp(rng), random_fp(rng)},
                   Fp2{random_fp(rng), random_fp(rng)}};
        f.c1 = Fp6{Fp2{random_fp(rng), random_fp(rng)}, Fp2{random_fp(rng), random_fp(rng)},
                   Fp2{random_fp(rng), random_fp(rng)}};
        if (f.is_zero()) continue;
        Fp12 fast = final_exponentiation(f);
        Fp12 slow = f.pow(kFullExponent);
        CHECK(fast == slow);
    }
}

TEST_CASE("expand_message_xmd reference vectors") {
    for (const auto& v : kat::kXmd) {
        Bytes msg = to_bytes(v.msg);
        Bytes dst = to_bytes(v.dst);
        Bytes out = expand_message_xmd(msg, dst, v.len);
        CHECK(to_hex(out) == v.uniform);
    }
}

TEST_CASE("hash_to_g1 reference vectors") {
    for (const auto& v : kat::kHashToG1) {
        G1 p = hash_to_g1(to_bytes(v.msg), to_bytes(v.dst));
        CHECK(to_hex(g1_compress(p)) == v.point);
        CHECK(p.in_prime_order_subgroup());
    }
}
