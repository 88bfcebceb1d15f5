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

#include "sigbft/crypto/scheme.hpp"

#include <stdexcept>

#include "sigbft/crypto/bls/hash_to_g1.hpp"
#include "sigbft/crypto/bls/pairing.hpp"
#include "sigbft/crypto/sha.hpp"

namespace sigbft::crypto {

namespace {

constexpr std::string_view kSigDst = "BLS_SIG_BLS12381G1_XMD:SHA-256_SSWU_RO_POP_";
constexpr std::string_view kPopDst = "BLS_POP_BLS12381G1_XMD:SHA-256_SSWU_RO_POP_";
constexpr std::string_view kEdPopPrefix = "sigbft.ed25519.pop.v1";

BytesView sv_bytes(std::string_view s) {
    return BytesView(reinterpret_cast<const uint8_t*>(s.data()), s.size());
}

Bytes pop_message(const PublicKey& pk) {
    Bytes msg = to_bytes(kEdPopPrefix);
    Bytes enc = pk.to_bytes();
    msg.insert(msg.end(), enc.begin(), enc.end());
    return msg;
}

void require_scheme(Scheme have, Scheme want, const char* what) {
    if (have != want) throw std::invalid_argument(std::string(what) + ": scheme tag mismatch");
}

}  // namespace

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::kEddsa:
            return "eddsa";
        case Scheme::kBls:
            return "bls";
    }
    return "unknown";
}

Scheme scheme_from_name(std::string_view name) {
    if (name == "eddsa" || name == "ed25519") return Scheme::kEddsa;
    if (name == "bls") return Scheme::kBls;
    throw std::invalid_argument("unknown scheme: " + std::string(name));
}

const bls::G1& SchemeParams::g1() const { return bls::g1_generator(); }
const bls::G2& SchemeParams::g2() const { return bls::g2_generator(); }

const bls::Fp12& SchemeParams::gt() const {
    static const bls::Fp12 v = bls::pairing(bls::g1_generator(), bls::g2_generator());
    return v;
}

const SchemeParams& setup(unsigned lambda) {
    if (lambda != 128) throw std::invalid_argument("unsupported security level");
    static const SchemeParams params = [] {
        SchemeParams p;
        p.security_level = 128;
        p.group_order = bls::Scalar::kOrder;
        p.g1_descriptor = "BLS12-381 G1, 48-byte compressed points";
        p.g2_descriptor = "BLS12-381 G2, 96-byte compressed points";
        p.gt_descriptor = "BLS12-381 GT, order-q subgroup of Fp12";
        p.hash_to_g1_dst = kSigDst;
        p.pop_dst = kPopDst;
        return p;
    }();
    return params;
}

Bytes SecretKey::to_bytes() const {
    if (scheme == Scheme::kBls) {
        auto be = bls_scalar.to_bytes_be();
        return Bytes(be.begin(), be.end());
    }
    return Bytes(ed.begin(), ed.begin() + ed25519::kSeedSize);
}

Bytes PublicKey::to_bytes() const {
    if (scheme == Scheme::kBls) {
        auto enc = bls::g2_compress(bls);
        return Bytes(enc.begin(), enc.end());
    }
    return Bytes(ed.begin(), ed.end());
}

bool PublicKey::from_bytes(Scheme scheme, BytesView bytes, PublicKey& out) {
    if (scheme == Scheme::kBls) {
        if (bytes.size() != kBlsPublicKeySize) return false;
        bls::G2 p;
        if (!bls::g2_decompress(bytes, p)) return false;
        out = PublicKey{Scheme::kBls, p, {}};
        return true;
    }
    if (bytes.size() != ed25519::kPublicKeySize) return false;
    out.scheme = Scheme::kEddsa;
    out.bls = bls::G2::identity();
    std::copy(bytes.begin(), bytes.end(), out.ed.begin());
    return true;
}

bool PublicKey::operator==(const PublicKey& o) const {
    if (scheme != o.scheme) return false;
    if (scheme == Scheme::kBls) return bls.equals(o.bls);
    return ed == o.ed;
}

Bytes SignatureValue::to_bytes() const {
    if (scheme == Scheme::kBls) {
        auto enc = bls::g1_compress(bls);
        return Bytes(enc.begin(), enc.end());
    }
    return Bytes(ed.begin(), ed.end());
}

bool SignatureValue::from_bytes(Scheme scheme, BytesView bytes, SignatureValue& out) {
    if (scheme == Scheme::kBls) {
        if (bytes.size() != kBlsSignatureSize) return false;
        bls::G1 p;
        if (!bls::g1_decompress(bytes, p)) return false;
        out = SignatureValue{Scheme::kBls, p, {}};
        return true;
    }
    if (bytes.size() != ed25519::kSignatureSize) return false;
    out.scheme = Scheme::kEddsa;
    out.bls = bls::G1::identity();
    std::copy(bytes.begin(), bytes.end(), out.ed.begin());
    return true;
}

bool SignatureValue::operator==(const SignatureValue& o) const {
    if (scheme != o.scheme) return false;
    if (scheme == Scheme::kBls) return bls.equals(o.bls);
    return ed == o.ed;
}

Keypair keygen(Scheme scheme, BytesView seed) {
    Keypair kp;
    if (scheme == Scheme::kBls) {
        // derive a nonzero scalar; the retry loop is unreachable in practice
        Bytes material = to_bytes("sigbft.bls.keygen.v1");
        material.insert(material.end(), seed.begin(), seed.end());
        material.push_back(0);
        bls::Scalar sk;
        for (int ctr = 0; ctr < 256; ++ctr) {
            material.back() = (uint8_t)ctr;
            auto wide = crypto::sha512(material);
            sk = bls::Scalar::from_bytes_be_reduce(BytesView(wide.data(), wide.size()));
            if (!sk.is_zero()) break;
        }
        kp.sk = SecretKey{Scheme::kBls, sk, {}};
        kp.pk = PublicKey{Scheme::kBls, bls::g2_generator().mul(sk), {}};
        return kp;
    }
    Bytes material = to_bytes("sigbft.ed25519.keygen.v1");
    material.insert(material.end(), seed.begin(), seed.end());
    auto seed32 = crypto::sha256(material);
    auto raw = ed25519::keygen(seed32);
    kp.sk = SecretKey{Scheme::kEddsa, {}, raw.sk};
    kp.pk = PublicKey{Scheme::kEddsa, bls::G2::identity(), raw.pk};
    return kp;
}

SignatureValue sign(const SecretKey& sk, BytesView msg) {
    if (sk.scheme == Scheme::kBls) {
        if (sk.bls_scalar.is_zero()) throw std::invalid_argument("sign: zero BLS secret key");
        bls::G1 h = bls::hash_to_g1(msg, sv_bytes(kSigDst));
        return SignatureValue{Scheme::kBls, h.mul(sk.bls_scalar), {}};
    }
    return SignatureValue{Scheme::kEddsa, bls::G1::identity(), ed25519::sign(sk.ed, msg)};
}

bool verify(const PublicKey& pk, const SignatureValue& sig, BytesView msg) {
    if (pk.scheme != sig.scheme) throw std::invalid_argument("verify: scheme tag mismatch");
    if (pk.scheme == Scheme::kBls) {
        // e(sig, g2) == e(H1(m), pk), checked as a two-pair product
        bls::G1 h = bls::hash_to_g1(msg, sv_bytes(kSigDst));
        return bls::pairing_product_is_one({
            {sig.bls.neg(), bls::g2_generator()},
            {h, pk.bls},
        });
    }
    return ed25519::verify(pk.ed, sig.ed, msg);
}

SignatureValue aggregate_signatures(std::span<const SignatureValue> sigs) {
    if (sigs.empty()) throw std::invalid_argument("aggregate_signatures: empty input");
    bls::G1 acc = bls::G1::identity();
    bool first = true;
    for (const auto& s : sigs) {
        require_scheme(s.scheme, Scheme::kBls, "aggregate_signatures");
        if (first) {
            acc = s.bls;
            first = false;
        } else {
            acc = bls::G1::add(acc, s.bls);
        }
    }
    return SignatureValue{Scheme::kBls, acc, {}};
}

AggregatePublicKey aggregate_keys(std::span<const PublicKey> pks) {
    if (pks.empty()) throw std::invalid_argument("aggregate_keys: empty input");
    AggregatePublicKey apk;
    bool first = true;
    for (const auto& pk : pks) {
        require_scheme(pk.scheme, Scheme::kBls, "aggregate_keys");
        if (first) {
            apk.point = pk.bls;
            first = false;
        } else {
            apk.point = bls::g2_counted_add(apk.point, pk.bls);
        }
    }
    apk.count = (uint32_t)pks.size();
    return apk;
}

PublicKey negate_key(const PublicKey& pk) {
    require_scheme(pk.scheme, Scheme::kBls, "negate_key");
    return PublicKey{Scheme::kBls, pk.bls.neg(), {}};
}

AggregatePublicKey disaggregate_keys(const AggregatePublicKey& apk,
                                     std::span<const PublicKey> negated) {
    if (negated.size() >= apk.count)
        throw std::invalid_argument("disaggregate_keys: removing all keys of the aggregate");
    AggregatePublicKey out = apk;
    for (const auto& nk : negated) {
        require_scheme(nk.scheme, Scheme::kBls, "disaggregate_keys");
        out.point = bls::g2_counted_add(out.point, nk.bls);
    }
    out.count = apk.count - (uint32_t)negated.size();
    return out;
}

bool msp_verify(const AggregatePublicKey& apk, const SignatureValue& sig, BytesView msg) {
    require_scheme(sig.scheme, Scheme::kBls, "msp_verify");
    bls::G1 h = bls::hash_to_g1(msg, sv_bytes(kSigDst));
    return bls::pairing_product_is_one({
        {sig.bls.neg(), bls::g2_generator()},
        {h, apk.point},
    });
}

std::vector<bool> batch_verify(std::span<const BatchEntry> entries) {
    if (entries.empty()) throw std::invalid_argument("batch_verify: empty input");
    std::vector<ed25519::BatchItem> items;
    items.reserve(entries.size());
    for (const auto& e : entries) {
        require_scheme(e.pk.scheme, Scheme::kEddsa, "batch_verify");
        require_scheme(e.sig.scheme, Scheme::kEddsa, "batch_verify");
        items.push_back({e.pk.ed, e.sig.ed, e.msg});
    }
    return ed25519::batch_verify(items);
}

ProofOfPossession prove_possession(const SecretKey& sk, const PublicKey& pk) {
    if (sk.scheme != pk.scheme) throw std::invalid_argument("prove_possession: scheme mismatch");
    if (sk.scheme == Scheme::kBls) {
        bls::G1 h = bls::hash_to_g1(pk.to_bytes(), sv_bytes(kPopDst));
        return ProofOfPossession{SignatureValue{Scheme::kBls, h.mul(sk.bls_scalar), {}}};
    }
    return ProofOfPossession{
        SignatureValue{Scheme::kEddsa, bls::G1::identity(), ed25519::sign(sk.ed, pop_message(pk))}};
}

bool verify_possession(const PublicKey& pk, const ProofOfPossession& pop) {
    if (pk.scheme != pop.sig.scheme) return false;
    if (pk.scheme == Scheme::kBls) {
        bls::G1 h = bls::hash_to_g1(pk.to_bytes(), sv_bytes(kPopDst));
        return bls::pairing_product_is_one({
            {pop.sig.bls.neg(), bls::g2_generator()},
            {h, pk.bls},
        });
    }
    return ed25519::verify(pk.ed, pop.sig.ed, pop_message(pk));
}

}  // namespace sigbft::crypto
