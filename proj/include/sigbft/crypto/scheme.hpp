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

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sigbft/crypto/bls/fp12.hpp"
#include "sigbft/crypto/bls/g1.hpp"
#include "sigbft/crypto/bls/g2.hpp"
#include "sigbft/crypto/bls/scalar.hpp"
#include "sigbft/crypto/ed25519.hpp"

namespace sigbft::crypto {

// Two interchangeable signature backends behind one runtime-tagged surface:
// an EdDSA scheme with batch verification and a BLS multi-signature scheme
// with key aggregation and dis-aggregation.
enum class Scheme : uint8_t { kEddsa = 1, kBls = 2 };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(std::string_view name);  // throws on unknown name

inline constexpr size_t kBlsPublicKeySize = 96;   // compressed G2
inline constexpr size_t kBlsSignatureSize = 48;   // compressed G1
inline constexpr size_t kBlsSecretKeySize = 32;   // big-endian scalar

// Public parameters of the BLS backend (the pairing groups); fixed to the
// BLS12-381 parameterization at security level 128.
struct SchemeParams {
    unsigned security_level = 128;
    std::array<uint64_t, 4> group_order;  // prime order q of G1, G2, GT
    std::string_view g1_descriptor;
    std::string_view g2_descriptor;
    std::string_view gt_descriptor;
    std::string_view hash_to_g1_dst;  // domain tag of H1 for message signing
    std::string_view pop_dst;         // domain tag for proofs of possession

    const bls::G1& g1() const;
    const bls::G2& g2() const;
    // canonical GT generator e(g1, g2); computed on first use, carried as
    // metadata only
    const bls::Fp12& gt() const;
};

// Deterministic; the only supported parameterization is lambda = 128.
// Throws std::invalid_argument for any other security level.
const SchemeParams& setup(unsigned lambda);

struct SecretKey {
    Scheme scheme = Scheme::kEddsa;
    bls::Scalar bls_scalar{};
    ed25519::SecretKeyBytes ed{};

    Bytes to_bytes() const;  // BLS: 32-byte scalar; EdDSA: 32-byte seed
};

struct PublicKey {
    Scheme scheme = Scheme::kEddsa;
    bls::G2 bls = bls::G2::identity();
    ed25519::PublicKeyBytes ed{};

    Bytes to_bytes() const;
    // validates encodings: on-curve, canonical, prime-order subgroup (BLS)
    static bool from_bytes(Scheme scheme, BytesView bytes, PublicKey& out);
    bool operator==(const PublicKey& o) const;
};

struct SignatureValue {
    Scheme scheme = Scheme::kEddsa;
    bls::G1 bls = bls::G1::identity();
    ed25519::SignatureBytes ed{};

    Bytes to_bytes() const;
    static bool from_bytes(Scheme scheme, BytesView bytes, SignatureValue& out);
    bool operator==(const SignatureValue& o) const;
};

struct AggregatePublicKey {
    bls::G2 point = bls::G2::identity();
    uint32_t count = 0;
};

struct ProofOfPossession {
    SignatureValue sig;
};

struct Keypair {
    PublicKey pk;
    SecretKey sk;
};

// Deterministic key derivation from an arbitrary seed (testing contract:
// the same seed always reproduces the same pair).
Keypair keygen(Scheme scheme, BytesView seed);

// Deterministic in both backends.
SignatureValue sign(const SecretKey& sk, BytesView msg);

// Scheme tags of pk and sig must match; throws on mismatch.
bool verify(const PublicKey& pk, const SignatureValue& sig, BytesView msg);

// BLS only; throws on empty input or EdDSA-tagged values.
SignatureValue aggregate_signatures(std::span<const SignatureValue> sigs);
AggregatePublicKey aggregate_keys(std::span<const PublicKey> pks);

// BLS only; group inverse, negate_key(negate_key(pk)) == pk.
PublicKey negate_key(const PublicKey& pk);

// apk * prod(negated[i]); performs exactly negated.size() group additions
// (observable through bls::g2_key_additions()). Throws when more keys are
// removed than the aggregate contains.
AggregatePublicKey disaggregate_keys(const AggregatePublicKey& apk,
                                     std::span<const PublicKey> negated);

bool msp_verify(const AggregatePublicKey& apk, const SignatureValue& sig, BytesView msg);

struct BatchEntry {
    PublicKey pk;
    SignatureValue sig;
    Bytes msg;
};

// EdDSA only; per-item results identical to verify() on every input.
std::vector<bool> batch_verify(std::span<const BatchEntry> entries);

ProofOfPossession prove_possession(const SecretKey& sk, const PublicKey& pk);
bool verify_possession(const PublicKey& pk, const ProofOfPossession& pop);

}  // namespace sigbft::crypto
