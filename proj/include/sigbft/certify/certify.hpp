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

#include "sigbft/crypto/scheme.hpp"

namespace sigbft::certify {

using BlockDigest = std::array<uint8_t, 32>;

struct Vote {
    uint64_t round = 0;
    BlockDigest digest{};
    uint16_t voter = 0;
    crypto::SignatureValue signature;
};

// Bit i set means validator i did NOT contribute to the certificate.
// Little-endian bit order within bytes, zero-padded to ceil(n/8) bytes.
struct SignerBitmap {
    uint32_t size = 0;
    Bytes bits;

    static SignerBitmap zeros(uint32_t n) {
        return SignerBitmap{n, Bytes((n + 7) / 8, 0)};
    }
    void set(uint32_t i) { bits[i / 8] |= (uint8_t)(1u << (i % 8)); }
    bool get(uint32_t i) const { return bits[i / 8] >> (i % 8) & 1; }
    uint32_t popcount() const {
        uint32_t c = 0;
        for (uint8_t b : bits) c += (uint32_t)__builtin_popcount(b);
        return c;
    }
    bool padding_clear() const {
        for (uint32_t i = size; i < 8 * bits.size(); ++i)
            if (bits[i / 8] >> (i % 8) & 1) return false;
        return true;
    }
    bool operator==(const SignerBitmap&) const = default;
};

// Quorum certificate: one aggregated signature plus the non-signer bitmap
// (BLS), or the list of individual votes by index (EdDSA).
struct Certificate {
    crypto::Scheme scheme = crypto::Scheme::kEddsa;
    uint64_t round = 0;
    BlockDigest digest{};

    // BLS payload
    crypto::SignatureValue agg_sig;
    SignerBitmap non_signers;

    // EdDSA payload, strictly ascending voter indices
    std::vector<std::pair<uint16_t, crypto::SignatureValue>> votes;

    uint32_t contributors() const {
        return scheme == crypto::Scheme::kBls ? non_signers.size - non_signers.popcount()
                                              : (uint32_t)votes.size();
    }
};

// Per-committee verification state: ordered public keys, the full aggregate
// key, and the negated per-validator keys used by dis-aggregation.
struct KeyCache {
    crypto::Scheme scheme = crypto::Scheme::kEddsa;
    uint32_t n = 0;
    uint32_t f = 0;
    std::vector<crypto::PublicKey> pks;
    crypto::AggregatePublicKey apk;           // BLS only
    std::vector<crypto::PublicKey> negated;   // BLS only

    uint32_t quorum() const { return 2 * f + 1; }
};

// Committee admission: indices are assigned by position in `pks`.
// Preconditions checked: |pks| == 3f + 1, uniform scheme, no duplicate keys.
// This overload trusts that proofs of possession were checked upstream.
KeyCache build_key_cache(std::span<const crypto::PublicKey> pks, uint32_t f);

// Admission with rogue-key defense: every key must come with a valid proof
// of possession or the whole cache is rejected.
KeyCache build_key_cache(
    std::span<const std::pair<crypto::PublicKey, crypto::ProofOfPossession>> keys, uint32_t f);

Vote make_vote(const crypto::SecretKey& sk, uint16_t voter, uint64_t round,
               const BlockDigest& digest);

bool verify_vote(const KeyCache& cache, const Vote& v, const BlockDigest& expected_digest);

// Requires >= 2f+1 verified votes over one (round, digest) with distinct
// voters; throws std::invalid_argument otherwise.
Certificate assemble_certificate(const KeyCache& cache, std::span<const Vote> votes);

// BLS path using the cached aggregate key: dis-aggregates exactly
// popcount(bitmap) negated keys (at most f for any valid certificate), then
// checks the pairing equation once.
bool verify_certificate_cached(const KeyCache& cache, const Certificate& c);

// BLS baseline that recomputes the aggregate key of the contributor set from
// scratch on every call (contributors - 1 group additions).
bool verify_certificate_naive(const KeyCache& cache, const Certificate& c);

// EdDSA path: batch verification of the listed votes.
bool verify_certificate_eddsa(const KeyCache& cache, const Certificate& c);

enum class BlsVerifyPath { kCached, kNaive };

// Scheme dispatch used by the consensus layer.
bool verify_certificate(const KeyCache& cache, const Certificate& c,
                        BlsVerifyPath path = BlsVerifyPath::kCached);

// Wire format: [1 B scheme tag][8 B round BE][32 B digest][payload].
// BLS payload: 48 B signature || ceil(n/8) B bitmap.
// EdDSA payload: contributors x (2 B index BE || 64 B signature).
Bytes encode_certificate(const Certificate& c);
bool decode_certificate(BytesView bytes, uint32_t n, Certificate& out);

// Comparison-only EdDSA encoding that embeds each signer's public key next
// to its index, the straightforward layout the bitmap approach replaces:
// header || contributors x (2 B index || 32 B public key || 64 B signature).
Bytes encode_certificate_embedded_keys(const Certificate& c, const KeyCache& cache);

inline constexpr size_t kCertificateHeaderSize = 1 + 8 + 32;

}  // namespace sigbft::certify
