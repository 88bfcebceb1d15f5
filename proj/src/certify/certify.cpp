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

#include "sigbft/certify/certify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sigbft::certify {

namespace {

void check_committee_shape(size_t n_keys, uint32_t f) {
    if (n_keys != 3ull * f + 1)
        throw std::invalid_argument("build_key_cache: committee size must equal 3f+1");
    if (n_keys > 0xffff) throw std::invalid_argument("build_key_cache: committee too large");
}

KeyCache build_cache_trusted(std::span<const crypto::PublicKey> pks, uint32_t f) {
    check_committee_shape(pks.size(), f);
    KeyCache cache;
    cache.scheme = pks.front().scheme;
    cache.n = (uint32_t)pks.size();
    cache.f = f;
    cache.pks.assign(pks.begin(), pks.end());

    std::set<Bytes> seen;
    for (const auto& pk : pks) {
        if (pk.scheme != cache.scheme)
            throw std::invalid_argument("build_key_cache: mixed schemes");
        if (!seen.insert(pk.to_bytes()).second)
            throw std::invalid_argument("build_key_cache: duplicate public key");
    }

    if (cache.scheme == crypto::Scheme::kBls) {
        cache.apk = crypto::aggregate_keys(pks);
        cache.negated.reserve(pks.size());
        for (const auto& pk : pks) cache.negated.push_back(crypto::negate_key(pk));
    }
    return cache;
}

}  // namespace

KeyCache build_key_cache(std::span<const crypto::PublicKey> pks, uint32_t f) {
    return build_cache_trusted(pks, f);
}

KeyCache build_key_cache(
    std::span<const std::pair<crypto::PublicKey, crypto::ProofOfPossession>> keys, uint32_t f) {
    check_committee_shape(keys.size(), f);
    std::vector<crypto::PublicKey> pks;
    pks.reserve(keys.size());
    for (size_t i = 0; i < keys.size(); ++i) {
        if (!crypto::verify_possession(keys[i].first, keys[i].second))
            throw std::invalid_argument("build_key_cache: invalid proof of possession at index " +
                                        std::to_string(i));
        pks.push_back(keys[i].first);
    }
    return build_cache_trusted(pks, f);
}

Vote make_vote(const crypto::SecretKey& sk, uint16_t voter, uint64_t round,
               const BlockDigest& digest) {
    Vote v;
    v.round = round;
    v.digest = digest;
    v.voter = voter;
    v.signature = crypto::sign(sk, BytesView(digest.data(), digest.size()));
    return v;
}

bool verify_vote(const KeyCache& cache, const Vote& v, const BlockDigest& expected_digest) {
    if (v.voter >= cache.n) return false;
    if (v.digest != expected_digest) return false;
    if (v.signature.scheme != cache.scheme) return false;
    return crypto::verify(cache.pks[v.voter], v.signature,
                          BytesView(v.digest.data(), v.digest.size()));
}

Certificate assemble_certificate(const KeyCache& cache, std::span<const Vote> votes) {
    if (votes.size() < cache.quorum())
        throw std::invalid_argument("assemble_certificate: below quorum of 2f+1");

    Certificate c;
    c.scheme = cache.scheme;
    c.round = votes.front().round;
    c.digest = votes.front().digest;

    std::set<uint16_t> voters;
    for (const auto& v : votes) {
        if (v.round != c.round || v.digest != c.digest)
            throw std::invalid_argument("assemble_certificate: mixed rounds or digests");
        if (v.voter >= cache.n)
            throw std::invalid_argument("assemble_certificate: voter index out of range");
        if (!voters.insert(v.voter).second)
            throw std::invalid_argument("assemble_certificate: duplicate voter");
    }

    if (cache.scheme == crypto::Scheme::kBls) {
        std::vector<crypto::SignatureValue> sigs;
        sigs.reserve(votes.size());
        for (const auto& v : votes) sigs.push_back(v.signature);
        c.agg_sig = crypto::aggregate_signatures(sigs);
        c.non_signers = SignerBitmap::zeros(cache.n);
        for (uint32_t i = 0; i < cache.n; ++i)
            if (!voters.count((uint16_t)i)) c.non_signers.set(i);
    } else {
        for (const auto& v : votes) c.votes.emplace_back(v.voter, v.signature);
        std::sort(c.votes.begin(), c.votes.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return c;
}

bool verify_certificate_cached(const KeyCache& cache, const Certificate& c) {
    if (cache.scheme != crypto::Scheme::kBls || c.scheme != crypto::Scheme::kBls) return false;
    if (c.non_signers.size != cache.n) return false;
    if (!c.non_signers.padding_clear()) return false;
    uint32_t missing = c.non_signers.popcount();
    if (missing > cache.f) return false;  // below the 2f+1 quorum

    std::vector<crypto::PublicKey> removed;
    removed.reserve(missing);
    for (uint32_t i = 0; i < cache.n; ++i)
        if (c.non_signers.get(i)) removed.push_back(cache.negated[i]);

    crypto::AggregatePublicKey partial = crypto::disaggregate_keys(cache.apk, removed);
    return crypto::msp_verify(partial, c.agg_sig, BytesView(c.digest.data(), c.digest.size()));
}

bool verify_certificate_naive(const KeyCache& cache, const Certificate& c) {
    if (cache.scheme != crypto::Scheme::kBls || c.scheme != crypto::Scheme::kBls) return false;
    if (c.non_signers.size != cache.n) return false;
    if (!c.non_signers.padding_clear()) return false;
    if (c.non_signers.popcount() > cache.f) return false;

    std::vector<crypto::PublicKey> contributors;
    contributors.reserve(cache.n);
    for (uint32_t i = 0; i < cache.n; ++i)
        if (!c.non_signers.get(i)) contributors.push_back(cache.pks[i]);
    crypto::AggregatePublicKey apk = crypto::aggregate_keys(contributors);
    return crypto::msp_verify(apk, c.agg_sig, BytesView(c.digest.data(), c.digest.size()));
}

bool verify_certificate_eddsa(const KeyCache& cache, const Certificate& c) {
    if (cache.scheme != crypto::Scheme::kEddsa || c.scheme != crypto::Scheme::kEddsa) return false;
    if (c.votes.size() < cache.quorum() || c.votes.size() > cache.n) return false;

    std::vector<crypto::BatchEntry> entries;
    entries.reserve(c.votes.size());
    uint32_t prev = 0;
    bool first = true;
    for (const auto& [voter, sig] : c.votes) {
        if (voter >= cache.n) return false;
        if (!first && voter <= prev) return false;  // enforces distinct, sorted voters
        prev = voter;
        first = false;
        entries.push_back(
            {cache.pks[voter], sig, Bytes(c.digest.begin(), c.digest.end())});
    }
    auto results = crypto::batch_verify(entries);
    return std::all_of(results.begin(), results.end(), [](bool b) { return b; });
}

bool verify_certificate(const KeyCache& cache, const Certificate& c, BlsVerifyPath path) {
    if (cache.scheme == crypto::Scheme::kEddsa) return verify_certificate_eddsa(cache, c);
    return path == BlsVerifyPath::kCached ? verify_certificate_cached(cache, c)
                                          : verify_certificate_naive(cache, c);
}

Bytes encode_certificate(const Certificate& c) {
    Bytes out;
    out.push_back((uint8_t)c.scheme);
    put_u64_be(out, c.round);
    out.insert(out.end(), c.digest.begin(), c.digest.end());
    if (c.scheme == crypto::Scheme::kBls) {
        Bytes sig = c.agg_sig.to_bytes();
        out.insert(out.end(), sig.begin(), sig.end());
        out.insert(out.end(), c.non_signers.bits.begin(), c.non_signers.bits.end());
    } else {
        for (const auto& [voter, sig] : c.votes) {
            put_u16_be(out, voter);
            Bytes s = sig.to_bytes();
            out.insert(out.end(), s.begin(), s.end());
        }
    }
    return out;
}

bool decode_certificate(BytesView bytes, uint32_t n, Certificate& out) {
    try {
        ByteReader r(bytes);
        uint8_t tag = r.u8();
        Certificate c;
        c.round = r.u64_be();
        c.digest = r.take_array<32>();
        if (tag == (uint8_t)crypto::Scheme::kBls) {
            c.scheme = crypto::Scheme::kBls;
            Bytes sig = r.take(crypto::kBlsSignatureSize);
            if (!crypto::SignatureValue::from_bytes(crypto::Scheme::kBls, sig, c.agg_sig))
                return false;
            size_t bitmap_len = (n + 7) / 8;
            if (r.remaining() != bitmap_len) return false;
            c.non_signers.size = n;
            c.non_signers.bits = r.take(bitmap_len);
            if (!c.non_signers.padding_clear()) return false;
        } else if (tag == (uint8_t)crypto::Scheme::kEddsa) {
            c.scheme = crypto::Scheme::kEddsa;
            const size_t entry = 2 + crypto::ed25519::kSignatureSize;
            if (r.remaining() % entry != 0) return false;
            size_t m = r.remaining() / entry;
            if (m == 0 || m > n) return false;
            uint32_t prev = 0;
            bool first = true;
            for (size_t i = 0; i < m; ++i) {
                uint16_t voter = r.u16_be();
                if (voter >= n) return false;
                if (!first && voter <= prev) return false;
                prev = voter;
                first = false;
                Bytes sig = r.take(crypto::ed25519::kSignatureSize);
                crypto::SignatureValue sv;
                if (!crypto::SignatureValue::from_bytes(crypto::Scheme::kEddsa, sig, sv))
                    return false;
                c.votes.emplace_back(voter, sv);
            }
        } else {
            return false;
        }
        if (r.remaining() != 0) return false;
        out = std::move(c);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

Bytes encode_certificate_embedded_keys(const Certificate& c, const KeyCache& cache) {
    if (c.scheme != crypto::Scheme::kEddsa)
        throw std::invalid_argument("embedded-key encoding applies to the EdDSA format");
    Bytes out;
    out.push_back((uint8_t)c.scheme | 0x80);  // distinct tag keeps encodings injective
    put_u64_be(out, c.round);
    out.insert(out.end(), c.digest.begin(), c.digest.end());
    for (const auto& [voter, sig] : c.votes) {
        put_u16_be(out, voter);
        Bytes pk = cache.pks[voter].to_bytes();
        out.insert(out.end(), pk.begin(), pk.end());
        Bytes s = sig.to_bytes();
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

}  // namespace sigbft::certify
