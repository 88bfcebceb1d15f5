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

#include "sigbft/certify/certify.hpp"
#include "sigbft/crypto/sha.hpp"

using namespace sigbft;
using namespace sigbft::certify;
using crypto::Scheme;

namespace {

struct Committee {
    std::vector<crypto::Keypair> kps;
    KeyCache cache;
};

Committee make_committee(Scheme scheme, uint32_t f, uint64_t seed_base = 0) {
    Committee c;
    uint32_t n = 3 * f + 1;
    std::vector<crypto::PublicKey> pks;
    for (uint32_t i = 0; i < n; ++i) {
        Bytes seed(8);
        uint64_t s = seed_base + i;
        for (int b = 0; b < 8; ++b) seed[b] = (uint8_t)(s >> (8 * b));
        c.kps.push_back(crypto::keygen(scheme, seed));
        pks.push_back(c.kps.back().pk);
    }
    c.cache = build_key_cache(pks, f);
    return c;
}

BlockDigest digest_of(std::string_view s) {
    return crypto::sha256(BytesView(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
}

std::vector<Vote> votes_from(const Committee& c, const std::vector<uint16_t>& voters,
                             uint64_t round, const BlockDigest& d) {
    std::vector<Vote> votes;
    for (uint16_t v : voters) votes.push_back(make_vote(c.kps[v].sk, v, round, d));
    return votes;
}

}  // namespace

TEST_CASE("build_key_cache shape and invariants") {
    auto c = make_committee(Scheme::kBls, 1);
    CHECK(c.cache.n == 4);
    CHECK(c.cache.apk.count == 4);

    // apk equals a fold of additions over the committee keys
    bls::G2 fold = c.cache.pks[0].bls;
    for (uint32_t i = 1; i < 4; ++i) fold = bls::G2::add(fold, c.cache.pks[i].bls);
    CHECK(c.cache.apk.point.equals(fold));

    // negated[i] + pks[i] == identity
    for (uint32_t i = 0; i < 4; ++i)
        CHECK(bls::G2::add(c.cache.negated[i].bls, c.cache.pks[i].bls).is_identity());

    // wrong committee size
    std::vector<crypto::PublicKey> five(c.cache.pks);
    five.push_back(crypto::keygen(Scheme::kBls, to_bytes("extra")).pk);
    CHECK_THROWS_AS(build_key_cache(five, 1), std::invalid_argument);

    // duplicate key
    std::vector<crypto::PublicKey> dup{c.cache.pks[0], c.cache.pks[1], c.cache.pks[2],
                                       c.cache.pks[0]};
    CHECK_THROWS_AS(build_key_cache(dup, 1), std::invalid_argument);
}

TEST_CASE("build_key_cache verifies proofs of possession at admission") {
    uint32_t f = 1;
    std::vector<std::pair<crypto::PublicKey, crypto::ProofOfPossession>> keys;
    std::vector<crypto::Keypair> kps;
    for (uint32_t i = 0; i < 3 * f + 1; ++i) {
        auto kp = crypto::keygen(Scheme::kBls, to_bytes("pop" + std::to_string(i)));
        keys.emplace_back(kp.pk, crypto::prove_possession(kp.sk, kp.pk));
        kps.push_back(kp);
    }
    auto cache = build_key_cache(keys, f);
    CHECK(cache.n == 4);

    // rogue key: pk_rogue = g2^x - pk_victim, attacker only knows x
    auto attacker = crypto::keygen(Scheme::kBls, to_bytes("attacker"));
    crypto::PublicKey rogue{Scheme::kBls,
                            bls::G2::add(attacker.pk.bls, kps[0].pk.bls.neg()), {}};
    auto bad = keys;
    bad[3] = {rogue, crypto::prove_possession(attacker.sk, rogue)};
    CHECK_THROWS_AS(build_key_cache(bad, f), std::invalid_argument);
}

TEST_CASE("votes roundtrip and cross checks") {
    auto c = make_committee(Scheme::kBls, 1);
    auto d = digest_of("block at round 3");
    Vote v = make_vote(c.kps[2].sk, 2, 3, d);
    CHECK(verify_vote(c.cache, v, d));

    // same block, different validators: same digest, different signatures
    Vote w = make_vote(c.kps[1].sk, 1, 3, d);
    CHECK(w.digest == v.digest);
    CHECK_FALSE(w.signature == v.signature);
    CHECK(verify_vote(c.cache, w, d));

    // wrong digest
    CHECK_FALSE(verify_vote(c.cache, v, digest_of("other block")));

    // vote signed with another validator's key
    Vote forged = make_vote(c.kps[0].sk, 2, 3, d);
    CHECK_FALSE(verify_vote(c.cache, forged, d));

    // out-of-range voter index
    Vote oob = v;
    oob.voter = 9;
    CHECK_FALSE(verify_vote(c.cache, oob, d));
}

TEST_CASE("assemble_certificate bitmap semantics") {
    auto c = make_committee(Scheme::kBls, 1);
    auto d = digest_of("round 7 proposal");

    // votes from {0,1,2}: bitmap has exactly bit 3 set
    auto cert = assemble_certificate(c.cache, votes_from(c, {0, 1, 2}, 7, d));
    CHECK(cert.non_signers.popcount() == 1);
    CHECK(cert.non_signers.get(3));
    CHECK(cert.contributors() == 3);
    CHECK(verify_certificate_cached(c.cache, cert));

    // all four vote: all-zero bitmap, dis-aggregation removes nothing
    auto full = assemble_certificate(c.cache, votes_from(c, {0, 1, 2, 3}, 7, d));
    CHECK(full.non_signers.popcount() == 0);
    bls::g2_reset_key_additions();
    CHECK(verify_certificate_cached(c.cache, full));
    CHECK(bls::g2_key_additions() == 0);

    // at quorum boundary: 2 votes with f=1 is rejected (quorum is 3)
    CHECK_THROWS_AS(assemble_certificate(c.cache, votes_from(c, {0, 1}, 7, d)),
                    std::invalid_argument);

    // duplicate voter
    auto dup = votes_from(c, {0, 1, 2}, 7, d);
    dup.push_back(dup[0]);
    CHECK_THROWS_AS(assemble_certificate(c.cache, dup), std::invalid_argument);

    // mixed digests
    auto mixed = votes_from(c, {0, 1}, 7, d);
    mixed.push_back(make_vote(c.kps[2].sk, 2, 7, digest_of("equivocation")));
    CHECK_THROWS_AS(assemble_certificate(c.cache, mixed), std::invalid_argument);
}

TEST_CASE("cached path performs exactly popcount(b) additions, at most f") {
    auto c = make_committee(Scheme::kBls, 2);  // n = 7
    auto d = digest_of("addition counting");

    // minimal quorum: popcount = f = 2
    auto cert = assemble_certificate(c.cache, votes_from(c, {0, 1, 2, 3, 4}, 1, d));
    CHECK(cert.non_signers.popcount() == 2);
    bls::g2_reset_key_additions();
    CHECK(verify_certificate_cached(c.cache, cert));
    CHECK(bls::g2_key_additions() == 2);

    // naive path recomputes the contributor aggregate: contributors - 1 adds
    bls::g2_reset_key_additions();
    CHECK(verify_certificate_naive(c.cache, cert));
    CHECK(bls::g2_key_additions() == cert.contributors() - 1);
}

TEST_CASE("corrupted certificates are rejected by both BLS paths") {
    auto c = make_committee(Scheme::kBls, 1);
    auto d = digest_of("to be corrupted");
    auto cert = assemble_certificate(c.cache, votes_from(c, {0, 1, 2}, 2, d));

    // replace the aggregate with one vote's signature
    Certificate bad = cert;
    bad.agg_sig = make_vote(c.kps[0].sk, 0, 2, d).signature;
    CHECK_FALSE(verify_certificate_cached(c.cache, bad));
    CHECK_FALSE(verify_certificate_naive(c.cache, bad));

    // wrong digest
    Certificate wrong = cert;
    wrong.digest = digest_of("replayed elsewhere");
    CHECK_FALSE(verify_certificate_cached(c.cache, wrong));
    CHECK_FALSE(verify_certificate_naive(c.cache, wrong));

    // sub-quorum bitmap (claim only 2 contributors)
    Certificate thin = cert;
    thin.non_signers.set(2);
    CHECK_FALSE(verify_certificate_cached(c.cache, thin));
    CHECK_FALSE(verify_certificate_naive(c.cache, thin));
}

TEST_CASE("cached and naive paths agree exhaustively at n=4") {
    auto c = make_committee(Scheme::kBls, 1);
    auto d = digest_of("exhaustive n=4");

    for (uint32_t mask = 1; mask < 16; ++mask) {
        std::vector<Vote> votes;
        SignerBitmap bm = SignerBitmap::zeros(4);
        for (uint16_t i = 0; i < 4; ++i) {
            if (mask >> i & 1)
                votes.push_back(make_vote(c.kps[i].sk, i, 1, d));
            else
                bm.set(i);
        }
        Certificate cert;
        cert.scheme = Scheme::kBls;
        cert.round = 1;
        cert.digest = d;
        std::vector<crypto::SignatureValue> sigs;
        for (auto& v : votes) sigs.push_back(v.signature);
        cert.agg_sig = crypto::aggregate_signatures(sigs);
        cert.non_signers = bm;

        bool cached = verify_certificate_cached(c.cache, cert);
        bool naive = verify_certificate_naive(c.cache, cert);
        CHECK(cached == naive);
        CHECK(cached == (votes.size() >= 3));  // accepted iff the quorum holds
    }
}

TEST_CASE("eddsa certificates verify via batch verification") {
    auto c = make_committee(Scheme::kEddsa, 1);
    auto d = digest_of("eddsa cert");

    auto cert = assemble_certificate(c.cache, votes_from(c, {0, 2, 3}, 4, d));
    CHECK(verify_certificate_eddsa(c.cache, cert));
    CHECK(cert.contributors() == 3);

    // one bad signature among the three
    Certificate bad = cert;
    bad.votes[1].second.ed[5] ^= 0x11;
    CHECK_FALSE(verify_certificate_eddsa(c.cache, bad));

    // duplicate voter index
    Certificate dup = cert;
    dup.votes[1].first = dup.votes[0].first;
    CHECK_FALSE(verify_certificate_eddsa(c.cache, dup));

    // sub-quorum
    Certificate thin = cert;
    thin.votes.pop_back();
    CHECK_FALSE(verify_certificate_eddsa(c.cache, thin));
}

TEST_CASE("eddsa certificate agrees with per-vote verification (n=13)") {
    auto c = make_committee(Scheme::kEddsa, 4, 40);  // n = 13
    auto d = digest_of("differential eddsa");
    std::vector<uint16_t> voters{0, 1, 2, 3, 5, 6, 8, 9, 11};
    auto cert = assemble_certificate(c.cache, votes_from(c, voters, 9, d));
    CHECK(verify_certificate_eddsa(c.cache, cert));
    for (const auto& [voter, sig] : cert.votes)
        CHECK(crypto::verify(c.cache.pks[voter], sig, BytesView(d.data(), d.size())));
}

TEST_CASE("certificate encoding sizes and roundtrip") {
    // BLS at n = 40: header + 48 + 5 bytes of bitmap
    auto cb = make_committee(Scheme::kBls, 13, 100);  // n = 40
    auto d = digest_of("sizes");
    std::vector<uint16_t> all(40);
    for (uint16_t i = 0; i < 40; ++i) all[i] = i;
    auto bls_cert = assemble_certificate(cb.cache, votes_from(cb, all, 11, d));
    Bytes bls_enc = encode_certificate(bls_cert);
    CHECK(bls_enc.size() == kCertificateHeaderSize + 48 + 5);
    CHECK(bls_enc.size() <= 128);

    Certificate bls_back;
    REQUIRE(decode_certificate(bls_enc, 40, bls_back));
    CHECK(bls_back.round == bls_cert.round);
    CHECK(bls_back.digest == bls_cert.digest);
    CHECK(bls_back.non_signers == bls_cert.non_signers);
    CHECK(bls_back.agg_sig == bls_cert.agg_sig);
    CHECK(verify_certificate_cached(cb.cache, bls_back));

    // EdDSA at n = 40, full participation: signature payload alone is 2560 B
    auto ce = make_committee(Scheme::kEddsa, 13, 200);
    auto ed_cert = assemble_certificate(ce.cache, votes_from(ce, all, 11, d));
    Bytes ed_enc = encode_certificate(ed_cert);
    CHECK(ed_enc.size() == kCertificateHeaderSize + 40 * (2 + 64));
    CHECK(40 * 64 == 2560);

    Certificate ed_back;
    REQUIRE(decode_certificate(ed_enc, 40, ed_back));
    CHECK(verify_certificate_eddsa(ce.cache, ed_back));

    // truncation and garbage are rejected
    Bytes trunc(bls_enc.begin(), bls_enc.end() - 1);
    Certificate out;
    CHECK_FALSE(decode_certificate(trunc, 40, out));
    Bytes longer = bls_enc;
    longer.push_back(0);
    CHECK_FALSE(decode_certificate(longer, 40, out));

    // bitmap length must match the committee size
    CHECK_FALSE(decode_certificate(bls_enc, 48, out));
}

TEST_CASE("decode enforces bitmap padding and voter ordering") {
    auto c = make_committee(Scheme::kBls, 1, 300);
    auto d = digest_of("padding");
    auto cert = assemble_certificate(c.cache, votes_from(c, {0, 1, 2, 3}, 1, d));
    Bytes enc = encode_certificate(cert);
    // set a padding bit beyond n=4 in the bitmap byte
    enc.back() |= 0x80;
    Certificate out;
    CHECK_FALSE(decode_certificate(enc, 4, out));

    auto ce = make_committee(Scheme::kEddsa, 1, 310);
    auto ecert = assemble_certificate(ce.cache, votes_from(ce, {0, 1, 2}, 1, d));
    Bytes eenc = encode_certificate(ecert);
    // swap the first two voter index fields to break the ascending order
    std::swap(eenc[kCertificateHeaderSize + 1], eenc[kCertificateHeaderSize + 67]);
    CHECK_FALSE(decode_certificate(eenc, 4, out));
}

TEST_CASE("encode/decode roundtrips on randomized certificates") {
    std::mt19937_64 rng(55);
    auto cb = make_committee(Scheme::kBls, 2, 400);    // n = 7
    auto ce = make_committee(Scheme::kEddsa, 2, 410);  // n = 7
    for (int trial = 0; trial < 10; ++trial) {
        auto d = digest_of("roundtrip " + std::to_string(rng()));
        std::vector<uint16_t> voters;
        for (uint16_t i = 0; i < 7; ++i) voters.push_back(i);
        std::shuffle(voters.begin(), voters.end(), rng);
        voters.resize(5 + rng() % 3);
        uint64_t round = rng() % 1000;

        auto bcert = assemble_certificate(cb.cache, votes_from(cb, voters, round, d));
        Certificate bback;
        REQUIRE(decode_certificate(encode_certificate(bcert), 7, bback));
        CHECK(encode_certificate(bback) == encode_certificate(bcert));
        CHECK(verify_certificate_cached(cb.cache, bback));

        auto ecert = assemble_certificate(ce.cache, votes_from(ce, voters, round, d));
        Certificate eback;
        REQUIRE(decode_certificate(encode_certificate(ecert), 7, eback));
        CHECK(encode_certificate(eback) == encode_certificate(ecert));
        CHECK(verify_certificate_eddsa(ce.cache, eback));
    }
}

TEST_CASE("index-based encoding saves exactly 32 bytes per signer") {
    for (uint32_t f : {1u, 4u, 13u}) {
        auto c = make_committee(Scheme::kEddsa, f, 500 + f);
        auto d = digest_of("saving");
        std::vector<uint16_t> voters;
        for (uint16_t i = 0; i < 2 * f + 1; ++i) voters.push_back(i);
        auto cert = assemble_certificate(c.cache, votes_from(c, voters, 1, d));
        Bytes indexed = encode_certificate(cert);
        Bytes embedded = encode_certificate_embedded_keys(cert, c.cache);
        CHECK(embedded.size() - indexed.size() == 32u * cert.contributors());
    }
}
