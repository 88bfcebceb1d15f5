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

#include "sigbft/consensus/messages.hpp"

namespace sigbft::consensus {

namespace {

size_t sig_size(crypto::Scheme s) {
    return s == crypto::Scheme::kBls ? crypto::kBlsSignatureSize : crypto::ed25519::kSignatureSize;
}

void append_block(Bytes& out, const Block& b) {
    Bytes canonical = b.canonical_bytes();
    out.insert(out.end(), canonical.begin(), canonical.end());
    Bytes sig = b.leader_sig.to_bytes();
    out.insert(out.end(), sig.begin(), sig.end());
}

bool read_block(ByteReader& r, crypto::Scheme scheme, Block& b) {
    try {
        b.round = r.u64_be();
        uint32_t len = r.u32_be();
        b.payload = r.take(len);
        b.parent = r.take_array<32>();
        b.leader = r.u16_be();
        Bytes sig = r.take(sig_size(scheme));
        return crypto::SignatureValue::from_bytes(scheme, sig, b.leader_sig);
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace

Bytes Message::encode() const {
    Bytes out;
    out.push_back((uint8_t)type);
    switch (type) {
        case MsgType::kProposal:
            append_block(out, *block);
            break;
        case MsgType::kVote: {
            put_u64_be(out, vote.round);
            out.insert(out.end(), vote.digest.begin(), vote.digest.end());
            put_u16_be(out, vote.voter);
            Bytes sig = vote.signature.to_bytes();
            out.insert(out.end(), sig.begin(), sig.end());
            break;
        }
        case MsgType::kCertificate: {
            Bytes enc = certify::encode_certificate(*cert);
            out.insert(out.end(), enc.begin(), enc.end());
            break;
        }
        case MsgType::kTimeout:
            put_u64_be(out, round);
            break;
        case MsgType::kSyncRequest:
            out.insert(out.end(), want.begin(), want.end());
            break;
        case MsgType::kSyncResponse: {
            out.push_back(cert ? 1 : 0);
            append_block(out, *block);
            if (cert) {
                Bytes enc = certify::encode_certificate(*cert);
                out.insert(out.end(), enc.begin(), enc.end());
            }
            break;
        }
    }
    return out;
}

size_t Message::encoded_size() const {
    switch (type) {
        case MsgType::kProposal:
            return 1 + block->canonical_size() + sig_size(block->leader_sig.scheme);
        case MsgType::kVote:
            return 1 + 8 + 32 + 2 + sig_size(vote.signature.scheme);
        case MsgType::kCertificate: {
            if (cert->scheme == crypto::Scheme::kBls)
                return 1 + certify::kCertificateHeaderSize + crypto::kBlsSignatureSize +
                       cert->non_signers.bits.size();
            return 1 + certify::kCertificateHeaderSize +
                   cert->votes.size() * (2 + crypto::ed25519::kSignatureSize);
        }
        case MsgType::kTimeout:
            return 1 + 8;
        case MsgType::kSyncRequest:
            return 1 + 32;
        case MsgType::kSyncResponse: {
            size_t sz = 2 + block->canonical_size() + sig_size(block->leader_sig.scheme);
            if (cert) {
                sz += cert->scheme == crypto::Scheme::kBls
                          ? certify::kCertificateHeaderSize + crypto::kBlsSignatureSize +
                                cert->non_signers.bits.size()
                          : certify::kCertificateHeaderSize +
                                cert->votes.size() * (2 + crypto::ed25519::kSignatureSize);
            }
            return sz;
        }
    }
    return 0;
}

bool Message::decode(BytesView bytes, crypto::Scheme scheme, uint32_t n, Message& out) {
    try {
        ByteReader r(bytes);
        uint8_t tag = r.u8();
        Message m;
        switch (tag) {
            case (uint8_t)MsgType::kProposal: {
                m.type = MsgType::kProposal;
                Block b;
                if (!read_block(r, scheme, b)) return false;
                m.block = std::make_shared<Block>(std::move(b));
                break;
            }
            case (uint8_t)MsgType::kVote: {
                m.type = MsgType::kVote;
                m.vote.round = r.u64_be();
                m.vote.digest = r.take_array<32>();
                m.vote.voter = r.u16_be();
                Bytes sig = r.take(sig_size(scheme));
                if (!crypto::SignatureValue::from_bytes(scheme, sig, m.vote.signature))
                    return false;
                break;
            }
            case (uint8_t)MsgType::kCertificate: {
                m.type = MsgType::kCertificate;
                certify::Certificate c;
                if (!certify::decode_certificate(
                        BytesView(bytes.data() + 1, bytes.size() - 1), n, c))
                    return false;
                m.cert = std::make_shared<certify::Certificate>(std::move(c));
                r.pos = bytes.size();
                break;
            }
            case (uint8_t)MsgType::kTimeout:
                m.type = MsgType::kTimeout;
                m.round = r.u64_be();
                break;
            case (uint8_t)MsgType::kSyncRequest:
                m.type = MsgType::kSyncRequest;
                m.want = r.take_array<32>();
                break;
            case (uint8_t)MsgType::kSyncResponse: {
                m.type = MsgType::kSyncResponse;
                uint8_t has_cert = r.u8();
                Block b;
                if (!read_block(r, scheme, b)) return false;
                m.block = std::make_shared<Block>(std::move(b));
                if (has_cert) {
                    certify::Certificate c;
                    if (!certify::decode_certificate(
                            BytesView(bytes.data() + r.pos, bytes.size() - r.pos), n, c))
                        return false;
                    m.cert = std::make_shared<certify::Certificate>(std::move(c));
                    r.pos = bytes.size();
                }
                break;
            }
            default:
                return false;
        }
        if (r.remaining() != 0) return false;
        out = std::move(m);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

Message proposal_message(std::shared_ptr<const Block> block) {
    Message m;
    m.type = MsgType::kProposal;
    m.block = std::move(block);
    return m;
}

Message vote_message(const certify::Vote& v) {
    Message m;
    m.type = MsgType::kVote;
    m.vote = v;
    return m;
}

Message certificate_message(std::shared_ptr<const certify::Certificate> cert) {
    Message m;
    m.type = MsgType::kCertificate;
    m.cert = std::move(cert);
    return m;
}

Message timeout_message(uint64_t round) {
    Message m;
    m.type = MsgType::kTimeout;
    m.round = round;
    return m;
}

Message sync_request_message(const BlockDigest& want) {
    Message m;
    m.type = MsgType::kSyncRequest;
    m.want = want;
    return m;
}

Message sync_response_message(std::shared_ptr<const Block> block,
                              std::shared_ptr<const certify::Certificate> cert_or_null) {
    Message m;
    m.type = MsgType::kSyncResponse;
    m.block = std::move(block);
    m.cert = std::move(cert_or_null);
    return m;
}

}  // namespace sigbft::consensus
