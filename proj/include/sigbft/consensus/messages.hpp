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

#include <memory>

#include "sigbft/consensus/block.hpp"

namespace sigbft::consensus {

enum class MsgType : uint8_t {
    kProposal = 1,
    kVote = 2,
    kCertificate = 3,
    kTimeout = 4,
    kSyncRequest = 5,
    kSyncResponse = 6,
};

// One network message. Blocks travel by shared pointer so a broadcast of a
// large payload is not copied per receiver; the wire size is still accounted
// from the canonical encoding.
struct Message {
    MsgType type = MsgType::kTimeout;
    std::shared_ptr<const Block> block;             // kProposal, kSyncResponse
    certify::Vote vote;                             // kVote
    std::shared_ptr<const certify::Certificate> cert;  // kCertificate, kSyncResponse
    uint64_t round = 0;                             // kTimeout
    BlockDigest want{};                             // kSyncRequest

    Bytes encode() const;
    size_t encoded_size() const;  // matches encode().size() without materializing

    // Context needed to parse: the committee scheme and size.
    static bool decode(BytesView bytes, crypto::Scheme scheme, uint32_t n, Message& out);
};

Message proposal_message(std::shared_ptr<const Block> block);
Message vote_message(const certify::Vote& v);
Message certificate_message(std::shared_ptr<const certify::Certificate> cert);
Message timeout_message(uint64_t round);
Message sync_request_message(const BlockDigest& want);
Message sync_response_message(std::shared_ptr<const Block> block,
                              std::shared_ptr<const certify::Certificate> cert_or_null);

}  // namespace sigbft::consensus
