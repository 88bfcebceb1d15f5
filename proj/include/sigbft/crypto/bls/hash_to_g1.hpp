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

#include "sigbft/crypto/bls/g1.hpp"

namespace sigbft::bls {

// RFC 9380 expand_message_xmd with SHA-256.
Bytes expand_message_xmd(BytesView msg, BytesView dst, size_t len);

// Full hash_to_curve for G1, suite BLS12381G1_XMD:SHA-256_SSWU_RO_ with a
// caller-supplied domain separation tag.
G1 hash_to_g1(BytesView msg, BytesView dst);

}  // namespace sigbft::bls
